"""Helpers shared by the geometry tests: single-step corruptions.

Each helper returns a new IncidenceGeometry one mutation away from the
input; the validators must flag every one of them.
"""

from qproj.geometry import IncidenceGeometry


def drop_subspace(g: IncidenceGeometry, idx: int) -> IncidenceGeometry:
    return IncidenceGeometry(
        g.points,
        tuple(m for i, m in enumerate(g.subspaces) if i != idx),
        tuple(d for i, d in enumerate(g.dims) if i != idx),
        g.claimed_order)


def delete_point(g: IncidenceGeometry, bit: int) -> IncidenceGeometry:
    """Excise one point from P and from every subspace, leaving L otherwise fixed."""
    keep = [i for i in range(len(g.points)) if i != bit]
    remap = {old: new for new, old in enumerate(keep)}
    masks = []
    for m in g.subspaces:
        nm = 0
        for i in keep:
            if m >> i & 1:
                nm |= 1 << remap[i]
        masks.append(nm)
    return IncidenceGeometry(
        tuple(g.points[i] for i in keep), tuple(masks), g.dims, g.claimed_order)


def perturb_dim(g: IncidenceGeometry, idx: int, delta: int = 1) -> IncidenceGeometry:
    dims = list(g.dims)
    dims[idx] += delta
    return IncidenceGeometry(g.points, g.subspaces, tuple(dims), g.claimed_order)


def standard_mutations(fano, p2f3, boolean4):
    """A labeled batch of distinct single-mutation corruptions."""
    cases = []
    fano_lines = [i for i, d in enumerate(fano.dims) if d == 1]
    for i in fano_lines:
        cases.append((f"fano minus line {i}", drop_subspace(fano, i)))
    for b in range(3):
        cases.append((f"fano minus point {b}", delete_point(fano, b)))
    cases.append(("fano line dim bumped", perturb_dim(fano, fano_lines[0])))
    p3_line = next(i for i, d in enumerate(p2f3.dims) if d == 1)
    cases.append(("P2(F3) minus line", drop_subspace(p2f3, p3_line)))
    b4_pair = next(i for i, m in enumerate(boolean4.subspaces)
                   if m.bit_count() == 2)
    cases.append(("Boolean(4) pair dim bumped", perturb_dim(boolean4, b4_pair)))
    return cases
