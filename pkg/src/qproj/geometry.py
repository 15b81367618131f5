"""Finite incidence geometries: constructors and axiom validators.

A geometry is a finite point set P, a family L of subsets of P called
subspaces, and a dimension value for each member of L.  The family is
stored as bitmasks over the point index space, and all meets and joins
are computed lattice-theoretically from L itself (greatest lower bound
and least upper bound under containment), never from coordinates, so
the validators apply to hand-entered geometries as well as constructed
ones.

The six axioms checked by validate_axioms:

  1. every pair of subspaces has a greatest lower bound (meet) and a
     least upper bound (join) within L under containment;
  2. dim is strictly increasing on proper containment;
  3. the empty set and every singleton belong to L;
  4. dim(S) = -1 exactly for S empty, dim(S) = 0 exactly for singletons;
  5. the modular law dim(S) + dim(T) = dim(meet) + dim(join);
  6. every dim-1 subspace (line) has exactly q + 1 points, for a single
     consistent order q, matching the claimed order when one is given.

Projective spaces over F_q deliver such geometries for prime powers q;
the power set of an n-element set (a Boolean algebra, with dim = size
minus one) delivers exactly the order-1 case, which is the reason this
validator treats q = 1 as a first-class citizen.  Order 0 is out of
scope and rejected at input validation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import BudgetExceeded, GeometryFormatError
from .gf import FiniteField, make_field
from .linalg import SubspaceCanonical, enumerate_subspaces
from .qcalc import q_binomial_recurrence, q_integer

DEFAULT_BOOLEAN_CAP = 12
DEFAULT_COLLINEATION_CAP = 9
DEFAULT_GEOMETRY_BUDGET = 10 ** 6


@dataclass(frozen=True)
class IncidenceGeometry:
    """Plain container; constructors guarantee the axioms, validators check them.

    subspaces[i] is a bitmask over point indices; dims[i] is its declared
    dimension.  Nothing is enforced here beyond structural sanity, since
    the validators must be able to inspect corrupted geometries.
    """

    points: tuple[str, ...]
    subspaces: tuple[int, ...]
    dims: tuple[int, ...]
    claimed_order: int | None = None

    def __post_init__(self):
        if len(self.subspaces) != len(self.dims):
            raise ValueError("subspaces and dims must have equal length")
        if len(set(self.points)) != len(self.points):
            raise ValueError("duplicate point identifiers")

    @classmethod
    def from_point_sets(cls, points: Sequence[str],
                        subspace_specs: Iterable[tuple[int, Iterable[str]]],
                        claimed_order: int | None = None) -> "IncidenceGeometry":
        points = tuple(points)
        index = {name: i for i, name in enumerate(points)}
        masks, dims = [], []
        for dim, names in subspace_specs:
            mask = 0
            for name in names:
                mask |= 1 << index[name]
            masks.append(mask)
            dims.append(dim)
        return cls(points, tuple(masks), tuple(dims), claimed_order)

    def subspace_point_names(self, i: int) -> tuple[str, ...]:
        mask = self.subspaces[i]
        return tuple(self.points[b] for b in range(len(self.points)) if mask >> b & 1)

    def describe_subspace(self, i: int) -> str:
        names = ",".join(self.subspace_point_names(i))
        return f"{{{names}}}(dim {self.dims[i]})"


# ---------------------------------------------------------------------------
# lattice machinery

class _Lattice:
    """Containment structure of a subspace family, with meet/join search.

    The greatest lower bound of S and T, when it exists, must equal the
    union of all lower bounds (it is a lower bound dominating the rest),
    and dually the least upper bound must equal the intersection of all
    upper bounds; each therefore exists iff that union/intersection is
    itself a member of L.  Fast path: if the plain set intersection
    (resp. union) of S and T is in L it is automatically the meet
    (resp. join).
    """

    def __init__(self, g: IncidenceGeometry):
        self.g = g
        self.masks = g.subspaces
        self.dims = g.dims
        ns = len(self.masks)
        self.index_of: dict[int, int] = {}
        for idx, m in enumerate(self.masks):
            self.index_of.setdefault(m, idx)
        containers: list[list[int]] = [[] for _ in range(ns)]
        contained: list[list[int]] = [[] for _ in range(ns)]
        masks = self.masks
        for i in range(ns):
            mi = masks[i]
            for j in range(ns):
                if mi & masks[j] == mi:
                    containers[i].append(j)
                    contained[j].append(i)
        self.containers = containers
        self.contained = contained

    def meet_index(self, i: int, j: int) -> int | None:
        masks = self.masks
        inter = masks[i] & masks[j]
        idx = self.index_of.get(inter)
        if idx is not None:
            return idx
        mj = masks[j]
        union = 0
        for k in self.contained[i]:
            mk = masks[k]
            if mk & mj == mk:
                union |= mk
        # union of all lower bounds: the meet iff it is itself in L
        # (when no lower bound exists, union is 0 and 0 is in L only if
        # the empty set is, in which case it would have been a lower bound)
        return self.index_of.get(union)

    def join_index(self, i: int, j: int) -> int | None:
        masks = self.masks
        uni = masks[i] | masks[j]
        idx = self.index_of.get(uni)
        if idx is not None:
            return idx
        ci, cj = self.containers[i], self.containers[j]
        scan = ci if len(ci) <= len(cj) else cj
        inter = None
        for k in scan:
            mk = masks[k]
            if mk & uni == uni:
                inter = mk if inter is None else inter & mk
        if inter is None:
            return None
        return self.index_of.get(inter)


@dataclass(frozen=True)
class AxiomResult:
    number: int
    description: str
    passed: bool
    witness: str | None = None


@dataclass(frozen=True)
class AxiomReport:
    axioms: tuple[AxiomResult, ...]
    order: int | None       # inferred from line sizes, else the claimed order
    dimension: int | None   # dim of the full point set, if it is in L

    @property
    def passed(self) -> bool:
        return all(a.passed for a in self.axioms)

    def as_dict(self) -> dict:
        return {
            "axioms": [
                {"number": a.number, "description": a.description,
                 "passed": a.passed, "witness": a.witness}
                for a in self.axioms
            ],
            "order": self.order,
            "dimension": self.dimension,
            "passed": self.passed,
        }


_AXIOM_DESCRIPTIONS = {
    1: "meets and joins exist within L (lattice closure)",
    2: "dim is strictly increasing on proper containment",
    3: "the empty set and all singletons belong to L",
    4: "dim = -1 exactly on the empty set, dim = 0 exactly on singletons",
    5: "modular law: dim(S) + dim(T) = dim(meet) + dim(join)",
    6: "every line has exactly q + 1 points for one consistent order q",
}


def _inferred_order(g: IncidenceGeometry) -> int | None:
    for i, d in enumerate(g.dims):
        if d == 1:
            return g.subspaces[i].bit_count() - 1
    return g.claimed_order


def _geometry_dimension(g: IncidenceGeometry) -> int | None:
    full = (1 << len(g.points)) - 1
    for i, m in enumerate(g.subspaces):
        if m == full:
            return g.dims[i]
    return None


def validate_axioms(g: IncidenceGeometry) -> AxiomReport:
    """Check all six axioms; failures are reported with a witness, never thrown.

    Witnesses are the first counterexample in canonical order (subspace
    index order, pairs with i <= j), so reports are deterministic.
    """
    lat = _Lattice(g)
    masks, dims = g.subspaces, g.dims
    ns = len(masks)

    # axioms 1 and 5 share the pair loop
    ax1_witness = None
    ax5_witness = None
    for i in range(ns):
        for j in range(i, ns):
            meet = lat.meet_index(i, j)
            join = lat.join_index(i, j)
            if (meet is None or join is None):
                if ax1_witness is None:
                    missing = "meet" if meet is None else "join"
                    ax1_witness = (f"no {missing} in L for S={g.describe_subspace(i)}"
                                   f" and T={g.describe_subspace(j)}")
            elif ax5_witness is None:
                if dims[i] + dims[j] != dims[meet] + dims[join]:
                    ax5_witness = (
                        f"S={g.describe_subspace(i)}, T={g.describe_subspace(j)}: "
                        f"{dims[i]} + {dims[j]} != {dims[meet]} + {dims[join]} "
                        f"(meet {g.describe_subspace(meet)}, join {g.describe_subspace(join)})")
            if ax1_witness and ax5_witness:
                break
        if ax1_witness and ax5_witness:
            break

    ax2_witness = None
    for i in range(ns):
        for j in lat.containers[i]:
            if masks[i] != masks[j] and dims[i] >= dims[j]:
                ax2_witness = (f"{g.describe_subspace(i)} is properly contained in "
                               f"{g.describe_subspace(j)} but dim does not increase")
                break
        if ax2_witness:
            break

    ax3_witness = None
    if 0 not in lat.index_of:
        ax3_witness = "the empty set is not in L"
    else:
        for b, name in enumerate(g.points):
            if (1 << b) not in lat.index_of:
                ax3_witness = f"singleton {{{name}}} is not in L"
                break

    ax4_witness = None
    for i in range(ns):
        size = masks[i].bit_count()
        if (dims[i] == -1) != (size == 0) or (dims[i] == 0) != (size == 1):
            ax4_witness = f"{g.describe_subspace(i)} has {size} point(s)"
            break

    ax6_witness = None
    line_sizes = [(i, masks[i].bit_count()) for i in range(ns) if dims[i] == 1]
    inferred = None
    if line_sizes:
        first_i, first_size = line_sizes[0]
        inferred = first_size - 1
        for i, size in line_sizes:
            if size != first_size:
                ax6_witness = (f"line {g.describe_subspace(i)} has {size} points but "
                               f"line {g.describe_subspace(first_i)} has {first_size}")
                break
        if ax6_witness is None and inferred < 1:
            ax6_witness = (f"line {g.describe_subspace(first_i)} has {first_size} "
                           f"point(s); inferred order {inferred} is out of scope")
        if ax6_witness is None and g.claimed_order is not None \
                and g.claimed_order != inferred:
            ax6_witness = (f"lines have {first_size} points (order {inferred}) but "
                           f"the claimed order is {g.claimed_order}")

    witnesses = {1: ax1_witness, 2: ax2_witness, 3: ax3_witness,
                 4: ax4_witness, 5: ax5_witness, 6: ax6_witness}
    axioms = tuple(
        AxiomResult(k, _AXIOM_DESCRIPTIONS[k], witnesses[k] is None, witnesses[k])
        for k in range(1, 7))
    order = inferred if line_sizes else g.claimed_order
    return AxiomReport(axioms=axioms, order=order, dimension=_geometry_dimension(g))


# ---------------------------------------------------------------------------
# consequences of the axioms (checked exhaustively on a validated geometry)

@dataclass(frozen=True)
class PropertyResult:
    number: int
    description: str
    passed: bool
    witness: str | None = None


@dataclass(frozen=True)
class DerivedPropertiesReport:
    properties: tuple[PropertyResult, ...]

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.properties)

    def as_dict(self) -> dict:
        return {
            "properties": [
                {"number": p.number, "description": p.description,
                 "passed": p.passed, "witness": p.witness}
                for p in self.properties
            ],
            "passed": self.passed,
        }


def _restriction(g: IncidenceGeometry, i: int,
                 claimed: int | None) -> IncidenceGeometry:
    mask = g.subspaces[i]
    bits = [b for b in range(len(g.points)) if mask >> b & 1]
    reindex = {b: t for t, b in enumerate(bits)}
    sub_points = tuple(g.points[b] for b in bits)
    sub_masks, sub_dims = [], []
    for j, mj in enumerate(g.subspaces):
        if mj & mask == mj:
            nm = 0
            for b in range(len(g.points)):
                if mj >> b & 1:
                    nm |= 1 << reindex[b]
            sub_masks.append(nm)
            sub_dims.append(g.dims[j])
    return IncidenceGeometry(sub_points, tuple(sub_masks), tuple(sub_dims), claimed)


def check_derived_properties(g: IncidenceGeometry) -> DerivedPropertiesReport:
    """Exhaustively verify five structural consequences of the axioms.

    Requires a geometry that already passes validate_axioms; on corrupted
    input the witnesses are still meaningful but the preconditions of
    individual checks may not hold.

      1. each subspace, with the members of L it contains, is itself a
         projective geometry of the same order;
      2. the meet of any two subspaces is exactly their set intersection;
      3. two distinct points lie on exactly one line, and two distinct
         lines share at most one point;
      4. for S in L and a point x outside S, dim(S join {x}) = dim(S)+1;
      5. for a hyperplane S (dim = dim(P)-1) and any T, either T is
         contained in S or dim(T meet S) = dim(T) - 1.
    """
    lat = _Lattice(g)
    masks, dims = g.subspaces, g.dims
    ns = len(masks)
    npts = len(g.points)
    order = _inferred_order(g)
    n = _geometry_dimension(g)

    w1 = None
    for i in range(ns):
        sub = _restriction(g, i, order)
        rep = validate_axioms(sub)
        if not rep.passed:
            failed = next(a for a in rep.axioms if not a.passed)
            w1 = (f"restriction to {g.describe_subspace(i)} fails axiom "
                  f"{failed.number}: {failed.witness}")
            break

    w2 = None
    for i in range(ns):
        for j in range(i, ns):
            meet = lat.meet_index(i, j)
            if meet is None or masks[meet] != masks[i] & masks[j]:
                w2 = (f"meet of {g.describe_subspace(i)} and {g.describe_subspace(j)}"
                      f" is not their intersection")
                break
        if w2:
            break

    w3 = None
    lines = [i for i in range(ns) if dims[i] == 1]
    pair_lines: dict[tuple[int, int], int] = {}
    for i in lines:
        bits = [b for b in range(npts) if masks[i] >> b & 1]
        for pair in itertools.combinations(bits, 2):
            pair_lines[pair] = pair_lines.get(pair, 0) + 1
    for pair in itertools.combinations(range(npts), 2):
        c = pair_lines.get(pair, 0)
        if c != 1:
            w3 = (f"points {g.points[pair[0]]} and {g.points[pair[1]]} lie on "
                  f"{c} lines")
            break
    if w3 is None:
        for i, j in itertools.combinations(lines, 2):
            common = (masks[i] & masks[j]).bit_count()
            if common > 1:
                w3 = (f"lines {g.describe_subspace(i)} and {g.describe_subspace(j)}"
                      f" share {common} points")
                break

    w4 = None
    singleton_index = {b: lat.index_of.get(1 << b) for b in range(npts)}
    for i in range(ns):
        for b in range(npts):
            if masks[i] >> b & 1:
                continue
            si = singleton_index[b]
            if si is None:
                continue  # axiom 3 failure, reported there
            join = lat.join_index(i, si)
            if join is None or dims[join] != dims[i] + 1:
                got = "missing" if join is None else f"dim {dims[join]}"
                w4 = (f"join of {g.describe_subspace(i)} with point "
                      f"{g.points[b]} is {got}, expected dim {dims[i] + 1}")
                break
        if w4:
            break

    w5 = None
    if n is not None:
        hyperplanes = [i for i in range(ns) if dims[i] == n - 1]
        for i in hyperplanes:
            for j in range(ns):
                if masks[j] & masks[i] == masks[j]:
                    continue
                meet = lat.meet_index(j, i)
                if meet is None or dims[meet] != dims[j] - 1:
                    got = "missing" if meet is None else f"dim {dims[meet]}"
                    w5 = (f"hyperplane {g.describe_subspace(i)} meets "
                          f"{g.describe_subspace(j)} in {got}, expected dim "
                          f"{dims[j] - 1}")
                    break
            if w5:
                break

    descriptions = {
        1: "every subspace induces a projective geometry of the same order",
        2: "meet coincides with set intersection",
        3: "two distinct points lie on one line; two lines share at most one point",
        4: "joining one outside point raises dimension by exactly one",
        5: "a hyperplane contains T or meets it one dimension down",
    }
    witnesses = {1: w1, 2: w2, 3: w3, 4: w4, 5: w5}
    return DerivedPropertiesReport(tuple(
        PropertyResult(k, descriptions[k], witnesses[k] is None, witnesses[k])
        for k in range(1, 6)))


# ---------------------------------------------------------------------------
# counting checks

class PointCountCheck(NamedTuple):
    expected: int
    actual: int
    passed: bool


def _resolved_order(g: IncidenceGeometry) -> int:
    order = _inferred_order(g)
    return order if order is not None else 1


def point_count_check(g: IncidenceGeometry) -> PointCountCheck:
    """Compare |P| with 1 + q + ... + q^n for the inferred order and dimension."""
    q = _resolved_order(g)
    n = _geometry_dimension(g)
    if n is None:
        return PointCountCheck(expected=-1, actual=len(g.points), passed=False)
    expected = q_integer(n + 1).evaluate(q)
    actual = len(g.points)
    return PointCountCheck(expected, actual, expected == actual)


@dataclass(frozen=True)
class CensusReport:
    counts: dict[int, int]
    expected: dict[int, int]
    recurrence_passed: bool
    order: int
    dimension: int

    @property
    def passed(self) -> bool:
        return self.counts == self.expected and self.recurrence_passed

    def as_dict(self) -> dict:
        return {
            "counts": {str(k): v for k, v in sorted(self.counts.items())},
            "expected": {str(k): v for k, v in sorted(self.expected.items())},
            "recurrence_passed": self.recurrence_passed,
            "order": self.order,
            "dimension": self.dimension,
            "passed": self.passed,
        }


def subspace_census(g: IncidenceGeometry) -> CensusReport:
    """Count subspaces of each dimension against the Gaussian binomials.

    A geometry of order q and dimension n must contain exactly
    [n+1 choose k+1]_q subspaces of dimension k.  The report also
    verifies the counting recurrence behind that fact,
    [n choose k+1] + q^(n-k) [n choose k] = [n+1 choose k+1], evaluated
    at the geometry's order for every k.
    """
    q = _resolved_order(g)
    n = _geometry_dimension(g)
    if n is None:
        raise ValueError("geometry has no full-set subspace; validate first")
    counts: dict[int, int] = {}
    for d in g.dims:
        counts[d] = counts.get(d, 0) + 1
    expected = {
        k: q_binomial_recurrence(n + 1, k + 1).evaluate(q)
        for k in range(-1, n + 1)
    }
    recurrence_ok = True
    for k in range(-1, n + 1) if n >= 0 else ():
        lhs = (q_binomial_recurrence(n, k + 1).evaluate(q)
               + q ** (n - k) * q_binomial_recurrence(n, k).evaluate(q))
        if lhs != expected[k]:
            recurrence_ok = False
            break
    return CensusReport(counts, expected, recurrence_ok, q, n)


# ---------------------------------------------------------------------------
# constructors

def _canonical_coeff_vectors(field: FiniteField, k: int):
    # all length-k vectors whose first nonzero entry is 1: one per
    # 1-dimensional subspace of the coefficient space
    elems = field.elements()
    for lead in range(k):
        head = (field.zero,) * lead + (field.one,)
        for tail in itertools.product(elems, repeat=k - lead - 1):
            yield head + tail


def _subspace_points(sub: SubspaceCanonical) -> list[tuple[int, ...]]:
    """Canonical homogeneous representatives of the lines inside a subspace.

    Because the basis is in RREF, a coefficient vector with first nonzero
    entry 1 combines the rows into a vector whose first nonzero
    coordinate is also 1, so every representative is produced directly in
    canonical form, once.
    """
    field = sub.field
    pts = []
    for coeffs in _canonical_coeff_vectors(field, sub.dim):
        v = [field.zero] * sub.ambient
        for c, row in zip(coeffs, sub.basis):
            if c:
                v = [a + c * b for a, b in zip(v, row)]
        pts.append(tuple(e.code for e in v))
    return pts


def _point_name(codes: tuple[int, ...]) -> str:
    return "[" + ",".join(str(c) for c in codes) + "]"


def build_projective_space(q: int, n: int,
                           budget: int = DEFAULT_GEOMETRY_BUDGET) -> IncidenceGeometry:
    """The n-dimensional projective space over F_q as an incidence geometry.

    Points are the lines through the origin of F_q^(n+1), named by their
    canonical homogeneous coordinates (first nonzero coordinate scaled
    to 1); for every vector subspace W of F_q^(n+1) the geometry carries
    the set of points lying inside W, with dimension dim(W) - 1.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    make_field(q)  # raise NotAPrimePower / BudgetExceeded before any work
    total = sum(q_binomial_recurrence(n + 1, k).evaluate(q) for k in range(n + 2))
    if total > budget:
        raise BudgetExceeded(f"{total} subspaces exceed the budget of {budget}")

    point_subs = enumerate_subspaces(q, n + 1, 1, budget)
    point_coords = [tuple(e.code for e in s.basis[0]) for s in point_subs]
    point_index = {coords: i for i, coords in enumerate(point_coords)}
    points = tuple(_point_name(c) for c in point_coords)

    masks, dims = [], []
    for k in range(n + 2):
        for sub in enumerate_subspaces(q, n + 1, k, budget):
            mask = 0
            for coords in _subspace_points(sub):
                mask |= 1 << point_index[coords]
            masks.append(mask)
            dims.append(k - 1)
    return IncidenceGeometry(points, tuple(masks), tuple(dims), claimed_order=q)


def build_boolean_geometry(n_points: int,
                           cap: int = DEFAULT_BOOLEAN_CAP) -> IncidenceGeometry:
    """The power set of an n-element set with dim(S) = |S| - 1 (order 1)."""
    if n_points < 1:
        raise ValueError("need at least one point")
    if n_points > cap:
        raise BudgetExceeded(
            f"{n_points} points means 2^{n_points} subsets; cap is {cap}")
    points = tuple(f"p{i}" for i in range(n_points))
    all_masks = sorted(range(1 << n_points), key=lambda m: (m.bit_count(), m))
    dims = tuple(m.bit_count() - 1 for m in all_masks)
    return IncidenceGeometry(points, tuple(all_masks), dims, claimed_order=1)


def affine_decomposition(q: int, n: int,
                         budget: int = DEFAULT_GEOMETRY_BUDGET) -> list[int]:
    """Sizes of the affine pieces of P^n(F_q).

    Partition the points by the index of their first nonzero homogeneous
    coordinate: index 0 is an embedded copy of affine n-space, and the
    points with a later first nonzero coordinate are the points at
    infinity, themselves a projective space one dimension down.  The
    sizes come out as [q^n, q^(n-1), ..., q, 1].
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    sizes = [0] * (n + 1)
    for sub in enumerate_subspaces(q, n + 1, 1, budget):
        sizes[sub.pivots[0]] += 1
    return sizes


# ---------------------------------------------------------------------------
# collineations

def collineation_order(g: IncidenceGeometry,
                       max_points: int = DEFAULT_COLLINEATION_CAP) -> int:
    """Count point permutations that map the subspace family onto itself.

    Brute force over all |P|! permutations; a permutation is a
    collineation iff the image of every member of L is again in L
    (dimension preservation follows, since dim is determined by the
    containment lattice).  The empty set and the full set are fixed by
    every permutation, and when all singletons are present their images
    are automatically present, so those members are skipped.
    """
    npts = len(g.points)
    if npts > max_points:
        raise BudgetExceeded(
            f"{npts} points exceed the collineation cap of {max_points}")
    mask_set = set(g.subspaces)
    full = (1 << npts) - 1
    all_singletons = all((1 << b) in mask_set for b in range(npts))
    candidates = []
    for m in mask_set:
        size = m.bit_count()
        if m == 0 or m == full:
            continue
        if size == 1 and all_singletons:
            continue
        candidates.append(m)
    candidates.sort(key=lambda m: (m.bit_count(), m))  # small subspaces fail fastest
    cand_bits = [tuple(b for b in range(npts) if m >> b & 1) for m in candidates]

    count = 0
    for perm in itertools.permutations(range(npts)):
        pbit = [1 << p for p in perm]
        for bits in cand_bits:
            nm = 0
            for b in bits:
                nm |= pbit[b]
            if nm not in mask_set:
                break
        else:
            count += 1
    return count


# ---------------------------------------------------------------------------
# JSON interchange

def geometry_to_json(g: IncidenceGeometry) -> dict:
    """Plain-dict form: point list, subspaces with dims, optional order."""
    out: dict = {
        "points": list(g.points),
        "subspaces": [
            {"dim": g.dims[i], "points": sorted(g.subspace_point_names(i))}
            for i in range(len(g.subspaces))
        ],
    }
    if g.claimed_order is not None:
        out["claimed_order"] = g.claimed_order
    return out


def geometry_from_json(obj: object) -> IncidenceGeometry:
    """Parse and structurally validate the JSON interchange form.

    Structural problems raise GeometryFormatError naming the offending
    field.  Note that two subspaces with identical point sets are
    rejected here as a format error: the family L is a set of subsets,
    and a duplicate entry cannot be ordered by containment.  Axiom-level
    problems are left to validate_axioms.
    """
    if not isinstance(obj, dict):
        raise GeometryFormatError("top level: expected an object")
    if "points" not in obj:
        raise GeometryFormatError("points: missing")
    raw_points = obj["points"]
    if not isinstance(raw_points, list):
        raise GeometryFormatError("points: expected a list")
    for i, p in enumerate(raw_points):
        if not isinstance(p, str):
            raise GeometryFormatError(f"points[{i}]: expected a string")
    if len(set(raw_points)) != len(raw_points):
        raise GeometryFormatError("points: duplicate point identifier")
    if "subspaces" not in obj:
        raise GeometryFormatError("subspaces: missing")
    raw_subs = obj["subspaces"]
    if not isinstance(raw_subs, list):
        raise GeometryFormatError("subspaces: expected a list")
    index = {name: i for i, name in enumerate(raw_points)}
    masks, dims = [], []
    seen: dict[int, int] = {}
    for i, entry in enumerate(raw_subs):
        if not isinstance(entry, dict):
            raise GeometryFormatError(f"subspaces[{i}]: expected an object")
        if "dim" not in entry or isinstance(entry["dim"], bool) \
                or not isinstance(entry["dim"], int):
            raise GeometryFormatError(f"subspaces[{i}].dim: expected an integer")
        if entry["dim"] < -1:
            raise GeometryFormatError(f"subspaces[{i}].dim: must be >= -1")
        if "points" not in entry or not isinstance(entry["points"], list):
            raise GeometryFormatError(f"subspaces[{i}].points: expected a list")
        mask = 0
        for name in entry["points"]:
            if not isinstance(name, str) or name not in index:
                raise GeometryFormatError(
                    f"subspaces[{i}].points: unknown point {name!r}")
            bit = 1 << index[name]
            if mask & bit:
                raise GeometryFormatError(
                    f"subspaces[{i}].points: duplicate point {name!r}")
            mask |= bit
        if mask in seen:
            raise GeometryFormatError(
                f"subspaces[{i}]: duplicate subspace (same point set as "
                f"subspaces[{seen[mask]}])")
        seen[mask] = i
        masks.append(mask)
        dims.append(entry["dim"])
    claimed = obj.get("claimed_order")
    if claimed is not None:
        if isinstance(claimed, bool) or not isinstance(claimed, int) or claimed < 1:
            raise GeometryFormatError(
                "claimed_order: expected a positive integer (order 0 is out of scope)")
    return IncidenceGeometry(tuple(raw_points), tuple(masks), tuple(dims), claimed)
