"""Exact linear algebra over F_q: RREF, canonical subspaces, enumeration.

A subspace of F_q^n is represented by the reduced row echelon form of
any spanning set; RREF is unique, so two subspaces are equal iff their
canonical basis matrices are equal.  Enumeration of all k-dimensional
subspaces generates RREF matrices directly, choosing a pivot-column
pattern and filling the free entries, so each subspace is produced
exactly once with no dedup bookkeeping.  The span-and-dedupe route is
deliberately NOT used here; it lives in the test suite as the
independent oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BudgetExceeded, DimensionMismatch, FieldMismatch
from .gf import FieldElement, FiniteField, make_field
from .qcalc import q_binomial_recurrence

DEFAULT_SUBSPACE_BUDGET = 10 ** 6


@dataclass(frozen=True)
class MatrixFq:
    """Dense matrix over a finite field; rows of FieldElement tuples."""

    field: FiniteField
    rows: tuple[tuple[FieldElement, ...], ...]

    def __post_init__(self):
        for row in self.rows:
            for e in row:
                if e.field.key != self.field.key:
                    raise FieldMismatch("matrix entry from a different field")
        if len({len(r) for r in self.rows}) > 1:
            raise ValueError("ragged rows")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def codes(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(e.code for e in row) for row in self.rows)

    @classmethod
    def from_codes(cls, field: FiniteField, codes: Iterable[Iterable[int]]) -> "MatrixFq":
        return cls(field, tuple(tuple(field.element(c) for c in row) for row in codes))


def rref(m: MatrixFq) -> tuple[MatrixFq, int]:
    """Reduced row echelon form and rank, by exact Gaussian elimination."""
    field = m.field
    rows = [list(r) for r in m.rows]
    nrows, ncols = len(rows), m.ncols
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][col].inverse()
        rows[r] = [e * inv for e in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == nrows:
            break
    return MatrixFq(field, tuple(tuple(row) for row in rows)), r


class SubspaceCanonical:
    """A subspace of F_q^n held as its unique full-rank RREF basis."""

    __slots__ = ("field", "ambient", "basis", "pivots", "_key")

    def __init__(self, field: FiniteField, ambient: int,
                 basis: tuple[tuple[FieldElement, ...], ...]):
        self.field = field
        self.ambient = ambient
        self.basis = basis
        pivots = []
        for i, row in enumerate(basis):
            if len(row) != ambient:
                raise ValueError("basis row of wrong length")
            piv = next((j for j, e in enumerate(row) if e), None)
            if piv is None:
                raise ValueError("zero row in a canonical basis")
            if row[piv].code != 1:
                raise ValueError("pivot entry must be 1")
            if pivots and piv <= pivots[-1]:
                raise ValueError("pivot columns must strictly increase")
            pivots.append(piv)
        for i, row in enumerate(basis):
            for l, pj in enumerate(pivots):
                if l != i and row[pj]:
                    raise ValueError("nonzero entry in a pivot column")
        self.pivots = tuple(pivots)
        self._key = (field.key, ambient, tuple(tuple(e.code for e in r) for r in basis))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, vector: Sequence[FieldElement]) -> bool:
        """Membership test by reducing the vector against the basis."""
        v = list(vector)
        if len(v) != self.ambient:
            raise DimensionMismatch("vector length differs from ambient dimension")
        for row, piv in zip(self.basis, self.pivots):
            if v[piv]:
                f = v[piv]
                v = [a - f * b for a, b in zip(v, row)]
        return not any(v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SubspaceCanonical):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def basis_codes(self) -> tuple[tuple[int, ...], ...]:
        return self._key[2]

    def __repr__(self) -> str:
        return f"SubspaceCanonical(dim={self.dim}, ambient={self.ambient}, rows={self.basis_codes()})"


def span_canonical(field: FiniteField, ambient: int,
                   vectors: Iterable[Sequence[FieldElement]]) -> SubspaceCanonical:
    """Canonical representative of the span of the given vectors."""
    rows = tuple(tuple(v) for v in vectors)
    for v in rows:
        if len(v) != ambient:
            raise DimensionMismatch("vector length differs from ambient dimension")
    reduced, rank = rref(MatrixFq(field, rows))
    return SubspaceCanonical(field, ambient, reduced.rows[:rank])


def count_independent_tuples(q: int, n: int, k: int) -> int:
    """Number of linearly independent k-tuples in F_q^n.

    The i-th vector avoids the q^(i-1) combinations of its predecessors,
    leaving q^n - q^(i-1) choices, so the count is the product of those
    factors.
    """
    if not 0 <= k <= n:
        raise ValueError("requires 0 <= k <= n")
    out = 1
    for i in range(1, k + 1):
        out *= q ** n - q ** (i - 1)
    return out


def enumerate_subspaces(q: int, n: int, k: int,
                        budget: int = DEFAULT_SUBSPACE_BUDGET) -> list[SubspaceCanonical]:
    """All k-dimensional subspaces of F_q^n, each exactly once.

    Deterministic order: pivot-column patterns in lexicographic order,
    then free entries filled in canonical element order.  Raises
    BudgetExceeded if the projected output size is over budget.
    """
    if not 0 <= k <= n:
        raise ValueError("requires 0 <= k <= n")
    field = make_field(q)
    projected = q_binomial_recurrence(n, k).evaluate(q)
    if projected > budget:
        raise BudgetExceeded(
            f"{projected} subspaces exceed the budget of {budget}")
    elems = field.elements()
    zero, one = field.zero, field.one
    out: list[SubspaceCanonical] = []
    for pivots in itertools.combinations(range(n), k):
        pivot_set = set(pivots)
        free_pos = [(i, j) for i in range(k)
                    for j in range(pivots[i] + 1, n) if j not in pivot_set]
        for fill in itertools.product(elems, repeat=len(free_pos)):
            rows = [[zero] * n for _ in range(k)]
            for i, p in enumerate(pivots):
                rows[i][p] = one
            for (i, j), e in zip(free_pos, fill):
                rows[i][j] = e
            out.append(SubspaceCanonical(field, n, tuple(tuple(r) for r in rows)))
    return out


def _check_compatible(a: SubspaceCanonical, b: SubspaceCanonical) -> None:
    if a.field.key != b.field.key:
        raise FieldMismatch("subspaces over different fields")
    if a.ambient != b.ambient:
        raise DimensionMismatch("subspaces of different ambient dimension")


def subspace_join(a: SubspaceCanonical, b: SubspaceCanonical) -> SubspaceCanonical:
    """Span of the two subspaces (their least upper bound)."""
    _check_compatible(a, b)
    return span_canonical(a.field, a.ambient, a.basis + b.basis)


def orthogonal_complement(s: SubspaceCanonical) -> SubspaceCanonical:
    """Solutions x of B.x = 0 for the basis B, canonicalized.

    The standard bilinear form on F_q^n is nondegenerate, so the
    complement has dimension n - dim(s) and double complement returns s;
    that is all the meet computation below needs.
    """
    n = s.ambient
    field = s.field
    pivot_set = set(s.pivots)
    free_cols = [j for j in range(n) if j not in pivot_set]
    vectors = []
    for f in free_cols:
        v = [field.zero] * n
        v[f] = field.one
        for row, piv in zip(s.basis, s.pivots):
            v[piv] = -row[f]
        vectors.append(tuple(v))
    return span_canonical(field, n, vectors)


def subspace_meet(a: SubspaceCanonical, b: SubspaceCanonical) -> SubspaceCanonical:
    """Intersection of the two subspaces, via complement duality."""
    _check_compatible(a, b)
    return orthogonal_complement(
        subspace_join(orthogonal_complement(a), orthogonal_complement(b)))
