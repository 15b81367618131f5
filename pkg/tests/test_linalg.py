import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qproj import (BudgetExceeded, DimensionMismatch, FieldMismatch, MatrixFq,
                   SubspaceCanonical, count_independent_tuples,
                   enumerate_subspaces, evaluate, make_field,
                   orthogonal_complement, q_binomial_recurrence, rref,
                   span_canonical, subspace_join, subspace_meet)


def _mat(q, rows):
    return MatrixFq.from_codes(make_field(q), rows)


# --- independent oracle: span every k-subset of nonzero vectors, dedupe ----

def all_vectors(field, n):
    return [tuple(v) for v in itertools.product(field.elements(), repeat=n)]


def spanning_oracle(q, n, k):
    """Every k-subspace as the set of spans of k-subsets of nonzero vectors."""
    field = make_field(q)
    nonzero = [v for v in all_vectors(field, n) if any(v)]
    found = set()
    for subset in itertools.combinations(nonzero, k):
        s = span_canonical(field, n, subset)
        if s.dim == k:
            found.add(s)
    if k == 0:
        found = {span_canonical(field, n, [])}
    return found


class TestRref:
    def test_identity_fixed(self):
        m = _mat(2, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
        r, rank = rref(m)
        assert r.codes() == m.codes()
        assert rank == 3

    def test_zero_matrix(self):
        m = _mat(3, [[0, 0], [0, 0]])
        r, rank = rref(m)
        assert r.codes() == m.codes()
        assert rank == 0

    def test_dependent_rows_over_f3(self):
        # (2,1) = 2 * (1,2) over F_3, so rank 1
        m = _mat(3, [[1, 2], [2, 1]])
        r, rank = rref(m)
        assert rank == 1
        assert r.codes() == ((1, 2), (0, 0))

    def test_full_rank_over_f5(self):
        m = _mat(5, [[2, 1], [1, 1]])
        r, rank = rref(m)
        assert rank == 2
        assert r.codes() == ((1, 0), (0, 1))

    @given(st.integers(0, 3 ** 6 - 1))
    @settings(max_examples=60, deadline=None)
    def test_idempotent(self, seed):
        codes = [(seed // 3 ** i) % 3 for i in range(6)]
        m = _mat(3, [codes[:3], codes[3:]])
        r1, rank1 = rref(m)
        r2, rank2 = rref(r1)
        assert r1.codes() == r2.codes()
        assert rank1 == rank2


class TestSpanCanonical:
    def test_empty_span(self):
        s = span_canonical(make_field(2), 3, [])
        assert s.dim == 0
        assert s.basis == ()

    def test_full_plane_over_f2(self):
        f = make_field(2)
        s = span_canonical(f, 2, [(f.one, f.one), (f.zero, f.one)])
        assert s.basis_codes() == ((1, 0), (0, 1))

    def test_collinear_vectors_over_f5(self):
        f = make_field(5)
        v1 = tuple(f.element(c) for c in (1, 2, 0))
        v2 = tuple(f.element(c) for c in (2, 4, 0))
        s = span_canonical(f, 3, [v1, v2])
        assert s.dim == 1
        assert s.basis_codes() == ((1, 2, 0),)

    def test_canonical_invariants_enforced(self):
        f = make_field(2)
        with pytest.raises(ValueError):
            SubspaceCanonical(f, 2, ((f.zero, f.zero),))  # zero row
        with pytest.raises(ValueError):
            # pivot columns not increasing
            SubspaceCanonical(f, 2, ((f.zero, f.one), (f.one, f.zero)))


class TestEnumeration:
    def test_counts_small(self):
        assert len(enumerate_subspaces(2, 3, 1)) == 7
        assert len(enumerate_subspaces(3, 3, 1)) == 13
        assert len(enumerate_subspaces(2, 3, 3)) == 1
        assert len(enumerate_subspaces(5, 4, 4)) == 1

    def test_counts_match_gaussian_binomial(self):
        for q in (2, 3, 4, 5):
            for n in range(5):
                for k in range(n + 1):
                    subs = enumerate_subspaces(q, n, k)
                    expected = evaluate(q_binomial_recurrence(n, k), q)
                    assert len(subs) == expected
                    assert len(set(subs)) == len(subs)

    def test_matches_spanning_oracle(self):
        for q in (2, 3):
            for n in range(4):
                for k in range(n + 1):
                    enumerated = set(enumerate_subspaces(q, n, k))
                    assert enumerated == spanning_oracle(q, n, k)

    def test_deterministic_order(self):
        a = enumerate_subspaces(3, 4, 2)
        b = enumerate_subspaces(3, 4, 2)
        assert [s.basis_codes() for s in a] == [s.basis_codes() for s in b]

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            enumerate_subspaces(5, 4, 2, budget=100)

    def test_preconditions(self):
        with pytest.raises(ValueError):
            enumerate_subspaces(2, 3, 4)
        with pytest.raises(ValueError):
            enumerate_subspaces(2, 3, -1)


class TestCountIndependentTuples:
    def test_known(self):
        assert count_independent_tuples(2, 2, 2) == 6
        assert count_independent_tuples(7, 5, 0) == 1
        assert count_independent_tuples(2, 3, 1) == 7

    def test_quotient_counts_subspaces(self):
        for q in (2, 3, 4):
            for n in range(5):
                for k in range(n + 1):
                    top = count_independent_tuples(q, n, k)
                    bottom = count_independent_tuples(q, k, k)
                    assert top % bottom == 0
                    assert top // bottom == len(enumerate_subspaces(q, n, k))


class TestMeetJoin:
    def test_idempotence(self):
        for s in enumerate_subspaces(2, 3, 2):
            assert subspace_meet(s, s) == s
            assert subspace_join(s, s) == s

    def test_join_of_axes(self):
        f = make_field(2)
        e1 = span_canonical(f, 3, [tuple(f.element(c) for c in (1, 0, 0))])
        e2 = span_canonical(f, 3, [tuple(f.element(c) for c in (0, 1, 0))])
        j = subspace_join(e1, e2)
        assert j.basis_codes() == ((1, 0, 0), (0, 1, 0))

    def test_planes_in_f2_cubed_meet_in_lines(self):
        planes = enumerate_subspaces(2, 3, 2)
        for a, b in itertools.combinations(planes, 2):
            assert subspace_meet(a, b).dim == 1

    def test_complement_involution(self):
        for q, n in ((2, 4), (3, 3)):
            for k in range(n + 1):
                for s in enumerate_subspaces(q, n, k):
                    c = orthogonal_complement(s)
                    assert c.dim == n - k
                    assert orthogonal_complement(c) == s

    def test_meet_against_vector_oracle(self):
        f = make_field(3)
        subs = enumerate_subspaces(3, 3, 2)
        vecs = all_vectors(f, 3)
        for a, b in itertools.combinations(subs[:6], 2):
            common = [v for v in vecs if a.contains(v) and b.contains(v)]
            expected = span_canonical(f, 3, common)
            assert subspace_meet(a, b) == expected

    def test_modular_dimension_law(self):
        for q, n in ((2, 4), (3, 3)):
            subs = [s for k in range(n + 1) for s in enumerate_subspaces(q, n, k)]
            for a, b in itertools.combinations(subs, 2):
                meet = subspace_meet(a, b)
                join = subspace_join(a, b)
                assert a.dim + b.dim == meet.dim + join.dim

    def test_mismatches_rejected(self):
        a = enumerate_subspaces(2, 3, 1)[0]
        b = enumerate_subspaces(2, 4, 1)[0]
        with pytest.raises(DimensionMismatch):
            subspace_join(a, b)
        c = enumerate_subspaces(3, 3, 1)[0]
        with pytest.raises(FieldMismatch):
            subspace_meet(a, c)


def test_contains():
    f = make_field(2)
    s = span_canonical(f, 3, [tuple(f.element(c) for c in (1, 0, 1))])
    assert s.contains(tuple(f.element(c) for c in (1, 0, 1)))
    assert s.contains(tuple(f.element(c) for c in (0, 0, 0)))
    assert not s.contains(tuple(f.element(c) for c in (1, 1, 0)))
