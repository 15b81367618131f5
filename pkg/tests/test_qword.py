import math

from hypothesis import given, settings
from hypothesis import strategies as st

from qproj import (NoncommPoly, QPoly, expand_binomial, nc_coefficient,
                   nc_multiply, q_binomial_recurrence)


def test_yx_rewrites_to_q_xy():
    p = nc_multiply(NoncommPoly.y(), NoncommPoly.x())
    assert nc_coefficient(p, 1, 1).coeffs == (0, 1)  # q * xy
    assert len(p) == 1


def test_xy_stays_put():
    p = nc_multiply(NoncommPoly.x(), NoncommPoly.y())
    assert nc_coefficient(p, 1, 1) == QPoly.one()


def test_xy_squared():
    xy = nc_multiply(NoncommPoly.x(), NoncommPoly.y())
    p = nc_multiply(xy, xy)
    # one swap of the inner y past the inner x
    assert nc_coefficient(p, 2, 2).coeffs == (0, 1)
    assert len(p) == 1


def test_expand_empty_product():
    p = expand_binomial(0)
    assert len(p) == 1
    assert nc_coefficient(p, 0, 0) == QPoly.one()


def test_expand_two():
    p = expand_binomial(2)
    assert nc_coefficient(p, 2, 0) == QPoly.one()
    assert nc_coefficient(p, 1, 1).coeffs == (1, 1)
    assert nc_coefficient(p, 0, 2) == QPoly.one()
    assert len(p) == 3


def test_absent_term_is_zero():
    p = expand_binomial(5)
    assert nc_coefficient(p, 6, 0) == QPoly.zero()


def test_expansion_coefficients_are_gaussian_binomials():
    for n in range(11):
        p = expand_binomial(n)
        assert len(p) == n + 1
        for k in range(n + 1):
            assert nc_coefficient(p, k, n - k) == q_binomial_recurrence(n, k)


def test_term_keys_and_order():
    p = expand_binomial(4)
    keys = [key for key, _ in p.terms()]
    assert keys == [(0, 4), (1, 3), (2, 2), (3, 1), (4, 0)]


def test_stepwise_recurrence_structure():
    xy = NoncommPoly.x() + NoncommPoly.y()
    for n in range(1, 9):
        assert expand_binomial(n) == nc_multiply(expand_binomial(n - 1), xy)


def test_q1_specialization_is_commutative_binomial():
    for n in range(9):
        p = expand_binomial(n)
        for (a, b), c in p.terms():
            assert a + b == n
            assert c.evaluate(1) == math.comb(n, a)


def _small_polys():
    coeff = st.lists(st.integers(-3, 3), max_size=3).map(QPoly)
    key = st.tuples(st.integers(0, 3), st.integers(0, 3))
    return st.dictionaries(key, coeff, max_size=3).map(NoncommPoly)


@given(_small_polys(), _small_polys(), _small_polys())
@settings(max_examples=60, deadline=None)
def test_multiplication_associative(a, b, c):
    assert nc_multiply(nc_multiply(a, b), c) == nc_multiply(a, nc_multiply(b, c))


@given(_small_polys(), _small_polys(), _small_polys())
@settings(max_examples=60, deadline=None)
def test_multiplication_distributes(a, b, c):
    assert nc_multiply(a, b + c) == nc_multiply(a, b) + nc_multiply(a, c)


def test_zero_coefficients_never_stored():
    p = NoncommPoly({(1, 1): QPoly.one()})
    minus = NoncommPoly({(1, 1): QPoly([-1])})
    assert not (p + minus)
    assert len(p + minus) == 0
