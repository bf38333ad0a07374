"""Exact arithmetic: Q(sqrt2), polynomials, rational functions."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from g2gaudin.exact import (Poly, QSqrt2, RatFunc, log_deriv, poly_gcd,
                            poly_lcm, residue_at, wronskian)

fracs = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 10))
qs = st.builds(QSqrt2, fracs, fracs)
small_polys = st.lists(fracs, min_size=0, max_size=5).map(Poly)


@given(qs, qs, qs)
@settings(max_examples=50, deadline=None)
def test_qsqrt2_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a


@given(qs)
@settings(max_examples=50, deadline=None)
def test_qsqrt2_inverse_and_conjugate(a):
    if a:
        assert a * a.inverse() == QSqrt2(1)
    assert a + a.conjugate() == QSqrt2(2 * a.a)
    assert a * a.conjugate() == QSqrt2(a.a * a.a - 2 * a.b * a.b)


def test_qsqrt2_basics():
    r2 = QSqrt2(0, 1)
    assert r2 * r2 == QSqrt2(2)
    assert (1 / r2) * r2 == QSqrt2(1)


def test_poly_int_coeffs_coerced():
    p = Poly([1, 1])  # int inputs must become Fractions
    assert (p.monic())[0] == Fraction(1)
    q, r = Poly([0, 0, 1]).divmod(Poly([1, 2]))
    assert isinstance(q[0], Fraction)


@given(small_polys, small_polys)
@settings(max_examples=50, deadline=None)
def test_poly_divmod(a, b):
    if b.is_zero():
        return
    q, r = a.divmod(b)
    assert a == q * b + r
    assert r.is_zero() or r.degree < b.degree


@given(small_polys, small_polys)
@settings(max_examples=50, deadline=None)
def test_gcd_divides(a, b):
    g = poly_gcd(a, b)
    if g.is_zero():
        assert a.is_zero() and b.is_zero()
        return
    assert a.divmod(g)[1].is_zero()
    assert b.divmod(g)[1].is_zero()
    if a and b:
        lcm = poly_lcm(a, b)
        assert lcm.divmod(a)[1].is_zero() and lcm.divmod(b)[1].is_zero()


def test_exact_div_raises():
    with pytest.raises(ValueError):
        Poly([1, 0, 1]).exact_div(Poly([0, 1]))


def test_shift_and_valuation():
    p = Poly([0, 0, 1])  # x^2
    assert p.shift(1) == Poly([1, 2, 1])
    assert (Poly([-1, 1]) ** 3).valuation(1) == 3


def test_wronskian_examples():
    x = Poly([0, 1])
    assert wronskian([Poly([1]), x]) == Poly([1])
    # Wr(1, x, x^2) = 2
    assert wronskian([Poly([1]), x, x * x]) == Poly([2])
    # alternating: swapped arguments flip the sign
    assert wronskian([x, Poly([1])]) == Poly([-1])


def test_ratfunc_reduction_and_pow():
    x = Poly([0, 1])
    f = RatFunc(x * x * (x - Poly([1])), x)
    assert f.num == x * (x - Poly([1])) and f.den == Poly([1])
    g = RatFunc(Poly([1]), x)
    assert (g ** -2) == RatFunc(x * x)


def test_residue_and_log_deriv():
    x = Poly([0, 1])
    assert residue_at(RatFunc(Poly([1]), x), Fraction(0)) == 1
    assert residue_at(RatFunc(Poly([3]), x - Poly([2])), Fraction(2)) == 3
    f = RatFunc(x ** 4)
    assert log_deriv(f) == RatFunc(Poly([4]), x)
    # product rule
    g = RatFunc(x - Poly([1]))
    assert log_deriv(f * g) == log_deriv(f) + log_deriv(g)
