"""Order-7 operators: factorization, conjugation, kernels, exponents."""

from fractions import Fraction

import pytest

from g2gaudin import bethe
from g2gaudin import diffop
from g2gaudin import rootdata as rd
from g2gaudin.bethe import PolyPair
from g2gaudin.exact import Poly, RatFunc


def test_trivial_factorization_is_d7():
    y = PolyPair(Poly([1]), Poly([1]))
    D = diffop.build_Dy(y, Poly([1]), Poly([1]))
    assert all(c.is_zero() for c in D.coeffs)
    assert D.order == 7
    # kernel of d^7 is the polynomials of degree < 7
    ker = diffop.polynomial_kernel(D, 9)
    assert len(ker) == 7


def test_apply_and_kernel_membership():
    D = diffop.appendix_operator((0, 1), 1)
    for p in diffop.kernel_for_case((0, 1), 1):
        assert D.apply(p).is_zero()


def test_conjugate_group_action():
    D = diffop.appendix_operator((0, 1), 0)
    x = Poly([0, 1])
    f = RatFunc(x)
    g = RatFunc(x - Poly([1]))
    assert diffop.conjugate(D, f * g) == \
        diffop.conjugate(diffop.conjugate(D, f), g)


def test_conjugation_roundtrip():
    D = diffop.appendix_operator((1, 1), 2)
    f = RatFunc(Poly([0, 1]) ** 2)
    assert diffop.conjugate(diffop.conjugate(D, f),
                            RatFunc(Poly([1])) / f) == D


def test_exponents_regular_point():
    y = PolyPair(Poly([1]), Poly([1]))
    D = diffop.build_Dy(y, Poly([1]), Poly([1]))
    assert diffop.exponents_at(D, Fraction(0)).exponents == \
        (0, 1, 2, 3, 4, 5, 6)
    assert diffop.exponents_at(D, "inf").exponents == \
        (-6, -5, -4, -3, -2, -1, 0)


def test_exponents_printed_example():
    # conjugated operator for lambda=(0,1), case 1: resulting weight (1,0)
    D = diffop.appendix_operator((0, 1), 1, conjugated=True)
    assert diffop.exponents_at(D, "inf").exponents == \
        (-8, -6, -5, -3, -1, 0, 2)


def test_exponents_finite_formula():
    lam = (1, 1)
    D = diffop.appendix_operator(lam, 3, conjugated=True)
    a, b = lam
    want = tuple(sorted((-2 * a - b, -a - b + 1, -a + 2, 3,
                         a + 4, a + b + 5, 2 * a + b + 6)))
    assert diffop.exponents_at(D, Fraction(0)).exponents == want


def test_kernel_dimension():
    for lam, i in (((0, 0), 0), ((1, 0), 2), ((2, 2), 4)):
        assert len(diffop.kernel_for_case(lam, i)) == 7


def test_h2_examples():
    got, expected = diffop.h2_casimir_values((0, 0), 0)
    assert got == expected == 0
    got, expected = diffop.h2_casimir_values((0, 1), 0)
    assert got == expected
    assert expected == -Fraction(repn_c((0, 2)) - 2 * repn_c((0, 1)), 2)
    got, expected = diffop.h2_casimir_values((0, 1), 6)
    assert got == expected
    assert expected == -Fraction(repn_c((0, 0)) - repn_c((0, 1))
                                 - repn_c((0, 1)), 2)


def repn_c(mu):
    from g2gaudin import repn
    return repn.casimir_eigenvalue(mu)


def test_h2_rejects_inadmissible():
    with pytest.raises(ValueError):
        diffop.h2_casimir_values((0, 0), 3)
