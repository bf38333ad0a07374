"""Spaces of polynomials: Wronskians, duality, kappa, self-self-duality."""

from fractions import Fraction

import pytest

from g2gaudin import bethe
from g2gaudin import rootdata as rd
from g2gaudin import sgrass as sg
from g2gaudin.exact import Poly, wronskian

X0 = sg.monomial_space()
R0 = sg.trivial_ramification()


def _mono(k):
    return Poly([Fraction(0)] * k + [Fraction(1)])


def test_polyspace_validation():
    with pytest.raises(ValueError):
        sg.PolySpace(tuple(_mono(k) for k in range(6)))
    with pytest.raises(ValueError):
        sg.PolySpace((_mono(0), _mono(0)) + tuple(_mono(k) for k in range(5)))


def test_flag_basis_degrees():
    X = sg.PolySpace(tuple(_mono(k) + _mono(0) for k in range(7)))
    assert X.degrees == (0, 1, 2, 3, 4, 5, 6)


def test_space_wronskian_examples():
    assert sg.space_wronskian(X0) == Poly([1])
    X = sg.PolySpace(tuple(_mono(k) for k in (0, 1, 2, 3, 4, 5, 7)))
    w = sg.space_wronskian(X)
    assert w.valuation() == 1 and w.degree == 1


def test_wronskian_basis_independent():
    mixed = (X0.basis[0] + X0.basis[3], X0.basis[1] * 2, X0.basis[2],
             X0.basis[3], X0.basis[4] + X0.basis[6], X0.basis[5],
             X0.basis[6])
    assert sg.space_wronskian(sg.PolySpace(mixed)) == sg.space_wronskian(X0)


def test_divided_wronskian_trivial():
    gs = [_mono(0), _mono(1), _mono(3)]
    assert sg.divided_wronskian(gs, R0) == wronskian(gs)
    assert sg.divided_wronskian([_mono(2)], R0) == _mono(2)


def test_divided_wronskian_inexact_raises():
    R = sg.RamificationData((Fraction(0),),
                            (rd.partition_from_weight((0, 0), 1),))
    assert R.T[6] == _mono(1)  # T7 = x
    with pytest.raises(ValueError):
        sg.divided_wronskian([_mono(0)], R)


def test_dual_space_monomials():
    Xd = sg.dual_space(X0, R0)
    assert sg._span_equal(list(Xd.basis), list(X0.basis))


def test_self_dual():
    assert sg.is_self_dual(X0, R0)
    bad = sg.PolySpace(tuple(_mono(k) for k in (0, 1, 2, 3, 4, 5, 7)))
    assert not sg.is_self_dual(bad, R0)


def test_self_dual_t_symmetry_fast_path():
    R = sg.RamificationData((Fraction(0),), ((1, 0, 0, 0, 0, 0, 0),))
    assert R.T[0] != R.T[5]  # asymmetric T-data
    assert not sg.is_self_dual(X0, R)


def test_kappa_monomials():
    g = sg.kappa_form(X0, R0)
    for a in range(7):
        for b in range(7):
            assert (g[a][b] == 0) == (a + b != 6)
            assert g[a][b] == g[b][a]


def test_ssd_witness_monomials():
    assert sg.ssd_witness_check(X0, R0, X0.flag_basis)


def test_ssd_witness_rejects_bad_order():
    gamma = (_mono(2), _mono(0), _mono(1), _mono(3), _mono(4), _mono(5),
             _mono(6))
    assert not sg.ssd_witness_check(X0, R0, gamma)


def test_bethe_kernel_instance():
    X, R, gamma = sg.bethe_kernel_instance((0, 1), 1)
    assert sg.is_self_dual(X, R)
    assert sg.ssd_witness_check(X, R, gamma)
    y = bethe.appendix_solution((0, 1), 1)
    ys = sg.y_from_basis(gamma, R)
    m = lambda p: p.monic()
    assert tuple(m(p) for p in ys) == (m(y.y1), m(y.y2), m(y.y1 ** 2),
                                       m(y.y1 ** 2), m(y.y2), m(y.y1))


def test_dual_involution_on_bethe_instance():
    X, R, _ = sg.bethe_kernel_instance((1, 0), 2)
    Xdd = sg.dual_space(sg.dual_space(X, R), R)
    assert sg._span_equal(list(Xdd.basis), list(X.basis))


def test_space_wronskian_formula():
    X, R, _ = sg.bethe_kernel_instance((1, 1), 3)
    x = _mono(1)
    assert sg.space_wronskian(X) == \
        (x ** 21 * (x - Poly([1])) ** 7).monic()


def test_isotropic_examples():
    f = _mono(3)
    U = [_mono(0), _mono(4), _mono(5)]
    assert sg.isotropic_definition_check(X0, R0, f, U)
    assert not sg.isotropic_definition_check(X0, R0, f,
                                             [_mono(0), _mono(1), _mono(2)])
    # right isotropy, wrong Wronskian
    assert not sg.isotropic_definition_check(X0, R0, f,
                                             [_mono(0), _mono(4), _mono(6)])


def test_isotropic_witness_search():
    f = _mono(3) + Poly([2])
    U = sg.find_isotropic_witness(X0, R0, f)
    assert U is not None
    assert sg.isotropic_definition_check(X0, R0, f, U)


def test_reduced_wronski():
    assert sg._seventh_root(_mono(14)) == _mono(2)
    x = _mono(1)
    assert sg._seventh_root((x ** 7 * (x - Poly([1])) ** 7)) == \
        x * (x - Poly([1]))
    with pytest.raises(ValueError):
        sg._seventh_root(_mono(3))
    with pytest.raises(ValueError):
        sg._seventh_root((_mono(7) + Poly([1])))


def test_shift_space():
    X, R, _ = sg.bethe_kernel_instance((0, 1), 1)
    Xs = sg.shift_space(X, [Fraction(0)], [2])
    x = _mono(1)
    assert sg.space_wronskian(Xs) == \
        (x ** 21 * (x - Poly([1])) ** 7).monic()
    back = sg.shift_space(Xs, [Fraction(0)], [-2])
    assert sg._span_equal(list(back.basis), list(X.basis))
    same = sg.shift_space(X, [Fraction(0)], [0])
    assert same.basis == X.basis
