"""The 7-dimensional representation, Casimir, and character combinatorics."""

from fractions import Fraction

import pytest

from g2gaudin import repn
from g2gaudin import rootdata as rd
from g2gaudin.exact import QSqrt2
from g2gaudin.repn import bracket, mat_eq, mat_scale, mat_zero


def test_chevalley_relations():
    e1, e2, f1, f2, h1, h2 = repn.chevalley_matrices()
    es, fs, hs = (e1, e2), (f1, f2), (h1, h2)
    for i in range(2):
        for j in range(2):
            target = hs[i] if i == j else mat_zero()
            assert mat_eq(bracket(es[i], fs[j]), target)
            a = rd.CARTAN[i][j]
            assert mat_eq(bracket(hs[i], es[j]),
                          mat_scale(QSqrt2(a), es[j]))
            assert mat_eq(bracket(hs[i], fs[j]),
                          mat_scale(QSqrt2(-a), fs[j]))


def test_serre_like_brackets():
    e1, e2, f1, f2, h1, h2 = repn.chevalley_matrices()
    assert mat_eq(bracket(h1, h2), mat_zero())


def test_basis_spans_14_dimensions():
    assert len(repn.g2_basis()) == 14


def test_G_relations():
    G = repn.build_G()  # raises internally if the printed relations fail
    for i in range(1, 8):
        assert mat_eq(G[(i, 8 - i)], mat_zero())


def test_dual_basis_identity():
    repn.dual_basis_G()  # asserts G_ij = sum_a (x_a)_{ji} x^a exactly


def test_weyl_dims():
    assert repn.weyl_dim((0, 0)) == 1
    assert repn.weyl_dim(rd.OMEGA2) == 7
    assert repn.weyl_dim(rd.OMEGA1) == 14
    assert repn.weyl_dim((0, 2)) == 27
    assert repn.weyl_dim((1, 1)) == 64


def test_casimir_eigenvalues():
    assert repn.casimir_eigenvalue(rd.OMEGA2) == 12
    assert repn.casimir_eigenvalue(rd.OMEGA1) == 24
    assert repn.casimir_eigenvalue((0, 2)) == 28
    assert repn.casimir_eigenvalue((0, 0)) == 0


def test_tensor_square_of_omega2():
    dec = repn.tensor_decompose(rd.OMEGA2, rd.OMEGA2)
    assert dec == {(0, 0): 1, (0, 1): 1, (1, 0): 1, (0, 2): 1}


def test_casimir_blocks():
    blocks = repn.casimir_blocks()
    assert blocks == {Fraction(2): 27, Fraction(0): 14,
                      Fraction(-6): 7, Fraction(-12): 1}


def test_invariant_dims():
    assert repn.invariant_dim([(0, 1), (0, 1)]) == 1
    assert repn.invariant_dim([(0, 1), (1, 0)]) == 0
    assert repn.invariant_dim([(0, 1)] * 4 ) == 4
    assert repn.invariant_dim([]) == 1


def test_hom_multiplicity():
    assert repn.hom_multiplicity((0, 2), [(0, 1), (0, 1)]) == 1
    assert repn.hom_multiplicity((2, 0), [(0, 1), (0, 1)]) == 0


def test_weight_multiplicities_of_adjoint():
    mults = repn.weight_multiplicities(rd.OMEGA1)
    assert mults[(0, 0)] == 2
    assert sum(mults.values()) == 14


def test_tensor_rejects_nondominant():
    with pytest.raises(ValueError):
        repn.tensor_decompose((-1, 0), (0, 1))
