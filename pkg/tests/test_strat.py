"""Stratification combinatorics: labels, order, degenerations, coverings."""

import pytest

from g2gaudin import strat
from g2gaudin.strat import StratumLabel as S


def test_label_canonical_form():
    a = S((((0, 1), 0), ((1, 0), 0)))
    b = S((((1, 0), 0), ((0, 1), 0)))
    assert a == b
    assert a.pairs[0] == ((1, 0), 0)  # larger size first


def test_label_rejects_zero_pair():
    with pytest.raises(ValueError):
        S((((0, 0), 0),))


def test_enumerate_counts():
    assert len(strat.enumerate_nontrivial(7)) == 1
    assert strat.enumerate_nontrivial(7)[0].pairs == ()
    d8 = strat.enumerate_nontrivial(8)
    assert len(d8) == 1 and d8[0].name() == "((0,0)_1)"
    assert len(strat.enumerate_nontrivial(11)) == 17


def test_enumerate_budget_invariant():
    for L in strat.enumerate_nontrivial(10):
        assert L.budget() == 3
        assert strat.is_nontrivial(L)


def test_enumerate_no_duplicates():
    nodes = strat.enumerate_nontrivial(11)
    assert len(set(nodes)) == len(nodes)


def test_stratum_leq_examples():
    A = S((((0, 1), 0),) * 4)
    B = S((((1, 0), 0), ((0, 1), 0), ((0, 1), 0)))
    assert strat.stratum_leq(A, B)
    A2 = S((((0, 2), 0), ((0, 1), 0), ((0, 1), 0)))
    B2 = S((((1, 0), 0), ((1, 0), 0)))
    assert not strat.stratum_leq(A2, B2)
    assert strat.stratum_leq(A, A)


def test_stratum_leq_transitive_on_d11():
    H = strat.hasse_diagram(11)
    succ = {}
    for a, b in H.edges:
        succ.setdefault(a, []).append(b)
    for a, bs in succ.items():
        for b in bs:
            for c in succ.get(b, []):
                assert strat.stratum_leq(a, c)


def test_simple_degenerations_d9():
    A = S((((0, 1), 0), ((0, 1), 0)))
    got = {x.name() for x in strat.simple_degenerations(A)}
    assert got == {"((0,2))", "((1,0))", "((0,1)_1)", "((0,0)_2)"}


def test_simple_degenerations_trivial_merge():
    A = S((((0, 0), 1), ((0, 0), 1)))
    got = [x.name() for x in strat.simple_degenerations(A)]
    assert got == ["((0,0)_2)"]


def test_simple_degenerations_xin3():
    A = S((((0, 1), 1), ((0, 1), 0), ((0, 1), 0)))
    got = {x.name()
           for x in strat.simple_degenerations(A, require_nontrivial=True)}
    assert got == {"((0,1)_2,(0,1))", "((0,1)_1,(0,1)_1)"}


def test_hasse_d11_shape():
    H = strat.hasse_diagram(11)
    assert len(H.nodes) == 17 and len(H.edges) == 29
    layers = {}
    for n in H.nodes:
        layers[n.dim] = layers.get(n.dim, 0) + 1
    assert layers == {4: 4, 3: 6, 2: 6, 1: 1}
    # unique minimal node
    uppers = {a for a, _ in H.edges}
    minimal = [n for n in H.nodes if n not in uppers and n.dim == 1]
    assert [n.name() for n in minimal] == ["((0,0)_4)"]


def test_hasse_maximal_nodes_d11():
    H = strat.hasse_diagram(11)
    lowers = {b for _, b in H.edges}
    for n in H.nodes:
        if n not in lowers:
            assert all(p in (((0, 1), 0), ((0, 0), 1)) for p in n.pairs)


def test_dot_deterministic():
    d1 = strat.to_dot(strat.hasse_diagram(11))
    d2 = strat.to_dot(strat.hasse_diagram(11))
    assert d1 == d2
    assert d1.startswith("digraph")


def test_symmetry_coefficient():
    assert strat.symmetry_coefficient(
        S((((0, 1), 0),) * 3 + (((0, 0), 1),))) == 4
    assert strat.symmetry_coefficient(S((((0, 1), 0),) * 4)) == 1
    assert strat.symmetry_coefficient(
        S((((1, 0), 0), ((0, 1), 0)))) == 1


def test_covering_degree():
    for n, want in ((2, 1), (3, 1), (4, 4)):
        assert strat.covering_degree(S((((0, 1), 0),) * n)) == want
