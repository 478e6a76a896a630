from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from birkhoff_lattice import (
    BudgetExceeded,
    CycleError,
    DuplicateLabelError,
    FinitePoset,
    UnknownLabelError,
    enumerate_order_ideals,
    from_cover_relation,
    is_antichain,
    is_order_ideal,
    principal_ideal,
    transitive_reduction,
)
from birkhoff_lattice import families
from birkhoff_lattice.errors import InvalidPosetError

from oracles import brute_covers, brute_ideals, divides


@st.composite
def dag_posets(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    labels = [f"e{i}" for i in range(n)]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return from_cover_relation(labels, [(labels[i], labels[j]) for i, j in chosen])


def test_singleton():
    P = from_cover_relation(["a"], [])
    assert P.leq.tolist() == [[True]]


def test_chain_transitivity_inferred():
    P = from_cover_relation(["a", "b", "c"], [("a", "b"), ("b", "c")])
    assert P.le("a", "c")
    assert not P.le("c", "a")


def test_cycle_rejected():
    with pytest.raises(CycleError):
        from_cover_relation(["a", "b"], [("a", "b"), ("b", "a")])


def test_bad_labels():
    with pytest.raises(UnknownLabelError):
        from_cover_relation(["a"], [("a", "z")])
    with pytest.raises(DuplicateLabelError):
        from_cover_relation(["a", "a"], [])


def test_constructor_validates():
    with pytest.raises(InvalidPosetError):
        FinitePoset(["a", "b", "c"], [[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    with pytest.raises(InvalidPosetError):
        FinitePoset(["a", "b"], [[1, 1], [1, 1]])


def test_transitive_reduction_examples():
    assert transitive_reduction(families.chain(3)) == [("0", "1"), ("1", "2")]
    assert transitive_reduction(families.antichain(3)) == []
    B2 = families.boolean(2)
    expected = brute_covers(B2.labels, B2.le)
    assert len(expected) == 4
    assert set(transitive_reduction(B2)) == expected


def test_is_order_ideal_examples():
    C = families.chain(3)
    assert is_order_ideal(C, set())
    assert is_order_ideal(C, {"0", "1"})
    assert not is_order_ideal(C, {"1"})
    G = families.grid(3, 3)
    assert is_order_ideal(G, {"1,1", "2,1", "1,2"})
    assert not is_order_ideal(G, {"1,1", "2,2"})
    with pytest.raises(UnknownLabelError):
        is_order_ideal(C, {"x"})


def test_enumerate_counts():
    assert len(enumerate_order_ideals(families.antichain(3))) == 8
    assert len(enumerate_order_ideals(families.chain(4))) == 5
    G = families.grid(2, 2)
    assert len(brute_ideals(G.labels, G.le)) == 6
    assert len(enumerate_order_ideals(G)) == 6


def test_enumerate_empty_poset():
    ideals = enumerate_order_ideals(families.chain(0))
    assert [i.members for i in ideals] == [frozenset()]


def test_enumerate_order_is_size_then_lex():
    ideals = enumerate_order_ideals(families.antichain(3))
    keys = [(len(i), sorted(i.members)) for i in ideals]
    assert keys == sorted(keys)


def test_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_order_ideals(families.antichain(10), budget=100)


def test_budget_env(monkeypatch):
    monkeypatch.setenv("BIRKHOFF_BUDGET", "10")
    with pytest.raises(BudgetExceeded):
        enumerate_order_ideals(families.antichain(5))


def test_principal_ideal():
    C = families.chain(3)
    assert principal_ideal(C, "0").labels == {"0"}
    assert principal_ideal(C, "2").labels == {"0", "1", "2"}
    D = families.divisor(12)
    expected = {d for d in D.labels if divides(d, "6")}
    assert expected == {"1", "2", "3", "6"}
    assert principal_ideal(D, "6").labels == expected


def test_is_antichain():
    C = families.chain(3)
    assert is_antichain(C, set())
    assert is_antichain(C, {"1"})
    assert not is_antichain(C, {"0", "1"})
    B3 = families.boolean(3)
    atoms = {"{1}", "{2}", "{3}"}
    assert all(not B3.comparable(a, b) for a in atoms for b in atoms if a != b)
    assert is_antichain(B3, atoms)


@settings(max_examples=60, deadline=None)
@given(dag_posets(max_n=8))
def test_partial_order_laws(P):
    L = P.leq
    n = len(P)
    assert all(L[i, i] for i in range(n))
    for i, j in product(range(n), repeat=2):
        if i != j:
            assert not (L[i, j] and L[j, i])
    for i, j, k in product(range(n), repeat=3):
        if L[i, j] and L[j, k]:
            assert L[i, k]


@settings(max_examples=60, deadline=None)
@given(dag_posets(max_n=8))
def test_ideals_match_powerset_filter(P):
    ideals = enumerate_order_ideals(P)
    got = [i.labels for i in ideals]
    assert len(set(got)) == len(got)
    assert all(is_order_ideal(P, s) for s in got)
    assert set(got) == set(brute_ideals(P.labels, P.le))


@settings(max_examples=60, deadline=None)
@given(dag_posets(max_n=10))
def test_reduction_closes_back(P):
    covers = transitive_reduction(P)
    assert set(covers) == brute_covers(P.labels, P.le)
    Q = from_cover_relation(P.labels, covers)
    assert np.array_equal(Q.leq, P.leq)


@pytest.mark.parametrize("n", range(0, 8))
def test_chain_and_antichain_counts(n):
    assert len(enumerate_order_ideals(families.chain(n))) == n + 1
    assert len(enumerate_order_ideals(families.antichain(n))) == 2**n
