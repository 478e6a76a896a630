from itertools import product
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from birkhoff_lattice import (
    NotALattice,
    NotComparable,
    interval,
    irredundant_join_decomposition,
    is_antichain,
    is_distributive,
    is_join_prime,
    join_irreducibles,
    try_lattice,
)
from birkhoff_lattice import families
from birkhoff_lattice.errors import BottomNotPrime, EmptyPoset, NoDecomposition
from birkhoff_lattice.lattice import (
    join_irreducibles_bruteforce,
    lattice_law_violations,
    sublattice_interval,
)

from conftest import random_posets
from oracles import brute_join, brute_meet, divides


def lcm(a, b):
    return a * b // gcd(a, b)


def test_chain_join_is_max():
    L = try_lattice(families.chain(3))
    for a, b in product(L.labels, repeat=2):
        assert L.join(a, b) == max(a, b, key=int)
        assert L.meet(a, b) == min(a, b, key=int)


def test_antichain_not_lattice():
    with pytest.raises(NotALattice):
        try_lattice(families.antichain(2))


def test_empty_poset_not_lattice():
    with pytest.raises(EmptyPoset):
        try_lattice(families.chain(0))


def test_divisor_join_is_lcm():
    L = try_lattice(families.divisor(12))
    for a, b in product(L.labels, repeat=2):
        assert L.join(a, b) == str(lcm(int(a), int(b)))
        assert L.meet(a, b) == str(gcd(int(a), int(b)))


def test_tables_match_bound_search(corpus, m3, n5):
    for L in [*corpus.values(), m3, n5]:
        labs = L.labels
        for a, b in product(labs, repeat=2):
            assert L.join(a, b) == brute_join(labs, L.le, a, b)
            assert L.meet(a, b) == brute_meet(labs, L.le, a, b)


def test_lattice_laws_hold(corpus, m3, n5):
    for L in [*corpus.values(), m3, n5]:
        assert lattice_law_violations(L) == []


def test_distributive_examples(m3, n5):
    for n in range(1, 8):
        assert is_distributive(try_lattice(families.chain(n))) is True
    w = is_distributive(m3)
    assert w != True and set(w) == {"a", "b", "c"}
    w = is_distributive(n5)
    assert w != True
    a, b, c = w
    assert m3.meet(a, m3.join(b, c)) != m3.join(m3.meet(a, b), m3.meet(a, c))


def test_n5_witness_breaks_identity(n5):
    a, b, c = is_distributive(n5)
    assert n5.meet(a, n5.join(b, c)) != n5.join(n5.meet(a, b), n5.meet(a, c))


def test_corpus_is_distributive(corpus):
    for name, L in corpus.items():
        assert is_distributive(L) is True, name


def test_join_irreducible_examples():
    C = try_lattice(families.chain(5))
    assert set(join_irreducibles(C).labels) == {"1", "2", "3", "4"}
    B3 = try_lattice(families.boolean(3))
    J = join_irreducibles(B3)
    assert set(J.labels) == {"{1}", "{2}", "{3}"}
    assert is_antichain(J, J.labels)
    D = try_lattice(families.divisor(12))
    assert set(join_irreducibles(D).labels) == {"2", "3", "4"}


def test_join_irreducibles_match_definition(corpus, m3, n5):
    for L in [*corpus.values(), m3, n5]:
        assert set(join_irreducibles(L).labels) == set(join_irreducibles_bruteforce(L))


def test_decomposition_examples():
    D = try_lattice(families.divisor(12))
    assert irredundant_join_decomposition(D, "1") == set()
    assert irredundant_join_decomposition(D, "4") == {"4"}
    assert irredundant_join_decomposition(D, "12") == {"3", "4"}


def test_decomposition_invariant(corpus):
    for L in corpus.values():
        J = join_irreducibles(L)
        for x in L.labels:
            parts = irredundant_join_decomposition(L, x)
            assert L.join_all(parts) == x
            assert parts <= set(J.labels)
            assert is_antichain(L.order, parts)


def test_decomposition_fails_on_m3_top(m3):
    with pytest.raises(NoDecomposition):
        irredundant_join_decomposition(m3, "1")


def test_join_prime_examples(m3):
    C = try_lattice(families.chain(4))
    assert is_join_prime(C, "1")
    B3 = try_lattice(families.boolean(3))
    assert all(is_join_prime(B3, j) for j in join_irreducibles(B3).labels)
    assert not is_join_prime(m3, "a")
    with pytest.raises(BottomNotPrime):
        is_join_prime(C, "0")


def test_join_prime_by_pair_scan(corpus, m3):
    for L in [*corpus.values(), m3]:
        for j in join_irreducibles(L).labels:
            scan = all(
                not L.le(j, L.join(a, b)) or L.le(j, a) or L.le(j, b)
                for a, b in product(L.labels, repeat=2)
            )
            assert is_join_prime(L, j) == scan


def test_interval_examples():
    D = try_lattice(families.divisor(12))
    assert interval(D, "6", "6") == {"6"}
    assert interval(D, "1", "12") == set(D.labels)
    expected = {d for d in D.labels if divides("2", d) and divides(d, "12")}
    assert expected == {"2", "4", "6", "12"}
    assert interval(D, "2", "12") == expected
    with pytest.raises(NotComparable):
        interval(D, "4", "3")
    sub = sublattice_interval(D, "2", "12")
    assert sub.bottom_label == "2" and sub.top_label == "12"


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_random_lattice_candidates_agree_with_bound_search(seed):
    (P,) = random_posets(1, 7, seed=seed)
    labs = P.labels
    pairs = list(product(labs, repeat=2))
    complete = len(P) > 0 and all(
        brute_join(labs, P.le, a, b) is not None and brute_meet(labs, P.le, a, b) is not None
        for a, b in pairs
    )
    if not complete:
        with pytest.raises((NotALattice, EmptyPoset)):
            try_lattice(P)
        return
    L = try_lattice(P)
    for a, b in pairs:
        assert L.join(a, b) == brute_join(labs, P.le, a, b)
        assert L.meet(a, b) == brute_meet(labs, P.le, a, b)
