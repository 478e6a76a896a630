import pytest
from hypothesis import given, settings, strategies as st

from birkhoff_lattice import (
    FiniteIdeal,
    HostMismatch,
    NonterminatingFrontier,
    enumerate_finite_ideals,
    enumerate_order_ideals,
    from_finite,
    ideal_additions,
    is_distributive,
    join_ideals,
    join_irreducibles,
    meet_ideals,
    quadrant_poset,
    shifted_octant_poset,
    verify_representation,
)
from birkhoff_lattice import families
from birkhoff_lattice.lazy import LazyPoset, validate_lazy_poset

from oracles import distinct_partition_counts, partition_counts

Q = quadrant_poset()
O = shifted_octant_poset()


def ideal(P, *keys):
    return FiniteIdeal(P, frozenset(keys))


def test_quadrant_covers():
    assert Q.lower_covers("1,1") == frozenset()
    assert Q.lower_covers("2,3") == {"1,3", "2,2"}
    assert Q.upper_covers("1,1") == {"2,1", "1,2"}
    assert list(Q.minimal_elements()) == ["1,1"]


def test_octant_covers():
    assert O.lower_covers("1,1") == frozenset()
    assert O.lower_covers("2,2") == {"2,1"}
    assert O.upper_covers("3,1") == {"4,1", "3,2"}


def test_generators_validate():
    assert validate_lazy_poset(Q) == []
    assert validate_lazy_poset(O) == []
    assert validate_lazy_poset(from_finite(families.boolean(2))) == []


def test_from_finite_minimals():
    assert set(from_finite(families.chain(3)).minimal_elements()) == {"0"}
    assert set(from_finite(families.antichain(3)).minimal_elements()) == {"a0", "a1", "a2"}


def test_ideal_additions_examples():
    assert ideal_additions(Q, ideal(Q)) == {"1,1"}
    assert ideal_additions(Q, ideal(Q, "1,1")) == {"2,1", "1,2"}
    assert ideal_additions(Q, ideal(Q, "1,1", "2,1", "1,2")) == {"3,1", "2,2", "1,3"}


def test_ideal_additions_host_mismatch():
    with pytest.raises(HostMismatch):
        ideal_additions(O, ideal(Q))


def test_infinite_antichain_trips_frontier():
    from itertools import count

    P = LazyPoset(
        name="naturals-antichain",
        key_format="n",
        lower_covers=lambda k: frozenset(),
        upper_covers=lambda k: frozenset(),
        minimal_elements=lambda: (str(i) for i in count()),
    )
    with pytest.raises(NonterminatingFrontier):
        ideal_additions(P, ideal(P), frontier_bound=50)
    with pytest.raises(NonterminatingFrontier):
        enumerate_finite_ideals(P, 2, frontier_bound=50)


def test_enumerate_examples():
    assert enumerate_finite_ideals(Q, 3).rank_counts() == [1, 1, 2, 3]
    assert enumerate_finite_ideals(O, 4).rank_counts() == [1, 1, 1, 2, 2]
    T = enumerate_finite_ideals(from_finite(families.chain(3)), 3)
    assert len(T) == 4 and not T.truncated
    L = T.as_lattice()
    assert [len(i) for i in T] == [0, 1, 2, 3]
    assert all(L.le(a, b) for a, b in zip(L.labels, L.labels[1:]))


def test_rank_counts_match_oracles():
    assert enumerate_finite_ideals(Q, 10).rank_counts() == partition_counts(10)
    assert enumerate_finite_ideals(O, 10).rank_counts() == distinct_partition_counts(10)


def test_join_meet_examples():
    A = ideal(Q, "1,1", "2,1")
    B = ideal(Q, "1,1", "1,2")
    E = ideal(Q)
    assert join_ideals(A, E) == A
    assert meet_ideals(A, E) == E
    assert join_ideals(A, B).members == {"1,1", "2,1", "1,2"}
    assert meet_ideals(A, B) <= A <= join_ideals(A, B)
    with pytest.raises(HostMismatch):
        join_ideals(A, ideal(O))


def closed(I):
    return all(I.host.lower_covers(k) <= I.members for k in I.members)


@pytest.mark.parametrize("P", [Q, O], ids=["quadrant", "octant"])
def test_truncation_closure(P):
    n = 7
    T = enumerate_finite_ideals(P, n)
    assert T.truncated
    assert all(closed(I) for I in T)
    assert len({I.members for I in T}) == len(T)
    for A in T:
        for B in T:
            U = join_ideals(A, B)
            if len(U) <= n:
                assert T.find(U.members) is not None
            assert T.find(meet_ideals(A, B).members) is not None


def test_finite_enumeration_matches_order_ideals():
    P = families.grid(3, 2)
    T = enumerate_finite_ideals(from_finite(P), 10)
    assert not T.truncated
    assert {frozenset(I.labels) for I in T} == {i.labels for i in enumerate_order_ideals(P)}
    assert is_distributive(T.as_lattice()) is True


def test_intervals_below_small_ideals_represent():
    T = enumerate_finite_ideals(Q, 8)
    for I in T:
        L = T.below(I).as_lattice()
        rep = verify_representation(L)
        assert rep.ok, I.canonical
        irr = {lab for lab in join_irreducibles(L).labels}
        sub = T.below(I)
        principal = {
            J.canonical
            for J in sub
            if len(J) and sum(1 for k in J.members if not (Q.upper_covers(k) & J.members)) == 1
        }
        assert irr == principal


def test_canonical_form_uses_generator_order():
    T = enumerate_finite_ideals(Q, 2)
    assert [I.canonical for I in T] == ["{}", "{1,1}", "{1,1 1,2}", "{1,1 2,1}"]


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 6), st.integers(1, 6))
def test_quadrant_lower_covers_componentwise(x, y):
    expected = set()
    if x > 1:
        expected.add(f"{x-1},{y}")
    if y > 1:
        expected.add(f"{x},{y-1}")
    assert Q.lower_covers(f"{x},{y}") == expected
