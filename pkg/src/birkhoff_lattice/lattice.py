"""Finite lattices with precomputed join and meet tables."""
from __future__ import annotations

from functools import reduce
from typing import Iterable

import numpy as np

from . import kernels
from .errors import (
    BottomNotPrime,
    EmptyPoset,
    NoDecomposition,
    NotALattice,
    NotComparable,
)
from .poset import FinitePoset


class FiniteLattice:
    """A finite poset together with its join and meet tables.

    Build one with :func:`try_lattice`. Tables are indexed by element
    position in ``order.labels``.
    """

    __slots__ = ("order", "join_table", "meet_table", "bottom", "top")

    def __init__(self, order, join_table, meet_table, bottom, top):
        self.order = order
        self.join_table = join_table
        self.meet_table = meet_table
        self.bottom = bottom
        self.top = top

    def __len__(self):
        return len(self.order)

    def __iter__(self):
        return iter(self.order.labels)

    def __contains__(self, label):
        return label in self.order

    def __repr__(self):
        return (
            f"FiniteLattice({len(self)} elements, bottom={self.labels[self.bottom]!r}, "
            f"top={self.labels[self.top]!r})"
        )

    @property
    def labels(self):
        return self.order.labels

    @property
    def leq(self):
        return self.order.leq

    @property
    def bottom_label(self) -> str:
        return self.labels[self.bottom]

    @property
    def top_label(self) -> str:
        return self.labels[self.top]

    def index(self, label):
        return self.order.index(label)

    def le(self, a, b):
        return self.order.le(a, b)

    def join(self, a: str, b: str) -> str:
        return self.labels[self.join_table[self.index(a), self.index(b)]]

    def meet(self, a: str, b: str) -> str:
        return self.labels[self.meet_table[self.index(a), self.index(b)]]

    def join_all(self, labels: Iterable[str]) -> str:
        """Join of a finite set; the empty join is the bottom."""
        idx = reduce(
            lambda acc, i: int(self.join_table[acc, i]),
            (self.index(x) for x in labels),
            self.bottom,
        )
        return self.labels[idx]

    def meet_all(self, labels: Iterable[str]) -> str:
        idx = reduce(
            lambda acc, i: int(self.meet_table[acc, i]),
            (self.index(x) for x in labels),
            self.top,
        )
        return self.labels[idx]


def try_lattice(P: FinitePoset) -> FiniteLattice:
    """Turn ``P`` into a lattice, or raise :class:`NotALattice` with a witness pair."""
    n = len(P)
    if n == 0:
        raise EmptyPoset("the empty poset has no bottom and is not a lattice")
    join, meet, witness = kernels.lattice_tables(P.leq.view(np.uint8))
    if witness is not None:
        i, j, kind = witness
        raise NotALattice((P.labels[i], P.labels[j]), kind)
    join.setflags(write=False)
    meet.setflags(write=False)
    bottom = int(reduce(lambda a, b: meet[a, b], range(n)))
    top = int(reduce(lambda a, b: join[a, b], range(n)))
    return FiniteLattice(P, join, meet, bottom, top)


def is_distributive(L: FiniteLattice):
    """``True``, or the first triple ``(a, b, c)`` breaking a∧(b∨c) = (a∧b)∨(a∧c)."""
    w = kernels.distributive_witness(L.join_table, L.meet_table)
    if w is None:
        return True
    return tuple(L.labels[i] for i in w)


def lattice_law_violations(L: FiniteLattice) -> list[str]:
    """Exhaustive commutativity, associativity, absorption and bound checks."""
    J, M = np.asarray(L.join_table), np.asarray(L.meet_table)
    lab = L.labels
    out = []
    for name, T in (("join", J), ("meet", M)):
        bad = np.argwhere(T != T.T)
        if bad.size:
            a, b = bad[0]
            out.append(f"{name} not commutative at ({lab[a]}, {lab[b]})")
        for a in range(len(L)):
            # T[T[a,b], c] vs T[a, T[b,c]]
            bad = np.argwhere(T[T[a]] != T[a][T])
            if bad.size:
                b, c = bad[0]
                out.append(f"{name} not associative at ({lab[a]}, {lab[b]}, {lab[c]})")
                break
    n = len(L)
    ar = np.arange(n)
    bad = np.argwhere(J[ar[:, None], M] != ar[:, None])
    if bad.size:
        a, b = bad[0]
        out.append(f"absorption a∨(a∧b)=a fails at ({lab[a]}, {lab[b]})")
    bad = np.argwhere(M[ar[:, None], J] != ar[:, None])
    if bad.size:
        a, b = bad[0]
        out.append(f"absorption a∧(a∨b)=a fails at ({lab[a]}, {lab[b]})")
    if not (L.leq[L.bottom].all() and L.leq[:, L.top].all()):
        out.append("bottom/top do not bound every element")
    return out


def _irreducible_indices(L: FiniteLattice) -> list[int]:
    cov = L.order.cover_matrix()
    return [int(i) for i in np.flatnonzero(cov.sum(axis=0) == 1)]


def join_irreducibles(L: FiniteLattice) -> FinitePoset:
    """Induced sub-poset on elements with exactly one lower cover.

    In a finite lattice that is the same as not being a join of strictly
    smaller elements; the bottom has no lower cover and is excluded.
    """
    idx = _irreducible_indices(L)
    return L.order.induced([L.labels[i] for i in idx])


def join_irreducibles_bruteforce(L: FiniteLattice) -> list[str]:
    """Definition check: x != bottom and no subset of elements below x joins to x.

    Builds the set of joins of all subsets of the elements below x one
    element at a time. Only for cross-checking small lattices.
    """
    out = []
    for x in range(len(L)):
        if x == L.bottom:
            continue
        smaller = [i for i in np.flatnonzero(L.leq[:, x]) if i != x]
        joinable = {L.bottom}
        for s in smaller:
            joinable |= {int(L.join_table[a, s]) for a in joinable}
        if x not in joinable:
            out.append(L.labels[x])
    return out


def irredundant_join_decomposition(L: FiniteLattice, x: str) -> set[str]:
    """Maximal join-irreducibles below ``x``; their join is ``x`` in a distributive lattice.

    Raises :class:`NoDecomposition` when that set does not join to ``x`` or is
    redundant, which can only happen in a non-distributive lattice.
    """
    xi = L.index(x)
    below = [j for j in _irreducible_indices(L) if L.leq[j, xi]]
    maximal = [
        j for j in below if not any(k != j and L.leq[j, k] for k in below)
    ]
    labels = [L.labels[j] for j in maximal]
    if L.join_all(labels) != x:
        raise NoDecomposition(f"maximal join-irreducibles below {x!r} do not join to it")
    for drop in labels:
        if L.join_all(y for y in labels if y != drop) == x:
            raise NoDecomposition(
                f"decomposition of {x!r} is redundant: {drop!r} can be removed"
            )
    return set(labels)


def is_join_prime(L: FiniteLattice, j: str) -> bool:
    ji = L.index(j)
    if ji == L.bottom:
        raise BottomNotPrime("the bottom element is the empty join and is never join-prime")
    above = L.leq[ji]
    J = np.asarray(L.join_table)
    below_join = above[J]
    splits = above[:, None] | above[None, :]
    return not (below_join & ~splits).any()


def interval(L: FiniteLattice, x: str, y: str) -> set[str]:
    xi, yi = L.index(x), L.index(y)
    if not L.leq[xi, yi]:
        raise NotComparable(x, y)
    mask = L.leq[xi] & L.leq[:, yi]
    return {L.labels[i] for i in np.flatnonzero(mask)}


def sublattice_interval(L: FiniteLattice, x: str, y: str) -> FiniteLattice:
    """The interval ``[x, y]`` as a lattice in its own right."""
    return try_lattice(L.order.induced(interval(L, x, y)))


__all__ = [
    "FiniteLattice",
    "try_lattice",
    "is_distributive",
    "lattice_law_violations",
    "join_irreducibles",
    "join_irreducibles_bruteforce",
    "irredundant_join_decomposition",
    "is_join_prime",
    "interval",
    "sublattice_interval",
]
