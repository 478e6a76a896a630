"""Finite-scale checks of the chain conditions that characterise local finiteness.

Nothing here reasons about genuinely infinite chains. In a structure built
by this library the descending and bounded ascending chain conditions are
probed through three finite facts: a unique bottom exists, every interval
inside a truncation is computed exactly (matching a brute-force
enumeration), and prefix joins of an antichain of join-irreducibles grow
strictly, which is the step that turns an infinite antichain into an
infinite bounded ascending chain.

The "well-partially-ordered" wording is read here only as "no infinite
descending chain". The usual definition also forbids infinite antichains;
that stronger reading is not checked.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import kernels
from .errors import (
    BudgetExceeded,
    EmptyStructure,
    NotAntichain,
    NotJoinIrreducible,
    StrictIncreaseViolated,
)
from .lattice import FiniteLattice, join_irreducibles
from .lazy import FiniteIdeal, IdealLattice
from .poset import FinitePoset, OrderIdeal, default_budget, is_antichain, is_order_ideal

FINITE_SCALE_NOTE = (
    "finite-scale checks: bottom detection stands in for 'no infinite descending chain'; "
    "exact interval enumeration stands in for 'no bounded infinite ascending chain'"
)


@dataclass
class ChainReport:
    has_bottom: bool = False
    intervals_checked: int = 0
    max_interval_size: int = 0
    longest_chain_found: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_kv(self) -> str:
        return "\n".join(
            [
                f"has_bottom={str(self.has_bottom).lower()}",
                f"intervals_checked={self.intervals_checked}",
                f"max_interval_size={self.max_interval_size}",
                f"longest_chain_found={self.longest_chain_found}",
                f"violations={len(self.violations)}",
                f"ok={str(self.ok).lower()}",
            ]
        )

    def to_text(self) -> str:
        lines = [
            "chain conditions: " + ("pass" if self.ok else "FAILED"),
            f"  bottom present        {'yes' if self.has_bottom else 'no'}",
            f"  intervals checked     {self.intervals_checked}",
            f"  largest interval      {self.max_interval_size}",
            f"  longest chain         {self.longest_chain_found}",
            f"  note: {FINITE_SCALE_NOTE}",
        ]
        if self.violations:
            lines.append("  violations:")
            lines.extend(f"    {v}" for v in self.violations)
        return "\n".join(lines)


def _order_of(T) -> FinitePoset:
    if isinstance(T, FiniteLattice):
        return T.order
    if isinstance(T, IdealLattice):
        return T.as_poset()
    if isinstance(T, FinitePoset):
        return T
    raise TypeError(f"expected a poset, lattice or ideal lattice, got {type(T).__name__}")


def find_bottom(T):
    """Label of the element below every other, or ``None``."""
    P = _order_of(T)
    if len(P) == 0:
        raise EmptyStructure("structure has no elements")
    below_all = np.flatnonzero(P.leq.all(axis=1))
    return P.labels[below_all[0]] if below_all.size else None


def check_bottom(T) -> bool:
    return find_bottom(T) is not None


def longest_chain(T) -> int:
    """Number of elements in a longest chain, by longest path over the covers."""
    P = _order_of(T)
    n = len(P)
    if n == 0:
        return 0
    cov = kernels.cover_matrix(P.leq).astype(bool)
    # any linear extension works; sort by size of the down-set
    order = np.argsort(P.leq.sum(axis=0), kind="stable")
    depth = np.ones(n, dtype=np.int64)
    for j in order:
        lower = np.flatnonzero(cov[:, j])
        if lower.size:
            depth[j] = depth[lower].max() + 1
    return int(depth.max())


def _closed(ideal, members: frozenset) -> bool:
    if isinstance(ideal, FiniteIdeal):
        lower = ideal.host.lower_covers
        return all(lower(k) <= members for k in members)
    if isinstance(ideal, OrderIdeal):
        return is_order_ideal(ideal.poset, members)
    raise TypeError(f"unsupported ideal type {type(ideal).__name__}")


def brute_force_interval(lo, hi) -> set[frozenset]:
    """Every ideal between ``lo`` and ``hi``, found by testing all subsets of ``hi - lo``."""
    base = frozenset(lo.labels)
    free = sorted(frozenset(hi.labels) - base)
    out = set()
    for r in range(len(free) + 1):
        for extra in itertools.combinations(free, r):
            members = base | frozenset(extra)
            if _closed(lo, members):
                out.add(members)
    return out


def check_local_finiteness(T: IdealLattice, budget: int | None = None) -> ChainReport:
    """Compute every interval ``[x, y]`` of ``T`` and compare with brute force."""
    budget = default_budget() if budget is None else budget
    rep = ChainReport()
    if len(T) == 0:
        raise EmptyStructure("ideal lattice has no elements")
    bottom = T.bottom
    rep.has_bottom = len(bottom) == 0 and all(frozenset() <= frozenset(i.labels) for i in T)
    if not rep.has_bottom:
        rep.violations.append("the empty ideal is missing or not the bottom")
    keysets = [frozenset(i.labels) for i in T]
    for x, kx in zip(T.ideals, keysets):
        for y, ky in zip(T.ideals, keysets):
            if not kx <= ky:
                continue
            rep.intervals_checked += 1
            if rep.intervals_checked > budget:
                raise BudgetExceeded(budget, "intervals")
            computed = {frozenset(i.labels) for i in T.interval_ideals(x, y)}
            rep.max_interval_size = max(rep.max_interval_size, len(computed))
            if computed != brute_force_interval(x, y):
                rep.violations.append(f"interval [{x.canonical}, {y.canonical}] is incomplete")
    rep.longest_chain_found = longest_chain(T)
    return rep


def lattice_chain_report(L: FiniteLattice) -> ChainReport:
    """Bottom, interval and chain statistics for an explicit finite lattice."""
    rep = ChainReport(has_bottom=check_bottom(L))
    if not rep.has_bottom:
        rep.violations.append("no element lies below every other")
    leq = L.leq
    for x in range(len(L)):
        for y in np.flatnonzero(leq[x]):
            rep.intervals_checked += 1
            size = int((leq[x] & leq[:, y]).sum())
            scan = sum(1 for z in range(len(L)) if leq[x, z] and leq[z, y])
            if size != scan:
                rep.violations.append(f"interval [{L.labels[x]}, {L.labels[y]}] miscounted")
            rep.max_interval_size = max(rep.max_interval_size, size)
    rep.longest_chain_found = longest_chain(L)
    return rep


def partial_join_chain(L: FiniteLattice, A: Sequence[str]) -> list[str]:
    """Prefix joins ``a1, a1∨a2, ...`` of an antichain of join-irreducibles.

    Raises :class:`StrictIncreaseViolated` if some prefix join fails to grow,
    which cannot happen in a distributive lattice.
    """
    A = list(A)
    if len(set(A)) != len(A) or not is_antichain(L.order, A):
        raise NotAntichain(f"{A} is not an antichain")
    irreducible = set(join_irreducibles(L).labels)
    for a in A:
        if a not in irreducible:
            raise NotJoinIrreducible(f"{a!r} is not join-irreducible")
    chain: list[str] = []
    for step, a in enumerate(A):
        nxt = a if not chain else L.join(chain[-1], a)
        if chain and (nxt == chain[-1] or not L.le(chain[-1], nxt)):
            raise StrictIncreaseViolated(chain + [nxt], step)
        chain.append(nxt)
    return chain


def sample_antichains(L: FiniteLattice, count: int, seed: int = 0) -> list[list[str]]:
    """Random antichains of join-irreducibles, by rejection sampling.

    Each draw picks a size uniformly, then a random ordered subset of that
    size, and is kept only if it is an antichain. Singletons always pass,
    so the loop terminates.
    """
    J = join_irreducibles(L)
    labels = list(J.labels)
    if not labels:
        return []
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        k = rng.randint(1, len(labels))
        pick = rng.sample(labels, k)
        if is_antichain(J, pick):
            out.append(pick)
    return out
