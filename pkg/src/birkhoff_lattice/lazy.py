"""Implicit locally finite posets and their lattices of finite order ideals.

A :class:`LazyPoset` is described only by cover functions on string keys,
so it can be infinite. :func:`enumerate_finite_ideals` grows the finite
ideals breadth-first from the empty ideal and stops at a size bound; the
result is a lower set of the full lattice, so every interval inside it is
exact.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Optional

import numpy as np

from .errors import BudgetExceeded, HostMismatch, NonterminatingFrontier
from .lattice import FiniteLattice, try_lattice
from .poset import FinitePoset, default_budget

DEFAULT_FRONTIER_BOUND = 10_000


@dataclass(frozen=True)
class LazyPoset:
    """A poset given by cover functions.

    ``lower_covers`` and ``upper_covers`` map a key to a frozenset of keys.
    ``minimal_elements`` returns a fresh (possibly infinite) iterator.
    ``sort_key`` orders keys inside canonical ideal forms. Two lazy posets
    are equal when ``name`` and ``source`` agree.
    """

    name: str
    key_format: str = field(compare=False)
    lower_covers: Callable[[str], frozenset] = field(compare=False, repr=False)
    upper_covers: Callable[[str], frozenset] = field(compare=False, repr=False)
    minimal_elements: Callable[[], Iterable[str]] = field(compare=False, repr=False)
    rank: Optional[Callable[[str], int]] = field(default=None, compare=False, repr=False)
    sort_key: Callable[[str], object] = field(default=str, compare=False, repr=False)
    source: object = field(default=None, repr=False)


@dataclass(frozen=True)
class FiniteIdeal:
    host: LazyPoset = field(repr=False)
    members: frozenset

    @property
    def labels(self) -> frozenset:
        return self.members

    def sorted_labels(self) -> list[str]:
        return sorted(self.members, key=self.host.sort_key)

    @property
    def canonical(self) -> str:
        return "{" + " ".join(self.sorted_labels()) + "}"

    def __len__(self):
        return len(self.members)

    def __contains__(self, key):
        return key in self.members

    def __le__(self, other):
        return self.members <= other.members

    def __lt__(self, other):
        return self.members < other.members


def _pair(key: str) -> tuple[int, int]:
    x, y = key.split(",")
    return int(x), int(y)


def _key(x: int, y: int) -> str:
    return f"{x},{y}"


@lru_cache(maxsize=None)
def quadrant_poset() -> LazyPoset:
    """Pairs of positive integers under the componentwise order.

    Keys are ``"x,y"``. Finite ideals are Ferrers diagrams, so the ideal
    lattice is Young's lattice.
    """

    def lower(key):
        x, y = _pair(key)
        out = []
        if x > 1:
            out.append(_key(x - 1, y))
        if y > 1:
            out.append(_key(x, y - 1))
        return frozenset(out)

    def upper(key):
        x, y = _pair(key)
        return frozenset((_key(x + 1, y), _key(x, y + 1)))

    return LazyPoset(
        name="quadrant",
        key_format="x,y with x, y >= 1 (decimal)",
        lower_covers=lower,
        upper_covers=upper,
        minimal_elements=lambda: iter(("1,1",)),
        rank=lambda key: sum(_pair(key)) - 2,
        sort_key=_pair,
    )


@lru_cache(maxsize=None)
def shifted_octant_poset() -> LazyPoset:
    """Pairs ``x >= y >= 1`` under the componentwise order; ideals are shifted shapes."""

    def lower(key):
        x, y = _pair(key)
        out = []
        if x - 1 >= y:
            out.append(_key(x - 1, y))
        if y > 1:
            out.append(_key(x, y - 1))
        return frozenset(out)

    def upper(key):
        x, y = _pair(key)
        out = [_key(x + 1, y)]
        if y + 1 <= x:
            out.append(_key(x, y + 1))
        return frozenset(out)

    return LazyPoset(
        name="shifted-octant",
        key_format="x,y with x >= y >= 1 (decimal)",
        lower_covers=lower,
        upper_covers=upper,
        minimal_elements=lambda: iter(("1,1",)),
        rank=lambda key: sum(_pair(key)) - 2,
        sort_key=_pair,
    )


@lru_cache(maxsize=64)
def from_finite(P: FinitePoset) -> LazyPoset:
    cov = P.cover_matrix()
    labels = P.labels
    lower = {lab: frozenset(labels[i] for i in np.flatnonzero(cov[:, j])) for j, lab in enumerate(labels)}
    upper = {lab: frozenset(labels[j] for j in np.flatnonzero(cov[i])) for i, lab in enumerate(labels)}
    minimal = tuple(P.minimal())
    return LazyPoset(
        name="finite",
        key_format="element labels of the wrapped poset",
        lower_covers=lower.__getitem__,
        upper_covers=upper.__getitem__,
        minimal_elements=lambda: iter(minimal),
        sort_key=P.index,
        source=P,
    )


def validate_lazy_poset(P: LazyPoset, sample: int = 200) -> list[str]:
    """Spot-check cover consistency, minimality and rank on the first ``sample`` keys.

    Keys are visited breadth-first from the minimal elements. Returns a
    list of problems; empty means every check passed.
    """
    problems = []
    minimal = set(itertools.islice(P.minimal_elements(), sample))
    seen = list(minimal)
    queue = list(minimal)
    visited = set(minimal)
    while queue and len(seen) < sample:
        key = queue.pop(0)
        for up in sorted(P.upper_covers(key), key=P.sort_key):
            if up not in visited:
                visited.add(up)
                seen.append(up)
                queue.append(up)
    for key in seen:
        lower = P.lower_covers(key)
        for lo in lower:
            if key not in P.upper_covers(lo):
                problems.append(f"{lo} is a lower cover of {key} but {key} is not an upper cover of {lo}")
        for up in P.upper_covers(key):
            if key not in P.lower_covers(up):
                problems.append(f"{up} is an upper cover of {key} but {key} is not a lower cover of {up}")
        if (not lower) != (key in minimal):
            problems.append(f"{key}: empty lower covers and minimality disagree")
        if P.rank is not None:
            for up in P.upper_covers(key):
                if P.rank(up) != P.rank(key) + 1:
                    problems.append(f"rank does not grow by 1 from {key} to {up}")
    return problems


def ideal_additions(
    P: LazyPoset, I: FiniteIdeal, frontier_bound: int = DEFAULT_FRONTIER_BOUND
) -> set[str]:
    """Keys ``e`` outside ``I`` whose lower covers all lie in ``I``."""
    if I.host != P:
        raise HostMismatch(f"ideal belongs to {I.host.name!r}, not {P.name!r}")
    members = I.members
    candidates = set()
    for key in P.minimal_elements():
        if key not in members:
            candidates.add(key)
            if len(candidates) > frontier_bound:
                raise NonterminatingFrontier(frontier_bound)
    for key in members:
        candidates.update(P.upper_covers(key))
    out = {e for e in candidates if e not in members and P.lower_covers(e) <= members}
    if len(out) > frontier_bound:
        raise NonterminatingFrontier(frontier_bound)
    return out


def _check_host(A, B):
    if getattr(A, "host", None) != getattr(B, "host", None):
        raise HostMismatch("ideals come from different posets")


def join_ideals(A: FiniteIdeal, B: FiniteIdeal) -> FiniteIdeal:
    _check_host(A, B)
    return FiniteIdeal(A.host, A.members | B.members)


def meet_ideals(A: FiniteIdeal, B: FiniteIdeal) -> FiniteIdeal:
    _check_host(A, B)
    return FiniteIdeal(A.host, A.members & B.members)


class IdealLattice:
    """Order ideals ordered by inclusion, possibly truncated by cardinality.

    ``ideals`` holds :class:`FiniteIdeal` or :class:`~birkhoff_lattice.poset.OrderIdeal`
    objects, sorted by size and then canonical form. When ``truncated`` is
    true the list is exactly the ideals of size at most ``size_bound``.
    """

    def __init__(self, ideals, truncated=False, size_bound=None):
        self.ideals = tuple(ideals)
        self.truncated = truncated
        self.size_bound = size_bound
        self._keysets = [frozenset(i.labels) for i in self.ideals]
        self._position = {ks: n for n, ks in enumerate(self._keysets)}

    def __len__(self):
        return len(self.ideals)

    def __iter__(self):
        return iter(self.ideals)

    def __getitem__(self, n):
        return self.ideals[n]

    def __repr__(self):
        state = f"truncated at {self.size_bound}" if self.truncated else "complete"
        return f"IdealLattice({len(self)} ideals, {state})"

    def index(self, ideal) -> int:
        return self._position[frozenset(ideal.labels)]

    def find(self, labels: Iterable[str]):
        """The stored ideal with exactly these members, or ``None``."""
        n = self._position.get(frozenset(labels))
        return None if n is None else self.ideals[n]

    @property
    def bottom(self):
        return self.ideals[0] if self.ideals else None

    def rank_counts(self) -> list[int]:
        top = self.size_bound if self.truncated else max((len(i) for i in self.ideals), default=0)
        counts = [0] * (top + 1)
        for ideal in self.ideals:
            counts[len(ideal)] += 1
        return counts

    def by_rank(self) -> dict[int, list]:
        out: dict[int, list] = {}
        for ideal in self.ideals:
            out.setdefault(len(ideal), []).append(ideal)
        return out

    def leq_matrix(self) -> np.ndarray:
        keys = sorted(set().union(*self._keysets)) if self._keysets else []
        col = {k: n for n, k in enumerate(keys)}
        inc = np.zeros((len(self), len(keys)), dtype=np.int64)
        for r, ks in enumerate(self._keysets):
            inc[r, [col[k] for k in ks]] = 1
        # A <= B iff A has no member outside B
        return (inc @ (1 - inc).T) == 0

    def as_poset(self) -> FinitePoset:
        return FinitePoset([i.canonical for i in self.ideals], self.leq_matrix(), check=False)

    def as_lattice(self) -> FiniteLattice:
        return try_lattice(self.as_poset())

    def interval_ideals(self, lo, hi) -> list:
        a, b = frozenset(lo.labels), frozenset(hi.labels)
        return [i for i, ks in zip(self.ideals, self._keysets) if a <= ks <= b]

    def interval(self, lo, hi) -> "IdealLattice":
        """The interval ``[lo, hi]`` as a complete ideal lattice."""
        return IdealLattice(self.interval_ideals(lo, hi))

    def below(self, hi) -> "IdealLattice":
        return self.interval(self.bottom, hi)

    def join(self, a, b):
        """Union of two stored ideals, or ``None`` if it falls outside a truncation."""
        return self.find(frozenset(a.labels) | frozenset(b.labels))

    def meet(self, a, b):
        return self.find(frozenset(a.labels) & frozenset(b.labels))


def enumerate_finite_ideals(
    P: LazyPoset,
    max_size: int,
    budget: int | None = None,
    frontier_bound: int = DEFAULT_FRONTIER_BOUND,
) -> IdealLattice:
    """All finite ideals of ``P`` with at most ``max_size`` members."""
    if max_size < 0:
        raise ValueError("max_size must be >= 0")
    budget = default_budget() if budget is None else budget

    def order(members):
        return [P.sort_key(k) for k in sorted(members, key=P.sort_key)]

    level = [FiniteIdeal(P, frozenset())]
    out = list(level)
    truncated = False
    for size in range(max_size + 1):
        grown = {}
        for ideal in level:
            for e in ideal_additions(P, ideal, frontier_bound):
                members = ideal.members | {e}
                if members not in grown:
                    grown[members] = FiniteIdeal(P, members)
        if not grown:
            break
        if size == max_size:
            truncated = True
            break
        if len(out) + len(grown) > budget:
            raise BudgetExceeded(budget)
        level = sorted(grown.values(), key=lambda i: order(i.members))
        out.extend(level)
    return IdealLattice(out, truncated=truncated, size_bound=max_size if truncated else None)
