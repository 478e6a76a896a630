"""Finite posets stored as a dense ``leq`` matrix, and their order ideals."""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import (
    BudgetExceeded,
    CycleError,
    DuplicateLabelError,
    InvalidPosetError,
    UnknownLabelError,
)

DEFAULT_BUDGET = 1_000_000


def default_budget() -> int:
    """Ideal-count cap, overridable through ``BIRKHOFF_BUDGET``."""
    raw = os.environ.get("BIRKHOFF_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


class FinitePoset:
    """Immutable finite partial order on string labels.

    ``leq[i, j]`` is true iff element ``i`` is below element ``j``. The
    constructor checks reflexivity, antisymmetry and transitivity; use
    :func:`from_cover_relation` to build a poset from its Hasse diagram.
    """

    __slots__ = ("labels", "leq", "_index", "_hash")

    def __init__(self, labels: Sequence[str], leq, *, check: bool = True):
        labels = tuple(str(x) for x in labels)
        index = {}
        for i, lab in enumerate(labels):
            if lab in index:
                raise DuplicateLabelError(lab)
            index[lab] = i
        mat = np.array(leq, dtype=bool).reshape(len(labels), len(labels))
        mat.setflags(write=False)
        self.labels = labels
        self.leq = mat
        self._index = index
        self._hash = None
        if check:
            self._validate()

    def _validate(self):
        n = len(self)
        if n == 0:
            return
        if not self.leq.diagonal().all():
            i = int(np.flatnonzero(~self.leq.diagonal())[0])
            raise InvalidPosetError(f"relation is not reflexive at {self.labels[i]!r}")
        both = self.leq & self.leq.T
        np.fill_diagonal(both, False)
        if both.any():
            i, j = np.argwhere(both)[0]
            raise InvalidPosetError(
                f"relation is not antisymmetric: {self.labels[i]!r}, {self.labels[j]!r}"
            )
        closed = kernels.transitive_closure(self.leq).astype(bool)
        if not np.array_equal(closed, self.leq):
            i, j = np.argwhere(closed & ~self.leq)[0]
            raise InvalidPosetError(
                f"relation is not transitive: {self.labels[i]!r} <= {self.labels[j]!r} is implied"
            )

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __contains__(self, label):
        return label in self._index

    def __eq__(self, other):
        if not isinstance(other, FinitePoset):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.leq, other.leq)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.labels, self.leq.tobytes()))
        return self._hash

    def __repr__(self):
        return f"FinitePoset({len(self)} elements, {len(transitive_reduction(self))} covers)"

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabelError(label) from None

    def indices(self, labels: Iterable[str]) -> list[int]:
        return [self.index(x) for x in labels]

    def le(self, a: str, b: str) -> bool:
        return bool(self.leq[self.index(a), self.index(b)])

    def lt(self, a: str, b: str) -> bool:
        return a != b and self.le(a, b)

    def comparable(self, a: str, b: str) -> bool:
        return self.le(a, b) or self.le(b, a)

    def cover_matrix(self) -> np.ndarray:
        return kernels.cover_matrix(self.leq).astype(bool)

    def lower_covers(self, label: str) -> list[str]:
        col = self.cover_matrix()[:, self.index(label)]
        return [self.labels[i] for i in np.flatnonzero(col)]

    def upper_covers(self, label: str) -> list[str]:
        row = self.cover_matrix()[self.index(label)]
        return [self.labels[i] for i in np.flatnonzero(row)]

    def minimal(self) -> list[str]:
        strict = self.leq.copy()
        np.fill_diagonal(strict, False)
        return [self.labels[i] for i in np.flatnonzero(~strict.any(axis=0))]

    def maximal(self) -> list[str]:
        strict = self.leq.copy()
        np.fill_diagonal(strict, False)
        return [self.labels[i] for i in np.flatnonzero(~strict.any(axis=1))]

    def induced(self, labels: Iterable[str]) -> "FinitePoset":
        """Sub-poset on ``labels``, kept in this poset's element order."""
        idx = sorted(set(self.indices(labels)))
        return FinitePoset(
            [self.labels[i] for i in idx], self.leq[np.ix_(idx, idx)], check=False
        )


@dataclass(frozen=True)
class OrderIdeal:
    """Downward-closed set of element indices of ``poset``."""

    poset: FinitePoset = field(repr=False)
    members: frozenset

    @property
    def labels(self) -> frozenset:
        return frozenset(self.poset.labels[i] for i in self.members)

    def sorted_labels(self) -> list[str]:
        return [self.poset.labels[i] for i in sorted(self.members)]

    @property
    def canonical(self) -> str:
        return "{" + " ".join(self.sorted_labels()) + "}"

    def __len__(self):
        return len(self.members)

    def __contains__(self, label):
        return label in self.poset and self.poset.index(label) in self.members

    def __le__(self, other):
        return self.members <= other.members

    def __lt__(self, other):
        return self.members < other.members


def from_cover_relation(
    labels: Sequence[str], covers: Iterable[tuple[str, str]]
) -> FinitePoset:
    """Poset whose order is the reflexive-transitive closure of ``covers``."""
    labels = [str(x) for x in labels]
    index = {}
    for i, lab in enumerate(labels):
        if lab in index:
            raise DuplicateLabelError(lab)
        index[lab] = i
    n = len(labels)
    rel = np.eye(n, dtype=np.uint8)
    for lo, hi in covers:
        if lo not in index:
            raise UnknownLabelError(lo)
        if hi not in index:
            raise UnknownLabelError(hi)
        if lo == hi:
            raise CycleError((lo, hi))
        rel[index[lo], index[hi]] = 1
    closed = kernels.transitive_closure(rel).astype(bool)
    both = closed & closed.T
    np.fill_diagonal(both, False)
    if both.any():
        i, j = np.argwhere(both)[0]
        raise CycleError((labels[i], labels[j]))
    return FinitePoset(labels, closed, check=False)


def transitive_reduction(P: FinitePoset) -> list[tuple[str, str]]:
    """Cover pairs ``(lower, upper)`` of ``P``, in row-major index order."""
    cov = P.cover_matrix()
    return [(P.labels[i], P.labels[j]) for i, j in np.argwhere(cov)]


def _check_labels(P, S):
    for x in S:
        if x not in P:
            raise UnknownLabelError(x)


def is_order_ideal(P: FinitePoset, S: Iterable[str]) -> bool:
    S = set(S)
    _check_labels(P, S)
    if not S:
        return True
    mask = np.zeros(len(P), dtype=bool)
    mask[P.indices(S)] = True
    # every element below a member must be a member
    below = P.leq[:, mask].any(axis=1)
    return not (below & ~mask).any()


def principal_ideal(P: FinitePoset, x: str) -> OrderIdeal:
    col = P.leq[:, P.index(x)]
    return OrderIdeal(P, frozenset(int(i) for i in np.flatnonzero(col)))


def is_antichain(P: FinitePoset, S: Iterable[str]) -> bool:
    S = list(dict.fromkeys(S))
    _check_labels(P, S)
    idx = P.indices(S)
    sub = P.leq[np.ix_(idx, idx)].copy()
    np.fill_diagonal(sub, False)
    return not sub.any()


def strict_down_masks(P: FinitePoset) -> list[int]:
    """Bitmask of the elements strictly below each element."""
    masks = []
    for j in range(len(P)):
        m = 0
        for i in np.flatnonzero(P.leq[:, j]):
            if i != j:
                m |= 1 << int(i)
        masks.append(m)
    return masks


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def enumerate_order_ideals(P: FinitePoset, budget: int | None = None) -> list[OrderIdeal]:
    """All order ideals of ``P``.

    Ideals come out by cardinality, then lexicographically by their sorted
    member indices. Raises :class:`BudgetExceeded` past ``budget`` ideals.
    """
    budget = default_budget() if budget is None else budget
    n = len(P)
    below = strict_down_masks(P)
    level = [0]
    out = [OrderIdeal(P, frozenset())]
    if len(out) > budget:
        raise BudgetExceeded(budget)
    for _ in range(n):
        grown = set()
        for ideal in level:
            for e in range(n):
                bit = 1 << e
                if not ideal & bit and below[e] & ~ideal == 0:
                    grown.add(ideal | bit)
        if not grown:
            break
        keyed = sorted((_bits(m), m) for m in grown)
        if len(out) + len(keyed) > budget:
            raise BudgetExceeded(budget)
        out.extend(OrderIdeal(P, frozenset(bits)) for bits, _ in keyed)
        level = [m for _, m in keyed]
    return out
