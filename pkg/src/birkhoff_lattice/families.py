"""Named families of finite posets and lattices used by the CLI and tests."""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .errors import BirkhoffError
from .poset import FinitePoset, from_cover_relation

BOOLEAN_MAX = 20

FINITE_FAMILIES = ("chain", "antichain", "boolean", "divisor", "grid", "m3", "n5")
LAZY_FAMILIES = ("quadrant", "shifted-octant")
ARITY = {
    "chain": 1,
    "antichain": 1,
    "boolean": 1,
    "divisor": 1,
    "grid": 2,
    "m3": 0,
    "n5": 0,
    "quadrant": 0,
    "shifted-octant": 0,
    "finite-file": 1,
}


class FamilyError(BirkhoffError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple = ()

    def validate(self) -> "FamilySpec":
        if self.name not in ARITY:
            raise FamilyError(f"unknown family {self.name!r}")
        if len(self.params) != ARITY[self.name]:
            raise FamilyError(f"{self.name} takes {ARITY[self.name]} parameter(s), got {len(self.params)}")
        if self.name == "finite-file":
            return FamilySpec(self.name, (str(self.params[0]),))
        try:
            nums = tuple(int(p) for p in self.params)
        except (TypeError, ValueError):
            raise FamilyError(f"{self.name} parameters must be integers") from None
        low = {"chain": 0, "antichain": 0, "boolean": 0, "divisor": 1, "grid": 1}
        for v in nums:
            if v < low.get(self.name, 0):
                raise FamilyError(f"{self.name} parameter {v} is below {low[self.name]}")
        if self.name == "boolean" and nums[0] > BOOLEAN_MAX:
            raise FamilyError(f"boolean lattices are limited to n <= {BOOLEAN_MAX}")
        return FamilySpec(self.name, nums)


def chain_covers(n):
    labels = [str(i) for i in range(n)]
    return labels, list(zip(labels, labels[1:]))


def antichain_covers(n):
    return [f"a{i}" for i in range(n)], []


def _subset_label(bits):
    return "{" + ",".join(str(i + 1) for i in bits) + "}"


def boolean_covers(n):
    """Subsets of {1..n}, labelled like ``{1,3}``, ordered by inclusion."""
    subsets = [c for r in range(n + 1) for c in combinations(range(n), r)]
    labels = [_subset_label(s) for s in subsets]
    covers = []
    for s in subsets:
        for i in range(n):
            if i not in s:
                covers.append((_subset_label(s), _subset_label(tuple(sorted(s + (i,))))))
    return labels, covers


def divisor_covers(n):
    divs = [d for d in range(1, n + 1) if n % d == 0]
    covers = []
    for a in divs:
        for b in divs:
            # b covers a iff b/a is prime
            if b > a and b % a == 0 and _is_prime(b // a):
                covers.append((str(a), str(b)))
    return [str(d) for d in divs], covers


def _is_prime(k):
    return k >= 2 and all(k % p for p in range(2, int(k**0.5) + 1))


def grid_covers(a, b):
    """Product of an ``a``-chain and a ``b``-chain; labels ``x,y`` from 1."""
    labels = [f"{x},{y}" for x in range(1, a + 1) for y in range(1, b + 1)]
    covers = []
    for x in range(1, a + 1):
        for y in range(1, b + 1):
            if x < a:
                covers.append((f"{x},{y}", f"{x + 1},{y}"))
            if y < b:
                covers.append((f"{x},{y}", f"{x},{y + 1}"))
    return labels, covers


def m3_covers():
    return ["0", "a", "b", "c", "1"], [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")]


def n5_covers():
    return ["0", "a", "b", "c", "1"], [("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")]


def family_covers(spec: FamilySpec):
    spec = spec.validate()
    builders = {
        "chain": chain_covers,
        "antichain": antichain_covers,
        "boolean": boolean_covers,
        "divisor": divisor_covers,
        "grid": grid_covers,
        "m3": m3_covers,
        "n5": n5_covers,
    }
    if spec.name not in builders:
        raise FamilyError(f"{spec.name} is not a finite family")
    return builders[spec.name](*spec.params)


def build(name: str, *params) -> FinitePoset:
    return from_cover_relation(*family_covers(FamilySpec(name, tuple(params))))


def chain(n):
    return build("chain", n)


def antichain(n):
    return build("antichain", n)


def boolean(n):
    return build("boolean", n)


def divisor(n):
    return build("divisor", n)


def grid(a, b):
    return build("grid", a, b)


def m3():
    return build("m3")


def n5():
    return build("n5")


def random_poset(n: int, density: float = 0.3, rng: random.Random | None = None) -> FinitePoset:
    """Random poset on ``p0..p{n-1}``: the closure of a random DAG respecting index order."""
    rng = rng or random.Random(0)
    labels = [f"p{i}" for i in range(n)]
    covers = [
        (labels[i], labels[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < density
    ]
    return from_cover_relation(labels, covers)
