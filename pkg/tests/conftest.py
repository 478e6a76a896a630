import random

import pytest

from birkhoff_lattice import families, try_lattice
from birkhoff_lattice.representation import ideal_lattice


def distributive_corpus():
    """Named distributive lattices used across the suite."""
    out = {}
    for n in range(1, 11):
        out[f"chain{n}"] = try_lattice(families.chain(n))
    for n in range(0, 5):
        out[f"B{n}"] = try_lattice(families.boolean(n))
    for d in (12, 36, 60, 120):
        out[f"div{d}"] = try_lattice(families.divisor(d))
    for a in range(1, 5):
        for b in range(1, 5):
            out[f"grid{a}x{b}"] = try_lattice(families.grid(a, b))
    return out


def random_posets(count, max_size, seed=1234):
    rng = random.Random(seed)
    return [
        families.random_poset(rng.randint(0, max_size), rng.choice((0.2, 0.35, 0.5)), rng)
        for _ in range(count)
    ]


@pytest.fixture(scope="session")
def corpus():
    return distributive_corpus()


@pytest.fixture(scope="session")
def random_ideal_lattices():
    return [ideal_lattice(P) for P in random_posets(100, 7)]


@pytest.fixture(scope="session")
def m3():
    return try_lattice(families.m3())


@pytest.fixture(scope="session")
def n5():
    return try_lattice(families.n5())
