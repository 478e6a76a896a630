"""Time the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import timeit

import numpy as np

from birkhoff_lattice import families
from birkhoff_lattice.kernels import _pykernels
from birkhoff_lattice.representation import ideal_lattice

try:
    from birkhoff_lattice.kernels import _ckernels
except ImportError:
    _ckernels = None


def workloads():
    B8 = families.boolean(8).leq.astype(np.uint8)
    G = ideal_lattice(families.grid(3, 4)).leq.astype(np.uint8)
    rng = np.random.default_rng(0)
    rel = np.triu(rng.random((300, 300)) < 0.02, 1) | np.eye(300, dtype=bool)
    rel = rel.astype(np.uint8)
    closed = _pykernels.transitive_closure(rel)
    return [
        ("transitive_closure  random n=300", "transitive_closure", (rel,)),
        ("cover_matrix        random n=300", "cover_matrix", (closed,)),
        ("lattice_tables      B8 n=256", "lattice_tables", (B8,)),
        (f"lattice_tables      J(3x4 grid) n={len(G)}", "lattice_tables", (G,)),
        ("distributive_witness B8", "distributive_witness", _pykernels.lattice_tables(B8)[:2]),
        ("distributive_witness J(3x4 grid)", "distributive_witness", _pykernels.lattice_tables(G)[:2]),
    ]


def best(fn, args, repeat):
    return min(timeit.repeat(lambda: fn(*args), number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    opts = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels are not built; only the fallback is timed")
    print(f"{'workload':<40} {'numpy (s)':>10} {'cython (s)':>11} {'speedup':>8}")
    for title, name, args in workloads():
        py = best(getattr(_pykernels, name), args, opts.repeat)
        if _ckernels is None:
            print(f"{title:<40} {py:>10.4f} {'-':>11} {'-':>8}")
            continue
        cy = best(getattr(_ckernels, name), args, opts.repeat)
        print(f"{title:<40} {py:>10.4f} {cy:>11.4f} {py / cy:>7.1f}x")


if __name__ == "__main__":
    main()
