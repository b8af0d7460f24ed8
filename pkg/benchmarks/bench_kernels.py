#!/usr/bin/env python3
"""Time the pure-Python/numpy kernels against their numba twins.

Usage: python benchmarks/bench_kernels.py [--repeat N]

Representative workloads: counting the 12! extensions of a 12-element
antichain, materializing the 8! extensions of an 8-element antichain,
isomorphism search between relabeled 9-element posets, and the induced-N
scan over dense 12-element orders.  Without numba only the pure path runs.
"""

import argparse
import random
import time

import numpy as np

from orderentropy import _kernels
from orderentropy.poset import Poset


def random_poset(n, density, seed):
    rng = random.Random(seed)
    pairs = [
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if rng.random() < density
    ]
    return Poset.from_pairs(n, pairs)


def relabeled(p, seed):
    rng = random.Random(seed)
    f = list(range(1, p.n + 1))
    rng.shuffle(f)
    return Poset.from_pairs(
        p.n, [(f[i - 1], f[j - 1]) for i, j in p.pairs()]
    )


def timeit(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def workloads():
    delta12 = _kernels.predecessor_masks(Poset.discrete(12).lt_matrix)
    delta8 = _kernels.predecessor_masks(Poset.discrete(8).lt_matrix)
    total8 = int(_kernels.count_extensions_py(delta8))
    iso_pairs = []
    for seed in range(6):
        p = random_poset(9, 0.3, seed)
        iso_pairs.append((p.lt_matrix, relabeled(p, 100 + seed).lt_matrix))
    dense = [random_poset(12, 0.45, 50 + s).lt_matrix for s in range(40)]

    return {
        "count extensions (antichain n=12)": (
            lambda k: k["count"](delta12),
        ),
        "enumerate extensions (antichain n=8)": (
            lambda k: k["enumerate"](delta8, total8, 8),
        ),
        "isomorphism search (6 pairs, n=9)": (
            lambda k: [k["embed"](a, b, True) for a, b in iso_pairs],
        ),
        "induced-N scan (40 dense orders, n=12)": (
            lambda k: [k["nscan"](lt) for lt in dense],
        ),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    py = {
        "count": _kernels.count_extensions_py,
        "enumerate": _kernels.enumerate_extensions_py,
        "embed": _kernels.find_embedding_py,
        "nscan": _kernels.has_n_quadruple_py,
    }
    jit = None
    if _kernels.HAVE_NUMBA:
        jit = {
            "count": _kernels.count_extensions_jit,
            "enumerate": _kernels.enumerate_extensions_jit,
            "embed": _kernels.find_embedding_jit,
            "nscan": _kernels.has_n_quadruple_jit,
        }
    else:
        print("numba not importable: timing the pure path only\n")

    print(f"numpy {np.__version__}, active backend: {_kernels.backend_name()}")
    header = f"{'workload':<42} {'python':>10} {'numba':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, (runner,) in workloads().items():
        if jit is not None:
            runner(jit)  # warm the JIT cache before timing
        t_py = timeit(lambda: runner(py), args.repeat)
        if jit is not None:
            t_jit = timeit(lambda: runner(jit), args.repeat)
            print(f"{name:<42} {t_py*1e3:>8.2f}ms {t_jit*1e3:>8.2f}ms {t_py/t_jit:>7.1f}x")
        else:
            print(f"{name:<42} {t_py*1e3:>8.2f}ms {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
