#!/usr/bin/env python3
"""Benchmark the compiled counting kernel against the pure-Python one.

Runs the same exact-count workloads through both kernels and prints a
table with timings and speedups.  Usage::

    python3 benchmarks/bench_counting.py [--repeat N]

The compiled kernel must be built (the default install builds it); if it
is missing, only the pure timings are shown.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from threecolor import _purecount, dodecahedron, pentagon_garden, pentagon_tower
from threecolor.coloring import _plan_for

try:
    from threecolor import _fastcount
except ImportError:
    _fastcount = None


def workloads():
    yield "tower height 5 (n=25)", pentagon_tower(5)
    yield "tower height 6 (n=30)", pentagon_tower(6)
    yield "tower height 7 (n=35)", pentagon_tower(7)
    yield "dodecahedron (n=20)", dodecahedron()
    yield "garden k=3 (n=24)", pentagon_garden(3)


def time_kernel(kernel, g, repeat):
    plan = _plan_for(g)
    n = len(plan.order)
    fixed = np.zeros(n, dtype=np.int8)
    preset = np.zeros(n, dtype=np.int8)
    best = float("inf")
    count = nodes = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        count, nodes = kernel.count_colorings(
            plan.indptr, plan.flat, fixed, preset, 0, 10 ** 12, 0)
        best = min(best, time.perf_counter() - t0)
    return count, nodes, best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    print(f"{'workload':<24} {'colorings':>12} {'nodes':>12} "
          f"{'pure [s]':>10} {'compiled [s]':>13} {'speedup':>8}")
    for name, g in workloads():
        count, nodes, pure_t = time_kernel(_purecount, g, args.repeat)
        if _fastcount is not None:
            c2, n2, fast_t = time_kernel(_fastcount, g, args.repeat)
            assert (count, nodes) == (c2, n2), "kernel mismatch"
            print(f"{name:<24} {count:>12} {nodes:>12} {pure_t:>10.3f} "
                  f"{fast_t:>13.4f} {pure_t / fast_t:>7.1f}x")
        else:
            print(f"{name:<24} {count:>12} {nodes:>12} {pure_t:>10.3f} "
                  f"{'missing':>13} {'-':>8}")


if __name__ == "__main__":
    main()
