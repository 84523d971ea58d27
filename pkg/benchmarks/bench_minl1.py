#!/usr/bin/env python3
"""Benchmark the minimal-L1 solver kernels: pure Python vs compiled.

Workloads:
  window   every q value behind a width-4 Fibonacci window scan up to a
           given index (the hot path of verify-qi);
  random   seeded random instances, 1..4 generators up to 200, targets
           up to 4000;
  deep     two-phase branch and bound on wide windows with a large gap.

Usage: python benchmarks/bench_minl1.py [--repeat 5] [--max-index 14]
"""

from __future__ import annotations

import argparse
import random
import time
from math import gcd

import coprimetric._minl1_py as kernel_py
from coprimetric.sequences import kfib

try:
    import coprimetric._minl1_cy as kernel_cy
except ImportError:
    kernel_cy = None


def window_workload(max_index: int):
    cases = []
    for n in range(1, max_index + 1):
        gens = tuple(sorted({kfib(1, n + i) for i in range(4)}))
        for m in range(n, max_index + 1):
            for i in range(4):
                cases.append((gens, kfib(1, m + i)))
    return cases


def random_workload(count: int, seed: int = 2024):
    rng = random.Random(seed)
    cases = []
    for _ in range(count):
        ell = rng.choice((1, 2, 3, 4))
        gens = tuple(sorted(rng.sample(range(1, 201), ell)))
        g = gcd(*gens)
        m = g * rng.randint(1, 4000 // g)
        cases.append((gens, m))
    return cases


def deep_workload(max_index: int):
    cases = []
    for n in range(2, 6):
        gens = tuple(sorted({kfib(1, n + i) for i in range(5)}))
        for m in range(max_index, max_index + 3):
            cases.append((gens, kfib(1, m)))
    return cases


def run(kernel, cases, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for gens, m in cases:
            kernel.solve_general(gens, m)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--max-index", type=int, default=14)
    args = ap.parse_args()

    workloads = {
        "window": window_workload(args.max_index),
        "random": random_workload(400),
        "deep": deep_workload(args.max_index + 2),
    }

    kernels = [("python", kernel_py)]
    if kernel_cy is not None:
        kernels.append(("cython", kernel_cy))
    else:
        print("compiled kernel not available; timing the fallback only")

    print(f"{'workload':<10} {'cases':>6} " + "".join(f"{name:>12}" for name, _ in kernels)
          + ("     speedup" if kernel_cy else ""))
    for wname, cases in workloads.items():
        times = [run(kernel, cases, args.repeat) for _, kernel in kernels]
        row = f"{wname:<10} {len(cases):>6} " + "".join(f"{t * 1e3:>10.1f}ms" for t in times)
        if len(times) == 2:
            row += f"   {times[0] / times[1]:>6.2f}x"
        print(row)

    # sanity: identical answers on every benchmarked case
    if kernel_cy is not None:
        for cases in workloads.values():
            for gens, m in cases:
                assert kernel_py.solve_general(gens, m) == kernel_cy.solve_general(gens, m)
        print("kernels agree on every benchmarked case")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
