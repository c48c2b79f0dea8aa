#!/usr/bin/env python3
"""Timing checks for the H-list and the dynamic-programming checker.

Run with: uv run python scripts/benchmark_dp.py

Prints H-list build times over formula sizes 10..10000 with a least-squares linear fit,
then check_dp times on a 200-world, 50-variable model with a 500-node formula and on
the same setup with 400 worlds.
"""

import time

import numpy as np

from src.checker import check_dp, hlist
from src.harness.generators import sized_formula, sized_model
from src.logic import EMPTY, subformula_occurrences
from src.models import EvalPoint

REPEATS = 5


def best_of(fn, repeats: int = REPEATS) -> float:
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def hlist_scaling() -> bool:
    sizes = [10, 100, 1000, 5000, 10000]
    variables = sized_model(1, 10, seed=0).variables
    measured = []
    for n in sizes:
        f = sized_formula(n, variables, seed=n)
        assert subformula_occurrences(f) == n
        measured.append(best_of(lambda f=f: hlist(EMPTY, f)))

    slope, intercept = np.polyfit(sizes, measured, 1)
    print("H-list build times:")
    worst = 0.0
    for n, t in zip(sizes, measured, strict=True):
        predicted = slope * n + intercept
        ratio = t / predicted if predicted > 0 else 1.0
        worst = max(worst, ratio)
        print(f"  {n:>6} nodes: {t * 1000:8.3f} ms (fit {predicted * 1000:8.3f} ms)")
    ok = worst <= 2.0
    print(f"  worst measured/fit ratio {worst:.2f} {'✓' if ok else '✗'}\n")
    return ok


def dp_scaling() -> bool:
    timings = {}
    for n_worlds in (200, 400):
        m = sized_model(n_worlds, 50, seed=n_worlds)
        f = sized_formula(500, m.variables, seed=7)
        pt = EvalPoint(m.worlds[0])
        timings[n_worlds] = best_of(lambda m=m, f=f, pt=pt: check_dp(m, pt, f))
        print(f"check_dp, {n_worlds} worlds, 50 variables, 500 nodes: {timings[n_worlds] * 1000:.1f} ms")

    fast_enough = timings[200] < 1.0
    growth = timings[400] / timings[200]
    print(f"  under one second at 200 worlds {'✓' if fast_enough else '✗'}")
    print(f"  doubling worlds multiplied time by {growth:.2f} {'✓' if growth <= 4.0 else '✗'}")
    return fast_enough and growth <= 4.0


if __name__ == "__main__":
    results = [hlist_scaling(), dp_scaling()]
    print("\nAll checks passed." if all(results) else "\nSome checks failed.")
