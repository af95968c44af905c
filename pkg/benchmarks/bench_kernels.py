"""Compare the compiled and the numpy kernels.

    python benchmarks/bench_kernels.py [--grid 48] [--repeat 3]

Reports the best wall time per kernel and backend, the speedup, and whether
the two backends returned identical results.
"""

import argparse
import time

import numpy as np

from swdom import _pykernels, falsifier, kernels
from swdom.falsifier import EDGE, RAW_HI, SearchConfig


def best_of(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def same(a, b):
    if isinstance(a, tuple) and isinstance(b, tuple):
        return len(a) == len(b) and all(same(x, y) for x, y in zip(a, b))
    if isinstance(a, np.ndarray):
        return np.array_equal(a, b)
    return a == b


def falsify_with(mod, lam, mu, cfg):
    saved = falsifier.backend
    falsifier.backend = mod
    try:
        return falsifier.falsify(lam, mu, cfg)
    finally:
        falsifier.backend = saved


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--grid", type=int, default=48)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    try:
        cy = kernels.load("cython")
    except ImportError:
        raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation`")

    n, lam, mu = args.grid, 20.0, 100.0
    cfg = SearchConfig(grid_n=n)
    start = [0.9, 0.95, 0.97, 0.93]
    jobs = {
        f"gap grid n={n}": lambda m: m.gap_slice_minima(lam, mu, n),
        f"reduced grid n={n}": lambda m: m.reduced_slice_minima(lam, mu, n),
        "refine raw": lambda m: m.refine_gap(lam, mu, start, 200, EDGE, RAW_HI),
        "refine reduced": lambda m: m.refine_reduced(lam, mu, start, 200, EDGE, 1 - EDGE),
        f"falsify n={n}": lambda m: falsify_with(m, lam, mu, cfg),
    }
    print(f"{'kernel':<22}{'python [ms]':>13}{'cython [ms]':>13}{'speedup':>10}  identical")
    for name, job in jobs.items():
        tp, rp = best_of(lambda: job(_pykernels), args.repeat)
        tc, rc = best_of(lambda: job(cy), args.repeat)
        print(f"{name:<22}{tp * 1e3:>13.3f}{tc * 1e3:>13.3f}{tp / tc:>10.1f}  {same(rp, rc)}")


if __name__ == "__main__":
    main()
