#!/usr/bin/env python3
"""Benchmark the bracket state-sum kernels (compiled extension vs pure Python).

Builds the alternating two-bridge diagrams C(1,...,1) with growing crossing
number and times `state_counts` on each available kernel.  Usage:

    python benchmarks/bench_bracket.py [--min 8] [--max 16] [--step 2]

The compiled kernel is skipped (with a note) when the extension was not
built; results of the two kernels are asserted equal before timing is
reported.
"""

from __future__ import annotations

import argparse
import time

from thomplink import ConwayCode, two_bridge_diagram
from thomplink import _bracket_py
from thomplink.bracket import _flatten

try:
    from thomplink import _bracket_core
except ImportError:
    _bracket_core = None


def time_kernel(kernel, flat, n_arcs, repeats: int = 1) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        kernel.state_counts(flat, n_arcs)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--min", type=int, default=8)
    ap.add_argument("--max", type=int, default=16)
    ap.add_argument("--step", type=int, default=2)
    args = ap.parse_args()

    print(f"{'crossings':>9}  {'python (s)':>12}  {'compiled (s)':>12}  {'speedup':>8}")
    for c in range(args.min, args.max + 1, args.step):
        d = two_bridge_diagram(ConwayCode([1] * c), max_crossings=max(24, c))
        flat, n_arcs = _flatten(d)
        t_py = time_kernel(_bracket_py, flat, n_arcs)
        if _bracket_core is None:
            print(f"{c:>9}  {t_py:>12.4f}  {'(not built)':>12}  {'-':>8}")
            continue
        assert _bracket_core.state_counts(flat, n_arcs) == _bracket_py.state_counts(flat, n_arcs)
        t_c = time_kernel(_bracket_core, flat, n_arcs)
        print(f"{c:>9}  {t_py:>12.4f}  {t_c:>12.4f}  {t_py / t_c:>8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
