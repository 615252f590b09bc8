#!/usr/bin/env python3
"""Timing comparison of the compiled kernels against the pure-Python
fallback on identical inputs.

Run from the repository root after an editable install:

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --repeat 7 --survey-n 9

Both backends are imported directly (the DALPHA_PURE_PYTHON switch only
affects library users), so the script reports honest side-by-side numbers
or notes that the extension is unavailable.
"""

import argparse
import statistics
import time

from dalpha import _pykernels

try:
    from dalpha import _ckernels
except ImportError:
    _ckernels = None

from dalpha.census import all_trees, all_unicyclic
from dalpha.graphs import Graph


def _timed(fn, repeat):
    best = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best.append(time.perf_counter() - t0)
    return statistics.median(best)


def _bfs_workload(impl, graphs):
    def run():
        for g in graphs:
            impl.all_pairs_bfs(g.n, g._nbrs)
    return run

def _canon_workload(impl, graphs):
    def run():
        for g in graphs:
            impl.canonical_mask(g.n, g.bit_rows, -1)
    return run

def _tree_code_workload(impl, trees):
    def run():
        for g in trees:
            impl.tree_code(g.n, g.edges)
    return run


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5, help="timing repetitions (median wins)")
    ap.add_argument("--survey-n", type=int, default=8,
                    help="order for the labeled tree survey (default 8)")
    ap.add_argument("--census-n", type=int, default=6,
                    help="order for the connected mask census (default 6)")
    args = ap.parse_args()

    trees = list(all_trees(10)) + list(all_trees(11))
    mixed = list(all_unicyclic(9))
    cases = [
        (f"all_pairs_bfs on {len(mixed)} unicyclic graphs (n=9)",
         lambda impl: _bfs_workload(impl, mixed)),
        (f"canonical_mask on {len(mixed)} unicyclic graphs (n=9)",
         lambda impl: _canon_workload(impl, mixed)),
        (f"tree_code on {len(trees)} trees (n=10,11)",
         lambda impl: _tree_code_workload(impl, trees)),
        (f"labeled_tree_survey(n={args.survey_n})",
         lambda impl: lambda: impl.labeled_tree_survey(args.survey_n)),
        (f"connected_mask_census(n={args.census_n})",
         lambda impl: lambda: impl.connected_mask_census(args.census_n)),
    ]

    backends = [("python", _pykernels)]
    if _ckernels is not None:
        backends.append(("cython", _ckernels))
    else:
        print("compiled extension not importable; timing the fallback only\n")

    width = max(len(name) for name, _ in cases)
    header = f"{'workload':<{width}}" + "".join(f"  {b:>12}" for b, _ in backends)
    if len(backends) == 2:
        header += f"  {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for name, make in cases:
        times = []
        for _, impl in backends:
            # n=12 packing limit only matters for canonical_mask; all
            # workloads here stay within both backends' ranges
            times.append(_timed(make(impl), args.repeat))
        row = f"{name:<{width}}" + "".join(f"  {t * 1e3:>10.2f}ms" for t in times)
        if len(times) == 2:
            row += f"  {times[0] / times[1]:>8.1f}x"
        print(row)


if __name__ == "__main__":
    main()
