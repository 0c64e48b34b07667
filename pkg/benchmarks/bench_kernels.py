#!/usr/bin/env python3
"""Benchmark the search kernels: numba-jitted against the pure-python path.

The parent process runs each workload twice in fresh subprocesses, once with
the default (jitted) kernels and once with TRD_PURE_PYTHON=1, and prints a
comparison table. JIT compilation happens on a warmup call, so the timed
section measures steady-state search speed only.

Usage:
    python benchmarks/bench_kernels.py            # quick set
    python benchmarks/bench_kernels.py --full     # adds the larger searches
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time


def _workloads(full: bool):
    from trdprod.families import complete, cycle, path, prism, wheel
    from trdprod.graph import direct_product

    loads = [
        ("scan 3^10 (K2 x C5)", "brute", direct_product(complete(2), cycle(5)).base),
        ("search 16v (C4 x C4)", "bnb", direct_product(cycle(4), cycle(4)).base),
    ]
    if full:
        loads += [
            ("scan 3^12 (C4 x P3)", "brute", direct_product(cycle(4), path(3)).base),
            ("search 18v (K3 x W6)", "bnb", direct_product(complete(3), wheel(6)).base),
            ("search 24v (C4 x prism C3)", "bnb",
             direct_product(cycle(4), prism(cycle(3))).base),
        ]
    return loads


def _run_child(full: bool) -> None:
    from trdprod import _kernels
    from trdprod.families import path
    from trdprod.solve import gamma_tr_bruteforce, gamma_tr_exact

    gamma_tr_bruteforce(path(4))  # warmup triggers compilation on the jitted path
    gamma_tr_exact(path(4), budget=60)
    results = []
    for label, kind, g in _workloads(full):
        start = time.perf_counter()
        if kind == "brute":
            value = gamma_tr_bruteforce(g).value
        else:
            value = gamma_tr_exact(g, budget=600).value
        elapsed = time.perf_counter() - start
        results.append({"label": label, "value": value, "seconds": elapsed})
    print(json.dumps({"jitted": _kernels.USE_NUMBA, "results": results}))


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--full", action="store_true", help="include the larger searches")
    parser.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = parser.parse_args()
    if args.child:
        _run_child(args.full)
        return 0

    runs = {}
    for mode, env_extra in (("numba", {}), ("pure", {"TRD_PURE_PYTHON": "1"})):
        env = dict(os.environ, **env_extra)
        cmd = [sys.executable, os.path.abspath(__file__), "--child"]
        if args.full:
            cmd.append("--full")
        out = subprocess.run(cmd, env=env, capture_output=True, text=True, check=True)
        runs[mode] = json.loads(out.stdout.strip().splitlines()[-1])
        print(f"{mode}: jitted={runs[mode]['jitted']}")

    print(f"\n{'workload':<30} {'numba s':>10} {'pure s':>10} {'speedup':>9}")
    for jr, pr in zip(runs["numba"]["results"], runs["pure"]["results"]):
        assert jr["value"] == pr["value"], "paths disagree on the optimum"
        speed = pr["seconds"] / jr["seconds"] if jr["seconds"] > 0 else float("inf")
        print(f"{jr['label']:<30} {jr['seconds']:>10.3f} {pr['seconds']:>10.3f} {speed:>8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
