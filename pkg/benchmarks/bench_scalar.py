#!/usr/bin/env python3
"""Benchmark the compiled scalar kernel against the pure-Python twin.

Three workloads: raw scalar arithmetic, the full axiom battery on the
8-dimensional algebra, and one pass of the left-action enumeration (the
solver-heavy path).  Forcing the backend is only possible per process, so
the suite re-executes itself with HOPFFACTOR_PURE=1 for the second column.

Usage: python benchmarks/bench_scalar.py [--repeat N]
"""

import argparse
import json
import os
import subprocess
import sys
import time


def bench_scalar_ops(n=200_000):
    from hopffactor.scalar import Scalar

    a = Scalar(3, 7, 1, 2)
    b = Scalar(-5, 11, 2, 3)
    acc = Scalar(0)
    t0 = time.perf_counter()
    for _ in range(n):
        acc = acc + a * b - a
    t1 = time.perf_counter()
    assert not acc.is_zero()
    return t1 - t0


def bench_axiom_battery():
    import hopffactor.hopf
    import hopffactor.presentations as pres

    pres.build_H4.cache_clear()
    pres.build_H8.cache_clear()
    t0 = time.perf_counter()
    H8 = pres.build_H8()
    report = hopffactor.hopf.verify_axioms(H8)
    t1 = time.perf_counter()
    assert report.all_passed
    return t1 - t0


def bench_left_enumeration():
    from hopffactor.actions import enumerate_left_actions

    t0 = time.perf_counter()
    sol = enumerate_left_actions()
    t1 = time.perf_counter()
    assert len(sol.branches) == 16
    return t1 - t0


WORKLOADS = {
    "scalar-ops(200k)": bench_scalar_ops,
    "axiom-battery(H8)": bench_axiom_battery,
    "left-enumeration": bench_left_enumeration,
}


def run_all(repeat):
    from hopffactor.scalar import BACKEND

    results = {"backend": BACKEND, "timings": {}}
    for name, fn in WORKLOADS.items():
        best = min(fn() for _ in range(repeat))
        results["timings"][name] = best
    return results


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--emit-json", action="store_true", help=argparse.SUPPRESS)
    args = parser.parse_args()

    if args.emit_json:
        print(json.dumps(run_all(args.repeat)))
        return

    here = run_all(args.repeat)
    env = dict(os.environ, HOPFFACTOR_PURE="1")
    out = subprocess.run(
        [sys.executable, __file__, "--repeat", str(args.repeat), "--emit-json"],
        env=env, capture_output=True, text=True, check=True,
    )
    pure = json.loads(out.stdout)

    print(f"{'workload':24s} {here['backend']:>10s} {'python':>10s} {'speedup':>9s}")
    for name in WORKLOADS:
        a = here["timings"][name]
        b = pure["timings"][name]
        print(f"{name:24s} {a:9.3f}s {b:9.3f}s {b / a:8.2f}x")
    if here["backend"] == "python":
        print("note: compiled backend unavailable; both columns ran pure Python")


if __name__ == "__main__":
    main()
