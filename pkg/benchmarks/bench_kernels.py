#!/usr/bin/env python3
"""Benchmark the compiled enumeration/sampling kernel against the pure-Python
fallback.

Usage: python benchmarks/bench_kernels.py [--quick]

--quick shrinks the workloads so the pure backend finishes in seconds; the
default sizes match the real verification workloads.
"""

from __future__ import annotations

import argparse
import time

from ncardpoker.kernels import available_backends

FULL_DECK = (1 << 52) - 1


def time_call(fn, *args):
    start = time.perf_counter()
    result = fn(*args)
    return result, time.perf_counter() - start


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    args = parser.parse_args()

    backends = available_backends()
    if "cython" not in backends:
        print("note: compiled kernel not built; benchmarking the pure backend only")

    if args.quick:
        enum_sizes = (4, 5)
        mc_samples = 20_000
    else:
        enum_sizes = (5, 6)
        mc_samples = 1_000_000

    jobs = [
        (f"exhaustive n={n} (all categories)", "count_categories", (n, FULL_DECK, 0, 52))
        for n in enum_sizes
    ]
    jobs.append(
        (f"monte carlo n=13 straight, {mc_samples:,} samples", "sample_hits", (13, 0, mc_samples, 42))
    )

    width = max(len(label) for label, _, _ in jobs)
    print(f"{'workload':<{width}}  {'backend':<8} {'seconds':>10}  result")
    timings: dict[str, dict[str, float]] = {}
    for label, fn_name, fn_args in jobs:
        for name, module in sorted(backends.items()):
            result, elapsed = time_call(getattr(module, fn_name), *fn_args)
            timings.setdefault(label, {})[name] = elapsed
            print(f"{label:<{width}}  {name:<8} {elapsed:>10.3f}  {result}")
    if "cython" in backends:
        print()
        for label, per_backend in timings.items():
            speedup = per_backend["python"] / per_backend["cython"]
            print(f"{label:<{width}}  speedup x{speedup:,.0f}")


if __name__ == "__main__":
    main()
