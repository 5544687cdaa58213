#!/usr/bin/env python3
"""Benchmark the JIT kernels against the fallback path.

Runs the same workloads through both backends, checks the families are
identical, and prints the timings side by side. Usage:

    python3 benchmarks/compare_backends.py

Setting MINDEF_NUMBA=0 would disable the JIT backend entirely; this script
flips the flag in-process instead so both paths run in one go.
"""

import time

import mindef as md
from mindef import _kernels


def timed(fn, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        started = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - started)
    return result, best


def workloads():
    # exhaustive oracle scan over an 18-argument space
    cfg = md.GeneratorConfig(argument_count=18, attack_probability=0.15, seed=3)
    af_scan, _ = md.random_instance(cfg)
    yield "oracle scan, n=18", lambda: md.oracle_admissible(af_scan)

    # sparse 50-argument instance, maximality search
    cfg = md.GeneratorConfig(argument_count=50, attack_probability=0.04, seed=7)
    af_sparse, _ = md.random_instance(cfg)
    yield "preferred, n=50 sparse", lambda: md.preferred_extensions(af_sparse)

    # 12 mutual attack pairs: 4096 incomparable preferred extensions
    names = [f"x{i}" for i in range(24)]
    pairs = []
    for i in range(0, 24, 2):
        pairs += [(names[i], names[i + 1]), (names[i + 1], names[i])]
    af_cycles = md.build_framework(names, pairs)
    yield "preferred, 12 two-cycles", lambda: md.preferred_extensions(af_cycles)

    # min-def end to end on a mid-size instance
    cfg = md.GeneratorConfig(argument_count=16, attack_probability=0.2,
                             focus_fraction=0.75, restricted_fraction=0.5,
                             seed=11)
    af_mid, p_mid = md.random_instance(cfg)
    yield "min-def, n=16", lambda: md.min_def_extensions(af_mid, p_mid)


def main():
    if not _kernels.HAVE_NUMBA:
        print("numba is not installed; only the fallback path can run")
        return
    _kernels.warmup()
    print(f"{'workload':<28} {'numba':>10} {'fallback':>10} {'speedup':>8}")
    for name, fn in workloads():
        _kernels.JIT_ENABLED = True
        jit_result, jit_time = timed(fn)
        _kernels.JIT_ENABLED = False
        fallback_result, fallback_time = timed(fn)
        _kernels.JIT_ENABLED = True
        assert jit_result == fallback_result, f"backend mismatch on {name}"
        print(f"{name:<28} {jit_time*1e3:>8.1f}ms {fallback_time*1e3:>8.1f}ms "
              f"{fallback_time/jit_time:>7.1f}x")
    print("all workloads: identical families on both backends")


if __name__ == "__main__":
    main()
