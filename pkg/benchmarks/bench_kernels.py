#!/usr/bin/env python3
"""Benchmark the compiled counting kernel against the numpy fallback.

Times the raw pair-count kernel on construction-sized workloads and a
full exact certification with each backend swapped into the verifier.
"""

import time

import numpy as np

import mubkit.verifier as verifier
from mubkit import make_field, wootters_fields
from mubkit.kernels import BACKEND, available_backends


def time_call(fn, *args, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_raw(backends):
    print("raw kernel: counts for all row pairs of two d x d exponent matrices")
    print(f"{'case':>16} " + " ".join(f"{name:>12}" for name in backends))
    rng = np.random.default_rng(0)
    for d, m in [(27, 3), (49, 7), (81, 3)]:
        e = rng.integers(0, m, size=(d, d)).astype(np.int32)
        f = rng.integers(0, m, size=(d, d)).astype(np.int32)
        row = [f"d={d} m={m:>2}".rjust(16)]
        for name, fn in backends.items():
            row.append(f"{time_call(fn, e, f, m) * 1e3:10.3f}ms")
        print(" ".join(row))


def bench_verify(backends):
    print("\nend-to-end: verify_exact on the quadratic family")
    print(f"{'case':>16} " + " ".join(f"{name:>12}" for name in backends))
    original = verifier.pair_difference_counts
    try:
        for p, n in [(3, 3), (7, 2), (3, 4)]:
            fam = wootters_fields(make_field(p, n))
            row = [f"q={p ** n}".rjust(16)]
            for name, fn in backends.items():
                verifier.pair_difference_counts = fn
                t0 = time.perf_counter()
                rep = verifier.verify_exact(fam)
                row.append(f"{time.perf_counter() - t0:11.2f}s")
                assert rep.certified
            print(" ".join(row))
    finally:
        verifier.pair_difference_counts = original


def main():
    backends = available_backends()
    print(f"default backend: {BACKEND}; available: {', '.join(backends)}")
    if len(backends) < 2:
        print("note: compiled kernel not built, benchmarking the fallback only")
    bench_raw(backends)
    bench_verify(backends)


if __name__ == "__main__":
    main()
