#!/usr/bin/env python3
"""Benchmark the compiled numerator kernel against the pure-Python fallback.

Usage: python benchmarks/bench_matmul.py [--sizes 8,16,32,64] [--reps 3]

Times the flat negacyclic matrix product on random inputs at two entry
magnitudes: small (stays on the compiled 64-bit fast path) and large
(forces the arbitrary-precision object path on both backends).  Also times
one end-to-end symplectic membership check per size.
"""

import argparse
import random
import time

from sympdec import _kernels_py
from sympdec.groups import is_symplectic, random_sp
from sympdec.matrix import ExactMatrix

try:
    from sympdec import _speedups
except ImportError:
    _speedups = None


def _flat(n, magnitude, rng):
    return [rng.randint(-magnitude, magnitude) for _ in range(n * n * 4)]


def _time(fn, reps):
    best = float("inf")
    for _ in range(reps):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--sizes", default="8,16,32,64")
    parser.add_argument("--reps", type=int, default=3)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    if _speedups is None:
        print("compiled kernel not available; showing pure-Python timings only")

    header = f"{'size':>5} {'entries':>9} {'python':>12} {'compiled':>12} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    rng = random.Random(0)
    for n in sizes:
        for label, mag in (("small", 40), ("big", 1 << 72)):
            a = _flat(n, mag, rng)
            b = _flat(n, mag, rng)
            t_py = _time(lambda: _kernels_py.matmul_num(a, b, n, n, n), args.reps)
            if _speedups is not None:
                t_c = _time(lambda: _speedups.matmul_num(a, b, n, n, n), args.reps)
                assert _speedups.matmul_num(a, b, n, n, n) == _kernels_py.matmul_num(a, b, n, n, n)
                print(f"{n:>5} {label:>9} {t_py * 1e3:>10.2f}ms {t_c * 1e3:>10.2f}ms "
                      f"{t_py / t_c:>7.1f}x")
            else:
                print(f"{n:>5} {label:>9} {t_py * 1e3:>10.2f}ms {'-':>12} {'-':>8}")

    print()
    print("end-to-end: exact symplectic membership (uses the active backend)")
    for m in (4, 8, 16):
        a = random_sp(m, seed=1)
        t = _time(lambda: is_symplectic(a), args.reps)
        print(f"  Sp({m}) matrix {2 * m}x{2 * m}: {t * 1e3:.2f}ms")


if __name__ == "__main__":
    main()
