#!/usr/bin/env python3
"""Benchmark the compiled sweep kernels against the pure-Python twins.

Run from the repository root after building the extension:

    python setup.py build_ext --inplace
    PYTHONPATH=src python benchmarks/bench_kernels.py
"""

import time
from itertools import permutations

from schroeder._kernels import pure

try:
    from schroeder._kernels import _csweeps as compiled
except ImportError:
    compiled = None


def timeit(fn, *args, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def batch_rows(impl, perms):
    for p in perms:
        impl.sch_rows(p)


def batch_patterns(impl, perms):
    for p in perms:
        impl.contains_pattern(p, (1, 2, 3))
        impl.contains_pattern(p, (2, 1, 3))


def main():
    perms7 = list(permutations(range(1, 8)))
    cases = [
        ("sweep_row_col(8)", lambda impl: impl.sweep_row_col(8)),
        ("sweep_rs_shapes(7)", lambda impl: impl.sweep_rs_shapes(7)),
        ("sch_rows x 5040 (n=7)", lambda impl: batch_rows(impl, perms7)),
        ("contains_pattern x 10080", lambda impl: batch_patterns(impl, perms7)),
    ]
    print(f"{'case':<28} {'pure':>10} {'compiled':>10} {'speedup':>9}")
    for name, fn in cases:
        t_pure = timeit(fn, pure)
        if compiled is None:
            print(f"{name:<28} {t_pure:>9.3f}s {'n/a':>10} {'n/a':>9}")
            continue
        t_comp = timeit(fn, compiled)
        print(
            f"{name:<28} {t_pure:>9.3f}s {t_comp:>9.3f}s {t_pure / t_comp:>8.1f}x"
        )
    if compiled is None:
        print("\ncompiled kernel not built; run: python setup.py build_ext --inplace")


if __name__ == "__main__":
    main()
