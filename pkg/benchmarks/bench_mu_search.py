"""Benchmark the mu-search kernel backends against each other.

Runs the same least-witness searches through the numba, numpy and python
paths and prints a timing table. The python reference is capped to the
smaller searches so the script stays interactive.

Usage: python3 benchmarks/bench_mu_search.py
"""

import time

from godellab import kernels

CASES = [
    ("len1 small", [1, 3], 1_000_000),
    ("len2 term S0", [2, 3, 1], 1_000_000),
    ("len3 flat [4,4,4]", [3, 4, 4, 4], 10_000_000),
    ("len3 worst [0,0,2]", [3, 0, 0, 2], 100_000_000),
]

PYTHON_MAX_CUTOFF = 2_000_000


def run_backend(name: str) -> None:
    kernels.set_backend(name)
    if name == "numba":
        kernels.mu_search([1, 1], 10)  # trigger the JIT compile up front
    print(f"\n{name}")
    for label, targets, cutoff in CASES:
        if name == "python" and cutoff > PYTHON_MAX_CUTOFF:
            print(f"  {label:<22} skipped (cutoff {cutoff:,} too slow in python)")
            continue
        start = time.perf_counter()
        found = kernels.mu_search(targets, cutoff)
        elapsed = time.perf_counter() - start
        rate = (found if found >= 0 else cutoff) / max(elapsed, 1e-9)
        print(f"  {label:<22} -> {found:>12,}  {elapsed:8.3f}s  "
              f"({rate/1e6:7.1f}M candidates/s)")


def main() -> None:
    for name in ("numba", "numpy", "python"):
        try:
            run_backend(name)
        except ImportError as exc:
            print(f"\n{name}: unavailable ({exc})")


if __name__ == "__main__":
    main()
