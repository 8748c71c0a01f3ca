"""Compare the compiled insertion kernel against the pure-Python one.

Run:  python benchmarks/bench_insertion.py [length]
"""

import random
import sys
import time

from rsinf import _insertion_py
from rsinf._kernel import BACKEND, _impl


def timed(fn, offsets, positions, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(offsets, positions)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 50_000
    rng = random.Random(7)
    offsets = [rng.randrange(-n, n) for _ in range(n)]
    positions = list(range(1, n + 1))

    pure = timed(_insertion_py.insert_sequence, offsets, positions)
    print(f"pure python: {pure:.4f}s for n={n}")
    if _impl is None:
        print(f"compiled kernel unavailable (backend={BACKEND})")
        return
    fast = timed(_impl.insert_sequence, offsets, positions)
    assert _impl.insert_sequence(offsets, positions) == \
        _insertion_py.insert_sequence(offsets, positions)
    print(f"compiled:    {fast:.4f}s for n={n}  ({pure / fast:.1f}x)")


if __name__ == "__main__":
    main()
