#!/usr/bin/env python3
"""Compare the compiled kernels against the pure-Python fallback lane.

Both lanes are timed with the same wall clock (not their internal cost
counters, which use different units), over identical inputs, so the
printed ratio is a like-for-like throughput comparison.

Usage: python3 benchmarks/compare_lanes.py [--quick]
"""

import argparse
import sys
import time

import numpy as np

sys.path.insert(0, "src")

from netsort import _pybackend, registry  # noqa: E402
from netsort.items import ITEM_DTYPE  # noqa: E402

try:
    from netsort import _native
except ImportError:
    _native = None


def batch(rng, count, size):
    rows = np.empty((count, size), dtype=ITEM_DTYPE)
    rows["key"] = rng.integers(0, 2**64, size=(count, size), dtype=np.uint64)
    rows["ref"] = rng.integers(0, 2**64, size=(count, size), dtype=np.uint64)
    return rows


def time_lane(lane, spec, rows, repeats):
    best = float("inf")
    for _ in range(repeats):
        work = rows.copy()
        start = time.perf_counter()
        lane.run_sorter_many(spec, work)
        best = min(best, time.perf_counter() - start)
    return best / len(rows)  # seconds per one sorted array


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true",
                        help="smaller batches (for smoke runs)")
    args = parser.parse_args()

    if _native is None:
        print("compiled lane is not built; install the package first "
              "(pip install -e . --no-build-isolation)")
        return 1

    scale = 10 if args.quick else 100
    workloads = [
        ("SN Best 4CmS", 8, 50 * scale),
        ("SN Best 4CmS", 16, 50 * scale),
        ("SN BN-R TCOp", 16, 50 * scale),
        ("IS Def", 16, 50 * scale),
        ("RSS 332 SN Best 4CmS", 256, 4 * scale),
        ("QS SN Best 4CmS", 4096, scale),
        ("StdSort", 4096, scale),
    ]

    rng = np.random.default_rng(2026)
    header = f"{'sorter':<22} {'n':>5} {'native ns':>11} {'python ns':>12} " \
             f"{'python/native':>14}"
    print(header)
    print("-" * len(header))
    for label, size, count in workloads:
        spec = registry.parse_label(label)
        rows = batch(rng, count, size)
        native_s = time_lane(_native, spec, rows, repeats=3)
        python_s = time_lane(_pybackend, spec, rows, repeats=1)
        print(f"{label:<22} {size:>5} {native_s * 1e9:>11.0f} "
              f"{python_s * 1e9:>12.0f} {python_s / native_s:>13.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
