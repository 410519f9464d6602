"""Introsort-style quicksort with a pluggable small-set base case.

Hoare partitioning with the pivot chosen by a 3-element network (instead of
if/else plus swaps), a recursion-depth guard that falls back to heapsort,
and partitions at or below the threshold sorted immediately by the
configured base sorter so they are handled while still cache-resident.  A
reference variant that defers base cases to one final whole-array insertion
pass is available behind ``final_insertion_pass``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import backend, registry
from .errors import ConfigurationError
from .swaps import SWAP_FUNCS
from . import _pybackend


@dataclass(frozen=True)
class HybridConfig:
    base_case_threshold: int = 16
    base_sorter: str = "SN Best 4CmS"
    depth_limit_factor: int = 2
    final_insertion_pass: bool = False

    def __post_init__(self):
        if self.base_case_threshold < 2:
            raise ConfigurationError("base case threshold must be >= 2")
        if self.depth_limit_factor < 1:
            raise ConfigurationError("depth limit factor must be >= 1")

    def to_spec(self) -> registry.SorterSpec:
        return registry.spec_hybrid(
            self.base_sorter,
            threshold=self.base_case_threshold,
            depth_factor=self.depth_limit_factor,
            final_pass=self.final_insertion_pass,
        )


def hybrid_quicksort(arr: np.ndarray, cfg: HybridConfig | None = None,
                     n: int | None = None) -> np.ndarray:
    cfg = HybridConfig() if cfg is None else cfg
    backend.run_sorter(cfg.to_spec(), arr, n)
    return arr


def hybrid_quicksort_stats(arr: np.ndarray,
                           cfg: HybridConfig | None = None) -> dict:
    """Sort with debug instrumentation.

    Returns counters: base_calls, max_base (largest base-case size),
    heap_calls (depth-guard escapes), partition_violations (post-partition
    scan failures; must be 0).
    """
    cfg = HybridConfig() if cfg is None else cfg
    return backend.hybrid_stats(cfg.to_spec(), arr)


def median_of_three_pivot(arr: np.ndarray, lo: int, mid: int, hi: int,
                          swap_name: str = "TCOp") -> int:
    """Sort positions (lo, mid, hi) in place with the 3-net; pivot = mid."""
    if not 0 <= lo < mid < hi < len(arr):
        raise ConfigurationError("need 0 <= lo < mid < hi inside the array")
    fn = SWAP_FUNCS[swap_name]
    keys = arr["key"].tolist()
    refs = arr["ref"].tolist()
    fn(keys, refs, mid, hi)
    fn(keys, refs, lo, hi)
    fn(keys, refs, lo, mid)
    arr["key"] = keys
    arr["ref"] = refs
    return mid


def heapsort_fallback(arr: np.ndarray, n: int | None = None) -> np.ndarray:
    """The depth-guard escape hatch, callable standalone for testing."""
    n = len(arr) if n is None else n
    keys = arr["key"][:n].tolist()
    refs = arr["ref"][:n].tolist()
    _pybackend._heapsort(keys, refs, 0, n)
    arr["key"][:n] = keys
    arr["ref"][:n] = refs
    return arr


__all__ = [
    "HybridConfig",
    "hybrid_quicksort",
    "hybrid_quicksort_stats",
    "median_of_three_pivot",
    "heapsort_fallback",
]
