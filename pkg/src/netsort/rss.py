"""Register sample sort: 3 splitters, 4 buckets, branch-free classification.

Medium-size sorter (useful around 17..1024 items).  Splitters live in local
scalar values rather than a tree in memory; classification of each element
costs exactly two strict key comparisons; block-interleaved variants keep
1..5 independent classification states in flight.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import backend, registry
from .errors import ConfigurationError, FallbackToBaseCase
from .items import ITEM_DTYPE


class SplitterSet(NamedTuple):
    s_low: int
    s_mid: int
    s_high: int


@dataclass(frozen=True)
class RssConfig:
    """Configuration ``xyz``: splitters / oversampling factor / block size."""

    oversampling: int = 3
    block_size: int = 3
    base_case_threshold: int = 16
    base_sorter: str = "SN Best 4CmS"
    sample_seed: int = registry.DEFAULT_RSS_SAMPLE_SEED
    num_splitters: int = 3

    def __post_init__(self):
        if self.num_splitters != 3:
            raise ConfigurationError("exactly 3 splitters are supported")
        if self.oversampling < 1:
            raise ConfigurationError("oversampling factor must be >= 1")
        if not 1 <= self.block_size <= 5:
            raise ConfigurationError("block size must be in 1..5")
        if self.base_case_threshold < 2:
            raise ConfigurationError("base case threshold must be >= 2")

    @classmethod
    def from_string(cls, cfg: str, base_sorter: str = "SN Best 4CmS",
                    **kwargs) -> "RssConfig":
        if len(cfg) != 3 or not cfg.isdigit():
            raise ConfigurationError(
                f"config string must be three digits, got {cfg!r}")
        x, y, z = (int(ch) for ch in cfg)
        return cls(num_splitters=x, oversampling=y, block_size=z,
                   base_sorter=base_sorter, **kwargs)

    @property
    def label(self) -> str:
        return f"3{self.oversampling}{self.block_size}"

    def to_spec(self) -> registry.SorterSpec:
        return registry.spec_rss(
            self.label,
            self.base_sorter,
            threshold=self.base_case_threshold,
            sample_seed=self.sample_seed,
        )

    @property
    def sample_size(self) -> int:
        return 4 * self.oversampling


def select_splitters(arr: np.ndarray, cfg: RssConfig,
                     seed: int | None = None) -> SplitterSet:
    """Draw and sort the a*4 sample; return keys at positions a, 2a, 3a."""
    n = len(arr)
    sample = cfg.sample_size
    if n < sample:
        raise FallbackToBaseCase(
            f"{n} items cannot supply a sample of {sample}")
    s = cfg.sample_seed if seed is None else seed
    picks = np.empty(sample, dtype=ITEM_DTYPE)
    keys = arr["key"]
    for t in range(sample):
        s = backend.lcg_next(s)
        picks[t] = (keys[s % n], 0)
    if sample <= 16:
        from .smallsort import sort_small
        sort_small(picks, sample, cfg.base_sorter)
    else:
        from .smallsort import insertion_sort
        insertion_sort(picks, sample)
    a = cfg.oversampling
    return SplitterSet(int(picks["key"][a - 1]),
                       int(picks["key"][2 * a - 1]),
                       int(picks["key"][3 * a - 1]))


def classify_element(key, s: SplitterSet) -> int:
    """Bucket 0..3 via two strict splitter-below-element comparisons."""
    c = s.s_mid < key
    chosen = s.s_high if c else s.s_low  # scratch splitter, overwritten
    return (int(c) << 1) + int(chosen < key)


def classify_block(items: np.ndarray, s: SplitterSet,
                   block_size: int = 1) -> np.ndarray:
    """Bucket indices for all items; identical to classify_element each."""
    if not 1 <= block_size <= 5:
        raise ConfigurationError("block size must be in 1..5")
    keys = items["key"] if items.dtype == ITEM_DTYPE else np.asarray(
        items, dtype=np.uint64)
    return backend.classify_block_u64(keys, s.s_low, s.s_mid, s.s_high,
                                      block_size)


def rss_sort(arr: np.ndarray, cfg: RssConfig) -> np.ndarray:
    backend.run_sorter(cfg.to_spec(), arr)
    return arr


__all__ = [
    "RssConfig",
    "SplitterSet",
    "select_splitters",
    "classify_element",
    "classify_block",
    "rss_sort",
]
