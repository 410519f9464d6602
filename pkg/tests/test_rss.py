"""Register-sample-sort contracts: splitters, classification, full sort."""

import random

import numpy as np
import pytest

from netsort.errors import ConfigurationError, FallbackToBaseCase
from netsort.items import items_from_keys, items_from_pairs
from netsort.rss import (
    RssConfig,
    SplitterSet,
    classify_block,
    classify_element,
    rss_sort,
    select_splitters,
)


def random_items(rng, n):
    return items_from_pairs(
        [(rng.getrandbits(64), rng.getrandbits(64)) for _ in range(n)])


def assert_sorted_and_same_multiset(before, after):
    keys = after["key"].tolist()
    assert keys == sorted(keys)
    assert sorted(zip(after["key"].tolist(), after["ref"].tolist())) == \
        sorted(zip(before["key"].tolist(), before["ref"].tolist()))


# ---------------------------------------------------------------------------
# config parsing
# ---------------------------------------------------------------------------

def test_config_from_string():
    cfg = RssConfig.from_string("332")
    assert (cfg.num_splitters, cfg.oversampling, cfg.block_size) == (3, 3, 2)
    assert cfg.label == "332"
    assert cfg.sample_size == 12


def test_config_rejects_bad_strings():
    with pytest.raises(ConfigurationError):
        RssConfig.from_string("4 1")
    with pytest.raises(ConfigurationError):
        RssConfig.from_string("732")  # 7 splitters rejected by design
    with pytest.raises(ConfigurationError):
        RssConfig.from_string("306")  # block size out of range
    with pytest.raises(ConfigurationError):
        RssConfig.from_string("302")  # oversampling 0


# ---------------------------------------------------------------------------
# splitter selection
# ---------------------------------------------------------------------------

def test_select_splitters_sample_equals_population():
    # a=1: sample of 4; with all keys equal the sample is forced, positions
    # 1,2,3 of the sorted sample are that key
    arr = items_from_keys([9, 9, 9, 9])
    cfg = RssConfig(oversampling=1)
    s = select_splitters(arr, cfg)
    assert s == SplitterSet(9, 9, 9)


def test_select_splitters_orders_sample():
    rng = random.Random(5)
    arr = random_items(rng, 64)
    cfg = RssConfig(oversampling=3)
    s = select_splitters(arr, cfg)
    assert s.s_low <= s.s_mid <= s.s_high


def test_select_splitters_positions_in_sorted_sample():
    # reproduce the draw by hand: same LCG stream, same positions a,2a,3a
    from netsort.backend import lcg_next

    rng = random.Random(6)
    arr = random_items(rng, 128)
    cfg = RssConfig(oversampling=3)
    s = cfg.sample_seed
    picks = []
    for _ in range(cfg.sample_size):
        s = lcg_next(s)
        picks.append(int(arr["key"][s % len(arr)]))
    picks.sort()
    got = select_splitters(arr, cfg)
    assert got == SplitterSet(picks[2], picks[5], picks[8])


def test_select_splitters_too_few_items():
    arr = items_from_keys(list(range(8)))
    with pytest.raises(FallbackToBaseCase):
        select_splitters(arr, RssConfig(oversampling=3))  # needs 12


def test_select_splitters_deterministic():
    rng = random.Random(7)
    arr = random_items(rng, 100)
    cfg = RssConfig(oversampling=2)
    assert select_splitters(arr, cfg) == select_splitters(arr, cfg)


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

def test_classify_element_examples():
    s = SplitterSet(10, 20, 30)
    assert classify_element(5, s) == 0
    assert classify_element(15, s) == 1
    assert classify_element(25, s) == 2
    assert classify_element(35, s) == 3


def test_classify_element_boundaries_go_low():
    s = SplitterSet(10, 20, 30)
    assert classify_element(10, s) == 0
    assert classify_element(20, s) == 1
    assert classify_element(30, s) == 2


def test_classify_element_partition_invariant():
    # bucket j implies s_{j-1} < key <= s_j with sentinels -inf / +inf
    s = SplitterSet(100, 200, 300)
    bounds = (None, 100, 200, 300, None)
    rng = random.Random(8)
    for _ in range(2000):
        key = rng.randrange(0, 400)
        j = classify_element(key, s)
        lo, hi = bounds[j], bounds[j + 1]
        if lo is not None:
            assert lo < key
        if hi is not None:
            assert key <= hi


def test_classify_element_exactly_two_comparisons():
    calls = []

    class CountingKey(int):
        def __gt__(self, other):  # pragma: no cover - defensive
            calls.append("gt")
            return int(self) > int(other)

    class CountingSplitter(int):
        def __lt__(self, other):
            calls.append("lt")
            return int(self) < int(other)

    s = SplitterSet(CountingSplitter(10), CountingSplitter(20),
                    CountingSplitter(30))
    for key in (5, 15, 25, 35, 10, 20, 30):
        calls.clear()
        classify_element(CountingKey(key), s)
        assert calls == ["lt", "lt"]


@pytest.mark.parametrize("block", [1, 2, 3, 4, 5])
def test_classify_block_matches_element(block):
    rng = random.Random(9 + block)
    s = SplitterSet(rng.getrandbits(64), rng.getrandbits(64),
                    rng.getrandbits(64))
    s = SplitterSet(*sorted(s))
    for n in (0, 1, 3, 10, 17, 101):
        arr = random_items(rng, n)
        tags = classify_block(arr, s, block)
        expected = [classify_element(int(k), s) for k in arr["key"]]
        assert tags.tolist() == expected


def test_classify_block_accepts_raw_keys():
    s = SplitterSet(10, 20, 30)
    tags = classify_block(np.array([5, 15, 25, 35], dtype=np.uint64), s, 2)
    assert tags.tolist() == [0, 1, 2, 3]


def test_classify_block_ten_items_block4():
    # two full blocks of 4 plus a scalar tail of 2
    s = SplitterSet(10, 20, 30)
    keys = np.array([5, 15, 25, 35, 5, 15, 25, 35, 5, 35], dtype=np.uint64)
    tags = classify_block(keys, s, 4)
    assert tags.tolist() == [0, 1, 2, 3, 0, 1, 2, 3, 0, 3]


# ---------------------------------------------------------------------------
# full sort
# ---------------------------------------------------------------------------

def test_rss_base_case_delegation():
    # n == threshold: straight to base sorter, no classification
    rng = random.Random(10)
    arr = random_items(rng, 16)
    before = arr.copy()
    rss_sort(arr, RssConfig.from_string("332"))
    assert_sorted_and_same_multiset(before, arr)


def test_rss_256_random_with_default_config():
    rng = random.Random(11)
    arr = random_items(rng, 256)
    before = arr.copy()
    rss_sort(arr, RssConfig.from_string("332"))
    assert_sorted_and_same_multiset(before, arr)


def test_rss_all_equal_keys_terminates():
    arr = items_from_pairs([(42, i) for i in range(256)])
    rss_sort(arr, RssConfig.from_string("332"))
    assert arr["key"].tolist() == [42] * 256
    assert sorted(arr["ref"].tolist()) == list(range(256))


def test_rss_presorted_input():
    arr = items_from_keys(list(range(300)))
    rss_sort(arr, RssConfig.from_string("341"))
    assert arr["key"].tolist() == list(range(300))


def test_rss_gap_sizes_between_threshold_and_sample():
    # 16 < n < 4a: too small to sample, must still sort correctly
    rng = random.Random(12)
    cfg = RssConfig.from_string("391")  # sample = 36
    for n in range(17, 36):
        arr = random_items(rng, n)
        before = arr.copy()
        rss_sort(arr, cfg)
        assert_sorted_and_same_multiset(before, arr)


@pytest.mark.parametrize("cfg_str", ["331", "332", "333", "341", "344"])
@pytest.mark.parametrize("base", ["SN Best 4CmS", "IS Def"])
def test_rss_random_sizes_both_bases(cfg_str, base):
    rng = random.Random(hash((cfg_str, base)) & 0xFFFF)
    cfg = RssConfig.from_string(cfg_str, base_sorter=base)
    for _ in range(30):
        n = rng.randrange(17, 1025)
        arr = random_items(rng, n)
        before = arr.copy()
        rss_sort(arr, cfg)
        assert_sorted_and_same_multiset(before, arr)


def test_rss_duplicate_heavy():
    rng = random.Random(13)
    cfg = RssConfig.from_string("332")
    for _ in range(20):
        n = rng.randrange(17, 400)
        arr = items_from_pairs(
            [(rng.randrange(0, 4), rng.getrandbits(32)) for _ in range(n)])
        before = arr.copy()
        rss_sort(arr, cfg)
        assert_sorted_and_same_multiset(before, arr)
