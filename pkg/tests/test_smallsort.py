"""Small-sorter contracts: unrolled networks, interpreter, insertion sorts."""

import itertools
import random

import numpy as np
import pytest

from netsort import networks as nw
from netsort.errors import UnsupportedSize
from netsort.items import ITEM_DTYPE, items_from_keys, items_from_pairs
from netsort.smallsort import (
    insertion_sort,
    sort_network,
    sort_network_interpreted,
    sort_small,
    swap_call_count,
)
from netsort.swaps import STRATEGIES

INS_VARIANTS = ("Def", "POp", "STL", "AIF")


def random_items(rng, n):
    return items_from_pairs(
        [(rng.getrandbits(64), rng.getrandbits(64)) for _ in range(n)])


def reference_keys(arr):
    return sorted(arr["key"].tolist())


def assert_sorted_and_same_multiset(before, after):
    assert sorted(after["key"].tolist()) == after["key"].tolist()
    assert sorted(zip(after["key"].tolist(), after["ref"].tolist())) == \
        sorted(zip(before["key"].tolist(), before["ref"].tolist()))


# ---------------------------------------------------------------------------
# sort_network
# ---------------------------------------------------------------------------

def test_sort_network_two_items():
    arr = items_from_pairs([(9, 0xA), (1, 0xB)])
    sort_network(arr, 2, "best", "ISwp")
    assert arr["key"].tolist() == [1, 9]
    assert arr["ref"].tolist() == [0xB, 0xA]


def test_sort_network_size_out_of_range():
    arr = items_from_keys(list(range(20)))
    with pytest.raises(UnsupportedSize):
        sort_network(arr, 17, "best", "ISwp")
    with pytest.raises(UnsupportedSize):
        sort_network(arr, 1, "best", "ISwp")


def test_sort_network_short_slice():
    arr = items_from_keys([3, 1])
    with pytest.raises(UnsupportedSize):
        sort_network(arr, 3, "best", "ISwp")


def test_sort_network_prefix_only():
    arr = items_from_keys([5, 4, 3, 2, 1, 0])
    sort_network(arr, 4, "bn-l", "TCOp")
    assert arr["key"].tolist() == [2, 3, 4, 5, 1, 0]


@pytest.mark.parametrize("family", nw.FAMILY_KEYS)
@pytest.mark.parametrize("swap", STRATEGIES)
def test_sort_network_random_all_sizes(family, swap):
    rng = random.Random(hash((family, swap)) & 0xFFFFFFFF)
    for n in range(2, 17):
        for _ in range(25):
            arr = random_items(rng, n)
            before = arr.copy()
            sort_network(arr, n, family, swap)
            assert_sorted_and_same_multiset(before, arr)


@pytest.mark.parametrize("family", nw.FAMILY_KEYS)
def test_sort_network_exhaustive_n5(family):
    for perm in itertools.permutations(range(5)):
        arr = items_from_keys(list(perm))
        sort_network(arr, 5, family, "4CmS")
        assert arr["key"].tolist() == [0, 1, 2, 3, 4]
        # each ref is the original position of its (distinct) key
        assert arr["ref"].tolist() == [perm.index(k) for k in range(5)]


def test_sort_network_equal_keys_ref_transport():
    arr = items_from_pairs([(7, i) for i in range(8)])
    sort_network(arr, 8, "best", "6Cm")
    assert arr["key"].tolist() == [7] * 8
    assert sorted(arr["ref"].tolist()) == list(range(8))


# ---------------------------------------------------------------------------
# interpreted executor
# ---------------------------------------------------------------------------

def test_interpreted_empty_network():
    net = nw.Network(n=4, comparators=(), ordering_tag="empty")
    arr = items_from_keys([3, 1, 2, 0])
    sort_network_interpreted(arr, net)
    assert arr["key"].tolist() == [3, 1, 2, 0]


def test_interpreted_best10_reversed():
    arr = items_from_keys(list(range(10, 0, -1)))
    sort_network_interpreted(arr, nw.best_network(10))
    assert arr["key"].tolist() == list(range(1, 11))


@pytest.mark.parametrize("family", nw.FAMILY_KEYS)
def test_interpreted_agrees_with_unrolled(family):
    rng = random.Random(20260814)
    for n in range(2, 17):
        net = nw.family_network(family, n)
        for _ in range(40):
            arr = random_items(rng, n)
            other = arr.copy()
            sort_network_interpreted(arr, net)
            sort_network(other, n, family, "Tie")
            assert np.array_equal(arr, other)


# ---------------------------------------------------------------------------
# insertion sorts
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("variant", INS_VARIANTS)
def test_insertion_empty_and_single(variant):
    arr = np.empty(0, dtype=ITEM_DTYPE)
    insertion_sort(arr, variant=variant)
    assert len(arr) == 0
    arr = items_from_keys([42])
    insertion_sort(arr, variant=variant)
    assert arr["key"].tolist() == [42]


def test_insertion_def_sorted_input_comparison_count():
    arr = items_from_keys(list(range(16)))
    _, comparisons = insertion_sort(arr, variant="Def",
                                    count_comparisons=True)
    assert arr["key"].tolist() == list(range(16))
    assert comparisons == 15  # exactly n-1 on presorted input


@pytest.mark.parametrize("variant", INS_VARIANTS)
def test_insertion_random(variant):
    rng = random.Random(99 + INS_VARIANTS.index(variant))
    for n in (2, 3, 7, 16, 33, 100):
        arr = random_items(rng, n)
        before = arr.copy()
        insertion_sort(arr, variant=variant)
        assert_sorted_and_same_multiset(before, arr)


def test_insertion_variants_extensionally_identical():
    rng = random.Random(1234)
    for _ in range(200):
        n = rng.randrange(0, 40)
        base = random_items(rng, n) if n else np.empty(0, dtype=ITEM_DTYPE)
        outs = []
        for variant in INS_VARIANTS:
            arr = base.copy()
            insertion_sort(arr, variant=variant)
            outs.append(arr)
        for arr in outs[1:]:
            assert np.array_equal(outs[0], arr)


def test_insertion_reverse_and_duplicates():
    arr = items_from_keys([5, 5, 4, 4, 3, 3, 2, 2, 1, 1])
    insertion_sort(arr, variant="AIF")
    assert arr["key"].tolist() == [1, 1, 2, 2, 3, 3, 4, 4, 5, 5]


# ---------------------------------------------------------------------------
# sort_small dispatch
# ---------------------------------------------------------------------------

def test_sort_small_tiny_sizes_no_op():
    arr = items_from_keys([2, 1])
    sort_small(arr, 1, "SN Best 4CmS")
    assert arr["key"].tolist() == [2, 1]
    sort_small(arr, 0, "SN Best 4CmS")
    assert arr["key"].tolist() == [2, 1]


def test_sort_small_network_equals_insertion():
    rng = random.Random(777)
    for _ in range(100):
        arr = random_items(rng, 8)
        other = arr.copy()
        sort_small(arr, 8, "SN Best 4CmS")
        insertion_sort(other, 8, variant="Def")
        assert np.array_equal(arr, other)


def test_sort_small_insertion_has_no_size_cap():
    rng = random.Random(31337)
    arr = random_items(rng, 300)
    before = arr.copy()
    sort_small(arr, 300, "IS Def")
    assert_sorted_and_same_multiset(before, arr)


def test_sort_small_network_size_cap():
    arr = items_from_keys(list(range(20)))
    with pytest.raises(UnsupportedSize):
        sort_small(arr, 17, "SN BN-L ISwp")


def test_sort_small_rejects_non_small_labels():
    arr = items_from_keys([2, 1, 3])
    with pytest.raises(UnsupportedSize):
        sort_small(arr, 3, "RSS 332 IS Def")


# ---------------------------------------------------------------------------
# zero-one at item level (refs distinct: checks ref transport too)
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("family", nw.FAMILY_KEYS)
def test_zero_one_items_with_ref_transport(family):
    for n in range(2, 11):
        for bits in range(1 << n):
            keys = [(bits >> i) & 1 for i in range(n)]
            arr = items_from_pairs(list(zip(keys, range(n))))
            sort_network(arr, n, family, "2CPp")
            out = arr["key"].tolist()
            assert out == sorted(keys)
            # refs must be a permutation carrying each key with it
            assert sorted(arr["ref"].tolist()) == list(range(n))
            for k, r in zip(out, arr["ref"].tolist()):
                assert keys[r] == k


# ---------------------------------------------------------------------------
# instrumented comparator counts (branch-free straight-line execution)
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("family", nw.FAMILY_KEYS)
def test_swap_call_count_is_input_independent(family):
    rng = random.Random(5150)
    for n in (2, 7, 10, 16):
        expected = nw.family_network(family, n).size
        seen = set()
        for _ in range(20):
            arr = random_items(rng, n)
            seen.add(swap_call_count(family, n, arr))
        assert seen == {expected}
