"""Network generation, ordering, leveling, verification, emission."""

import numpy as np
import pytest

from netsort import networks as nw
from netsort.errors import TooLargeForExhaustive, UnsupportedSize

# Frozen golden: generated construction sizes for n = 0..20, cross-checked
# below against an independent transcription of the recursion's count.
BN_SIZES = (0, 0, 1, 3, 5, 9, 12, 16, 19, 27, 32, 38, 42, 50, 55, 61, 65, 81, 90, 100, 106)

# Frozen golden: depth of the compacted 6-channel generated network.
D6 = 6

BEST_SIZES = {2: 1, 3: 3, 4: 5, 5: 9, 6: 12, 7: 16, 8: 19, 9: 25, 10: 29,
              11: 36, 12: 40, 13: 46, 14: 51, 15: 56, 16: 60}


def independent_bn_count(n):
    """Straightforward transcription of the recursion, counting only."""

    def split(m):
        if m < 2:
            return 0
        h = m // 2
        return split(h) + split(m - h) + merge(h, m - h)

    def merge(x, y):
        if x == 1 and y == 1:
            return 1
        if x == 1 and y == 2:
            return 2
        if x == 2 and y == 1:
            return 2
        xm = x // 2
        ym = y // 2 if x % 2 else (y + 1) // 2
        return merge(xm, ym) + merge(x - xm, y - ym) + merge(x - xm, ym)

    return split(n)


def apply_network(net, values):
    out = list(values)
    for c in net.comparators:
        if out[c.high] < out[c.low]:
            out[c.low], out[c.high] = out[c.high], out[c.low]
    return out


# ---------------------------------------------------------------------------
# generation
# ---------------------------------------------------------------------------

def test_bose_nelson_trivial_sizes():
    assert nw.generate_bose_nelson(0).comparators == ()
    assert nw.generate_bose_nelson(1).comparators == ()
    assert nw.generate_bose_nelson(2).comparators == (nw.Comparator(0, 1),)


def test_bose_nelson_six_has_twelve_comparators():
    assert nw.generate_bose_nelson(6).size == 12


def test_bose_nelson_sizes_match_independent_count():
    for n in range(0, 21):
        assert nw.generate_bose_nelson(n).size == independent_bn_count(n) == BN_SIZES[n]


def test_bose_nelson_sizes_monotone_and_bounded():
    for n in range(2, 20):
        assert BN_SIZES[n] <= BN_SIZES[n + 1]
    for n in range(2, 11):
        assert nw.size_bound_holds(n)


def test_bose_nelson_zero_one_all_required_sizes():
    for n in range(2, 17):
        assert nw.verify_zero_one(nw.generate_bose_nelson(n))


def test_bose_nelson_sampled_large_sizes():
    rng = np.random.default_rng(7)
    for n in (17, 18, 19, 20):
        net = nw.generate_bose_nelson(n)
        for _ in range(200):
            vals = rng.integers(0, 50, size=n).tolist()
            assert apply_network(net, vals) == sorted(vals)


# ---------------------------------------------------------------------------
# ordering variants
# ---------------------------------------------------------------------------

def test_reorder_locality_n2_identity():
    n2 = nw.generate_bose_nelson(2)
    assert nw.reorder_locality(n2).comparators == n2.comparators


def test_reorder_locality_n4_structure():
    net = nw.reorder_locality(nw.generate_bose_nelson(4))
    comps = [tuple(c) for c in net.comparators]
    assert comps[:2] == [(0, 1), (2, 3)]  # sort both halves first
    assert set(comps[2:]) == {(0, 2), (1, 3), (1, 2)}  # then merge
    assert nw.verify_zero_one(net)


def test_reorder_locality_n16_first_nineteen_touch_first_half():
    sub = nw.generate_bose_nelson(8)
    assert sub.size == 19
    net = nw.reorder_locality(nw.generate_bose_nelson(16))
    head = net.comparators[: sub.size]
    assert all(c.high <= 7 for c in head)
    assert [tuple(c) for c in head] == [tuple(c) for c in sub.comparators]


def test_reorder_locality_rejects_foreign_networks():
    with pytest.raises(ValueError):
        nw.reorder_locality(nw.Network(4, (nw.Comparator(0, 3),), nw.BN_LOCALITY))


def test_reorder_parallelism_level_examples():
    net = nw.Network(4, nw._comparators([(0, 1), (2, 3), (0, 2)]), nw.BN_LOCALITY)
    leveled = nw.compute_levels(net)
    assert [list(map(tuple, lv)) for lv in leveled.levels] == [
        [(0, 1), (2, 3)],
        [(0, 2)],
    ]
    chain = nw.Network(3, nw._comparators([(0, 1), (1, 2), (0, 1)]), nw.BN_LOCALITY)
    assert nw.compute_levels(chain).depth == 3


def test_reorder_parallelism_bn6_frozen_depth_and_validity():
    bn6 = nw.generate_bose_nelson(6)
    par = nw.reorder_parallelism(bn6)
    assert nw.depth(par) == D6
    assert nw.verify_zero_one(par)


def test_reorders_preserve_multiset_and_channel_subsequences():
    for n in (5, 8, 13, 16):
        bn = nw.generate_bose_nelson(n)
        for variant in (nw.reorder_locality(bn), nw.reorder_parallelism(bn)):
            assert sorted(variant.comparators) == sorted(bn.comparators)
        par = nw.reorder_parallelism(bn)
        for ch in range(n):
            before = [c for c in bn.comparators if ch in (c.low, c.high)]
            after = [c for c in par.comparators if ch in (c.low, c.high)]
            assert before == after


def test_parallelism_never_deepens():
    for n in range(2, 17):
        for fam in ("best", "bn-l"):
            net = nw.family_network(fam, n)
            assert nw.depth(nw.reorder_parallelism(net)) <= nw.depth(net)


def test_levels_are_channel_disjoint():
    for n in (6, 10, 16):
        leveled = nw.compute_levels(nw.best_network(n))
        for level in leveled.levels:
            seen = set()
            for c in level:
                assert c.low not in seen and c.high not in seen
                seen.update((c.low, c.high))


def test_compute_levels_trivial():
    assert nw.compute_levels(nw.Network(2, (), nw.BN_LOCALITY)).depth == 0
    one = nw.Network(2, (nw.Comparator(0, 1),), nw.BN_LOCALITY)
    assert nw.compute_levels(one).depth == 1


# ---------------------------------------------------------------------------
# best-known tables
# ---------------------------------------------------------------------------

def test_best_network_anchors():
    ten = nw.best_network(10)
    assert ten.size == 29
    assert nw.depth(ten) == 9
    assert nw.best_network(2).comparators == (nw.Comparator(0, 1),)


def test_best_sizes_frozen():
    for n, size in BEST_SIZES.items():
        assert nw.best_network(n).size == size


def test_best_matches_generated_for_small_sizes():
    for n in range(2, 9):
        bn = nw.generate_bose_nelson(n)
        best = nw.best_network(n)
        assert best.size == bn.size
        assert nw.depth(best) == nw.depth(bn)


def test_best_sixteen_not_larger_than_generated():
    assert nw.best_network(16).size <= nw.generate_bose_nelson(16).size


def test_best_networks_zero_one():
    for n in range(2, 17):
        assert nw.verify_zero_one(nw.best_network(n))


def test_best_network_out_of_range():
    for n in (1, 17, 0, 32):
        with pytest.raises(UnsupportedSize):
            nw.best_network(n)


def test_restriction_reproduces_committed_tables():
    nine = nw.restrict_top_channel(nw.best_network(10))
    assert nine.comparators == nw.best_network(9).comparators
    cur = nw.best_network(16)
    for n in range(15, 10, -1):
        cur = nw.restrict_top_channel(cur)
        assert cur.comparators == nw.best_network(n).comparators


# ---------------------------------------------------------------------------
# zero-one verifier itself
# ---------------------------------------------------------------------------

def test_zero_one_examples():
    good = nw.Network(2, (nw.Comparator(0, 1),), nw.BN_LOCALITY)
    assert nw.verify_zero_one(good)
    empty = nw.Network(2, (), nw.BN_LOCALITY)
    assert not nw.verify_zero_one(empty)


def test_zero_one_detects_removed_comparator():
    ten = nw.best_network(10)
    broken = nw.Network(10, ten.comparators[:-1], nw.BEST_KNOWN)
    assert not nw.verify_zero_one(broken)


def test_zero_one_agrees_with_permutation_sorting():
    rng = np.random.default_rng(3)
    net = nw.best_network(10)
    for _ in range(300):
        vals = rng.permutation(10).tolist()
        assert apply_network(net, vals) == sorted(vals)


def test_zero_one_size_cap():
    with pytest.raises(TooLargeForExhaustive):
        nw.verify_zero_one(nw.Network(25, (nw.Comparator(0, 1),), nw.BN_LOCALITY))


# ---------------------------------------------------------------------------
# table format and emission
# ---------------------------------------------------------------------------

def test_table_roundtrip():
    net = nw.best_network(10)
    text = nw.format_table(net, comments=["roundtrip check"])
    parsed = nw.parse_table(text)
    assert parsed.n == net.n
    assert parsed.comparators == net.comparators


def test_table_parse_errors():
    with pytest.raises(ValueError):
        nw.parse_table("0 1\n")
    with pytest.raises(ValueError):
        nw.parse_table("# only a comment\n")


def test_emit_table_dialect_matches_format():
    net = nw.best_network(6)
    assert nw.emit_unrolled_source(net, "table") == nw.format_table(net)


def test_emit_source_single_comparator():
    net = nw.Network(2, (nw.Comparator(0, 1),), nw.BN_LOCALITY)
    src = nw.emit_unrolled_source(net, "source")
    assert src.count("cswap(") == 1
    assert "base + 0, base + 1" in src


def test_emit_source_best10_has_29_swaps():
    src = nw.emit_unrolled_source(nw.best_network(10), "source")
    assert src.count("cswap(keys, refs") == 29


def test_emit_source_recursive_structure():
    net = nw.family_network("bn-r", 16)
    src = nw.emit_unrolled_source(net, "source")
    assert "sort_bn_r_8(keys, refs, base, cswap)" in src
    assert "sort_bn_r_8(keys, refs, base + 8, cswap)" in src
    merger = nw.bose_nelson_merger(16)
    assert src.count("cswap(keys, refs") == len(merger)


def test_emit_unknown_dialect():
    with pytest.raises(ValueError):
        nw.emit_unrolled_source(nw.best_network(4), "asm")


def test_recursive_flattening_equals_locality_order():
    def flatten(n, base):
        if n < 2:
            return []
        if n == 2:
            return [(base, base + 1)]
        first, second = nw.bose_nelson_halves(n)
        out = flatten(first, base) + flatten(second, base + first)
        out.extend((base + c.low, base + c.high) for c in nw.bose_nelson_merger(n))
        return out

    for n in range(2, 17):
        flat = flatten(n, 0)
        loc = [tuple(c) for c in nw.generate_bose_nelson(n).comparators]
        assert flat == loc


def test_family_network_tags_and_errors():
    assert nw.family_network("best", 8).ordering_tag == nw.BEST_KNOWN
    assert nw.family_network("bn-l", 8).ordering_tag == nw.BN_LOCALITY
    assert nw.family_network("bn-p", 8).ordering_tag == nw.BN_PARALLEL
    bnr = nw.family_network("bn-r", 8)
    assert bnr.ordering_tag == nw.BN_RECURSIVE
    assert bnr.comparators == nw.family_network("bn-l", 8).comparators
    with pytest.raises(UnsupportedSize):
        nw.family_network("best", 17)
    with pytest.raises(ValueError):
        nw.family_network("batcher", 8)
