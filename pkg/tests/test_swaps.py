"""Conditional-swap strategy contracts (pure implementations)."""

import numpy as np
import pytest

from netsort import swaps
from netsort.networks import best_network

U64 = 1 << 64


def run_strategy(strategy, left, right):
    return swaps.conditional_swap(strategy, left, right)


def test_strategy_set_is_closed_and_complete():
    assert len(swaps.STRATEGIES) == 9
    assert set(swaps.SWAP_FUNCS) == set(swaps.STRATEGIES)
    assert set(swaps.LONG_NAMES) == set(swaps.STRATEGIES)


@pytest.mark.parametrize("strategy", swaps.STRATEGIES)
def test_contract_examples(strategy):
    # out of order: exchange whole items
    assert run_strategy(strategy, (5, 0xA), (3, 0xB)) == ((3, 0xB), (5, 0xA))
    # in order: unchanged
    assert run_strategy(strategy, (3, 0xB), (5, 0xA)) == ((3, 0xB), (5, 0xA))
    # equal keys: strict comparison, no exchange
    assert run_strategy(strategy, (7, 0x1), (7, 0x2)) == ((7, 0x1), (7, 0x2))


@pytest.mark.parametrize("strategy", swaps.STRATEGIES)
def test_idempotence(strategy):
    rng = np.random.default_rng(11)
    for _ in range(200):
        pair = (
            (int(rng.integers(0, U64, dtype=np.uint64)), int(rng.integers(0, U64, dtype=np.uint64))),
            (int(rng.integers(0, U64, dtype=np.uint64)), int(rng.integers(0, U64, dtype=np.uint64))),
        )
        once = run_strategy(strategy, *pair)
        twice = run_strategy(strategy, *once)
        assert once == twice
        assert once[0][0] <= once[1][0]
        assert sorted(once) == sorted(pair)


def test_extensional_equality_random_pairs():
    rng = np.random.default_rng(12)
    trials = 20_000  # full 1e6-pair sweep runs in the acceptance suite
    ks = rng.integers(0, U64, size=(trials, 2), dtype=np.uint64)
    rs = rng.integers(0, U64, size=(trials, 2), dtype=np.uint64)
    for t in range(trials):
        left = (int(ks[t, 0]), int(rs[t, 0]))
        right = (int(ks[t, 1]), int(rs[t, 1]))
        expected = run_strategy("ISwp", left, right)
        for strategy in swaps.STRATEGIES[1:]:
            assert run_strategy(strategy, left, right) == expected


def test_branch_free_classification():
    branch_free = {s for s in swaps.STRATEGIES if swaps.strategy_is_branch_free(s)}
    assert branch_free == {"TCOp", "4Cm", "4CmS", "6Cm", "2CPm", "2CPp"}
    assert not swaps.strategy_is_branch_free("ISwp")
    assert not swaps.strategy_is_branch_free("Tie")
    assert not swaps.strategy_is_branch_free("JXhg")
    with pytest.raises(ValueError):
        swaps.strategy_is_branch_free("XOR")


def test_unknown_strategy_rejected():
    with pytest.raises(ValueError):
        swaps.conditional_swap("XOR", (1, 1), (2, 2))


@pytest.mark.parametrize("strategy", swaps.STRATEGIES)
def test_composition_full_network_sorts(strategy):
    rng = np.random.default_rng(13)
    net = best_network(10)
    fn = swaps.SWAP_FUNCS[strategy]
    for _ in range(100):
        keys = rng.permutation(10).tolist()
        refs = list(range(10))
        before = sorted(zip(keys, refs))
        for c in net.comparators:
            fn(keys, refs, c.low, c.high)
        assert keys == sorted(keys)
        # whole items travelled: the (key, ref) multiset is unchanged
        assert sorted(zip(keys, refs)) == before


def test_instrumentation_counts_swap_calls():
    net = best_network(8)
    keys = list(range(8, 0, -1))
    refs = list(range(8))
    with swaps.count_ops() as counter:
        for c in net.comparators:
            swaps.SWAP_FUNCS["4CmS"](keys, refs, c.low, c.high)
    assert counter.swap_calls == net.size
    assert counter.comparisons == net.size
    # counting is scoped to the context manager
    swaps.SWAP_FUNCS["4CmS"](keys, refs, 0, 1)
    assert counter.swap_calls == net.size
