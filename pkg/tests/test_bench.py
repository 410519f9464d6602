"""Measurement harness: seeds, loops, CSV records, machine info."""

import io
import json

import numpy as np
import pytest

from netsort import backend, bench
from netsort import _pybackend as pure
from netsort.errors import ConfigurationError, CorrectnessFailure
from netsort.items import ITEM_DTYPE, items_from_pairs

LCG_M = 2147483647


# ---------------------------------------------------------------------------
# Generator stream
# ---------------------------------------------------------------------------

def test_lcg_golden_first_steps():
    assert bench.lcg_next(1) == 48271
    assert bench.lcg_next(48271) == 182605794


def test_lcg_golden_10000th():
    state = 1
    for _ in range(10000):
        state = bench.lcg_next(state)
    # closed form for a multiplicative congruential generator
    assert state == pow(48271, 10000, LCG_M)
    assert state == 399268537  # frozen


def test_lcg_stays_in_range():
    state = 12345
    for _ in range(1000):
        state = bench.lcg_next(state)
        assert 1 <= state <= LCG_M - 1


def test_check_seed_bounds():
    assert bench.check_seed(1) == 1
    assert bench.check_seed(LCG_M - 1) == LCG_M - 1
    for bad in (0, LCG_M, -3):
        with pytest.raises(ConfigurationError):
            bench.check_seed(bad)


def test_seed_sequence_deterministic():
    a = bench.SeedSequence(987654321)
    b = bench.SeedSequence(987654321)
    seeds = [a.next_seed() for _ in range(50)]
    assert seeds == [b.next_seed() for _ in range(50)]
    assert all(1 <= s <= LCG_M - 1 for s in seeds)


def test_seed_sequence_folds_any_u64():
    assert bench.SeedSequence(0)._state == 1
    assert bench.SeedSequence(2**64 - 1)._state >= 1
    with pytest.raises(ConfigurationError):
        bench.SeedSequence(-1)
    with pytest.raises(ConfigurationError):
        bench.SeedSequence(2**64)


def test_seed_for_cell_pairs_inputs_by_size():
    a = bench.seed_for_cell(42, 8)
    assert a == bench.seed_for_cell(42, 8)
    assert a != bench.seed_for_cell(42, 9)
    assert a != bench.seed_for_cell(43, 8)
    assert 0 <= a < 2**64


# ---------------------------------------------------------------------------
# Fill and fingerprint re-exports
# ---------------------------------------------------------------------------

def test_fill_random_deterministic():
    a = np.empty(64, dtype=ITEM_DTYPE)
    b = np.empty(64, dtype=ITEM_DTYPE)
    sa = bench.fill_random(a, 77)
    sb = bench.fill_random(b, 77)
    assert sa == sb
    assert np.array_equal(a, b)
    bench.fill_random(b, 78)
    assert not np.array_equal(a, b)


def test_fingerprint_small_prime_examples():
    a = items_from_pairs([(3, 0), (5, 0)])
    b = items_from_pairs([(5, 0), (3, 0)])
    c = items_from_pairs([(3, 0), (4, 0)])
    assert bench.fingerprint(a, z=1, p=7) == (1, 1)
    assert bench.fingerprint(b, z=1, p=7) == (1, 1)
    assert bench.fingerprint(c, z=1, p=7) == (6, 1)


def test_fingerprint_permutation_invariance_and_mutation():
    rng = np.random.default_rng(5)
    keys = rng.integers(0, 2**63, size=40, dtype=np.uint64)
    arr = items_from_pairs([(int(k), 0) for k in keys])
    perm = arr[rng.permutation(40)].copy()
    assert bench.fingerprint(arr) == bench.fingerprint(perm)
    v, z = bench.fingerprint(arr)
    assert v != 0
    mutated = arr.copy()
    mutated["key"][7] += 1
    assert bench.fingerprint(mutated, z=z) != (v, z)


def test_check_sorted_reexport():
    assert bench.check_sorted(items_from_pairs([(1, 0), (1, 1), (2, 0)]))
    assert not bench.check_sorted(items_from_pairs([(2, 0), (1, 0)]))


# ---------------------------------------------------------------------------
# one_array_repeat
# ---------------------------------------------------------------------------

def test_one_array_repeat_records():
    records = bench.one_array_repeat("SN Best 4CmS", 8, iterations=10,
                                     measures=7, seed_source=4242)
    assert len(records) == 7
    for i, rec in enumerate(records):
        assert rec.sorter == "SN Best 4CmS"
        assert rec.array_size == 8
        assert rec.measure_index == i
        assert isinstance(rec.cost, float)  # sign unconstrained by contract
        assert rec.timer_kind == backend.TIMER_KIND


def test_one_array_repeat_accepts_spec_and_pair():
    from netsort import registry
    spec = registry.spec_insertion("Def")
    records = bench.one_array_repeat(spec, 4, 2, 2, 1)
    assert records[0].sorter == "IS Def"
    records = bench.one_array_repeat(("custom name", spec), 4, 2, 2, 1)
    assert records[0].sorter == "custom name"


def test_one_array_repeat_validation():
    with pytest.raises(ConfigurationError):
        bench.one_array_repeat("IS Def", 8, 0, 5, 1)
    with pytest.raises(ConfigurationError):
        bench.one_array_repeat("IS Def", 8, 5, 0, 1)


def test_one_array_repeat_broken_sorter_aborts(monkeypatch):
    # an identity "sorter" must be caught by the sorted-order check
    monkeypatch.setattr(pure, "_run_spec_lists", lambda *args: None)
    from netsort import registry
    with pytest.raises(CorrectnessFailure) as info:
        pure.measure_one_array_repeat(registry.spec_insertion("Def"),
                                      8, 3, 555)
    assert info.value.seed == 555


def test_sim_check_counter_advances():
    before = backend.sim_check_count()
    bench.one_array_repeat("IS Def", 8, iterations=4, measures=3,
                           seed_source=9)
    assert backend.sim_check_count() == before + 12


# ---------------------------------------------------------------------------
# array_in_row
# ---------------------------------------------------------------------------

def test_array_in_row_cache_precondition():
    with pytest.raises(ConfigurationError):
        bench.array_in_row("IS Def", 8, 10, 1, 1, cache_bytes=4096)
    # 10 arrays x 8 items x 16 bytes = 1280 > 1024
    records = bench.array_in_row("IS Def", 8, 10, 2, 1, cache_bytes=1024)
    assert len(records) == 2
    assert all(r.cost >= 0 for r in records)  # single phase, no subtraction


def test_array_in_row_default_count():
    assert bench.default_number_of_arrays(8, 1024) == 9
    assert bench.default_number_of_arrays(256, bench.DEFAULT_CACHE_BYTES) == \
        bench.DEFAULT_CACHE_BYTES // (256 * 16) + 1
    records = bench.array_in_row("SN Best 4CmS", 8, None, 1, 7,
                                 cache_bytes=2048)
    assert len(records) == 1
    assert records[0].array_size == 8


def test_array_in_row_sorts_many_subarrays():
    # the backend verifies every subarray against a pre-sorted reference;
    # absence of CorrectnessFailure is the assertion
    for label in ("IS Def", "SN Best 4CmS", "RSS 332 SN Best 4CmS"):
        size = 256 if label.startswith("RSS") else 8
        bench.array_in_row(label, size, 2000 if size == 8 else 80, 1, 3,
                           cache_bytes=100_000)


def test_array_in_row_broken_sorter_aborts(monkeypatch):
    monkeypatch.setattr(pure, "_run_spec_lists", lambda *args: None)
    from netsort import registry
    with pytest.raises(CorrectnessFailure) as info:
        pure.measure_array_in_row(registry.spec_insertion("Def"), 8, 64, 777)
    assert info.value.seed == 777


# ---------------------------------------------------------------------------
# CSV persistence
# ---------------------------------------------------------------------------

def _sample_records():
    return [
        bench.MeasurementRecord("SN Best 4CmS", 8, 0, 123.5, "cycles"),
        bench.MeasurementRecord("SN Best 4CmS", 8, 1, -4.25, "cycles"),
        bench.MeasurementRecord("IS Def", 16, 0, 1e-3, "nanos"),
    ]


def test_csv_roundtrip_stringio():
    text = bench.records_to_csv_text(_sample_records())
    lines = text.strip().split("\r\n" if "\r\n" in text else "\n")
    assert lines[0] == "sorter,array_size,measure_index,cost,timer_kind"
    back = bench.read_records(io.StringIO(text))
    assert back == _sample_records()  # negative costs preserved exactly


def test_csv_roundtrip_file(tmp_path):
    path = tmp_path / "out.csv"
    bench.write_records(path, _sample_records())
    assert bench.read_records(path) == _sample_records()


def test_csv_header_required(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("a,b,c\n1,2,3\n")
    with pytest.raises(ConfigurationError):
        bench.read_records(bad)
    empty = tmp_path / "empty.csv"
    empty.write_text("")
    with pytest.raises(ConfigurationError):
        bench.read_records(empty)


# ---------------------------------------------------------------------------
# Machine info
# ---------------------------------------------------------------------------

def test_machine_info_sidecar(tmp_path):
    path = tmp_path / "machine.json"
    info = bench.write_machine_info(path, cache_bytes=12345,
                                    extra={"note": "test"})
    loaded = json.loads(path.read_text())
    assert loaded == info
    assert loaded["cache_bytes"] == 12345
    assert loaded["timer_kind"] in ("cycles", "nanos")
    assert loaded["note"] == "test"
    assert isinstance(loaded["host"], str) and loaded["host"]
