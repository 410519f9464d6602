"""Statistics: box-plot stats, geometric-mean ranking, speedup table."""

import math
import random

import pytest

from netsort import stats
from netsort.bench import MeasurementRecord
from netsort.errors import ConfigurationError, EmptySample, IncompleteGrid

REL = 1e-12


def close(a, b):
    return math.isclose(a, b, rel_tol=REL, abs_tol=REL)


# ---------------------------------------------------------------------------
# boxplot_stats
# ---------------------------------------------------------------------------

def test_boxplot_fixture():
    s = stats.boxplot_stats([1, 2, 3, 4, 100])
    assert close(s.q1, 2) and close(s.median, 3) and close(s.q3, 4)
    assert close(s.iqr, 2)
    assert close(s.whisker_lo, 1) and close(s.whisker_hi, 4)
    assert s.outliers == (100,)


def test_boxplot_interpolated_quartiles():
    # 8 evenly spaced samples exercise the linear-interpolation rule
    s = stats.boxplot_stats(list(range(1, 9)))
    assert close(s.q1, 2.75) and close(s.median, 4.5) and close(s.q3, 6.25)
    assert close(s.whisker_lo, 1) and close(s.whisker_hi, 8)
    assert s.outliers == ()


def test_boxplot_singleton():
    s = stats.boxplot_stats([5])
    assert (s.q1, s.median, s.q3) == (5, 5, 5)
    assert s.iqr == 0
    assert (s.whisker_lo, s.whisker_hi) == (5, 5)
    assert s.outliers == ()


def test_boxplot_constant_samples():
    s = stats.boxplot_stats([7.5] * 10)
    assert s.iqr == 0
    assert (s.whisker_lo, s.whisker_hi) == (7.5, 7.5)
    assert s.outliers == ()


def test_boxplot_permutation_invariant():
    rng = random.Random(11)
    samples = [rng.uniform(-50, 50) for _ in range(101)] + [1e6, -1e6]
    shuffled = samples[:]
    rng.shuffle(shuffled)
    assert stats.boxplot_stats(samples) == stats.boxplot_stats(shuffled)


def test_boxplot_negative_costs_allowed():
    s = stats.boxplot_stats([-5, -2, 0, 1, 2])
    assert s.whisker_lo == -5
    assert s.outliers == ()


def test_boxplot_empty_raises():
    with pytest.raises(EmptySample):
        stats.boxplot_stats([])


# ---------------------------------------------------------------------------
# rank_by_geomean
# ---------------------------------------------------------------------------

def _two_sorter_means():
    return {"A": {1: 10.0, 2: 20.0}, "B": {1: 20.0, 2: 20.0}}


def test_rank_worked_example():
    table = stats.rank_by_geomean(_two_sorter_means())
    assert table.sizes == (1, 2)
    first, second = table.rows
    assert (first.rank, first.sorter) == (1, "A")
    assert close(first.geomean, 1.0)
    assert (second.rank, second.sorter) == (2, "B")
    assert close(second.geomean, math.sqrt(2))
    assert close(second.slowdowns[1], 2.0)
    assert close(second.slowdowns[2], 1.0)
    assert table.best_by_size == {1: "A", 2: "A"}


def test_rank_single_sorter():
    table = stats.rank_by_geomean({"only": {4: 33.0, 8: 66.0}})
    assert len(table.rows) == 1
    assert close(table.rows[0].geomean, 1.0)
    assert table.rows[0].rank == 1


def test_rank_scale_invariance_per_size():
    rng = random.Random(12)
    means = {f"s{i}": {n: rng.uniform(10, 100) for n in (2, 4, 8)}
             for i in range(5)}
    base = [(r.rank, r.sorter) for r in stats.rank_by_geomean(means).rows]
    scaled = {s: {n: v * (7.5 if n == 4 else 1.0) for n, v in by.items()}
              for s, by in means.items()}
    assert [(r.rank, r.sorter)
            for r in stats.rank_by_geomean(scaled).rows] == base


def test_rank_input_order_independent():
    means = _two_sorter_means()
    reordered = {"B": means["B"], "A": means["A"]}
    a = stats.rank_by_geomean(means)
    b = stats.rank_by_geomean(reordered)
    assert [(r.rank, r.sorter, r.geomean) for r in a.rows] == \
           [(r.rank, r.sorter, r.geomean) for r in b.rows]


def test_rank_incomplete_grid_names_cell():
    means = {"A": {1: 10.0, 2: 20.0}, "B": {1: 20.0}}
    with pytest.raises(IncompleteGrid) as info:
        stats.rank_by_geomean(means)
    assert "(B, 2)" in str(info.value)


def test_rank_nonpositive_best():
    means = {"A": {1: -5.0, 2: 20.0}, "B": {1: 10.0, 2: 40.0}}
    with pytest.raises(ConfigurationError):
        stats.rank_by_geomean(means)
    table = stats.rank_by_geomean(means, skip_nonpositive=True)
    assert table.sizes == (2,)  # size 1 dropped
    assert [r.sorter for r in table.rows] == ["A", "B"]
    all_bad = {"A": {1: -5.0}, "B": {1: 0.0}}
    with pytest.raises(ConfigurationError):
        stats.rank_by_geomean(all_bad, skip_nonpositive=True)


def test_rank_accepts_records():
    records = [
        MeasurementRecord("A", 1, 0, 9.0, "nanos"),
        MeasurementRecord("A", 1, 1, 11.0, "nanos"),
        MeasurementRecord("A", 2, 0, 20.0, "nanos"),
        MeasurementRecord("B", 1, 0, 20.0, "nanos"),
        MeasurementRecord("B", 2, 0, 20.0, "nanos"),
    ]
    table = stats.rank_by_geomean(records)
    assert close(table.rows[0].means[1], 10.0)  # mean of 9 and 11
    assert table.rows[0].sorter == "A"
    assert close(table.rows[1].geomean, math.sqrt(2))


def test_rank_empty():
    with pytest.raises(EmptySample):
        stats.rank_by_geomean({})


# ---------------------------------------------------------------------------
# speedup_table
# ---------------------------------------------------------------------------

def test_speedup_basic():
    means = {"SN Best 4CmS": {8: 50.0}, "IS Def": {8: 100.0}}
    table = stats.speedup_table(means)
    row = table.rows[0]
    assert close(row.speedup, 2.0)
    assert row.network_sorter == "SN Best 4CmS"
    assert row.insertion_sorter == "IS Def"
    assert close(table.average, 2.0)


def test_speedup_equal_costs():
    means = {"SN Best 4CmS": {8: 64.0}, "IS Def": {8: 64.0}}
    assert close(stats.speedup_table(means).rows[0].speedup, 1.0)


def test_speedup_picks_fastest_per_family():
    means = {
        "SN Best 4CmS": {8: 40.0, 16: 90.0},
        "SN BN-L TCOp": {8: 50.0, 16: 80.0},
        "IS Def": {8: 100.0, 16: 200.0},
        "IS POp": {8: 120.0, 16: 160.0},
        "StdSort": {8: 1.0, 16: 1.0},  # ignored: neither SN nor IS
    }
    table = stats.speedup_table(means)
    by_size = {r.array_size: r for r in table.rows}
    assert by_size[8].network_sorter == "SN Best 4CmS"
    assert close(by_size[8].speedup, 100.0 / 40.0)
    assert by_size[16].network_sorter == "SN BN-L TCOp"
    assert by_size[16].insertion_sorter == "IS POp"
    assert close(by_size[16].speedup, 160.0 / 80.0)
    assert close(table.average, (2.5 + 2.0) / 2)


def test_speedup_missing_family():
    with pytest.raises(IncompleteGrid):
        stats.speedup_table({"SN Best 4CmS": {8: 50.0}})
    with pytest.raises(IncompleteGrid):
        stats.speedup_table({
            "SN Best 4CmS": {8: 50.0, 16: 60.0},
            "IS Def": {8: 100.0},  # missing size 16
        })


# ---------------------------------------------------------------------------
# grouping helpers
# ---------------------------------------------------------------------------

def test_group_samples():
    records = [
        MeasurementRecord("A", 8, 0, 1.0, "nanos"),
        MeasurementRecord("A", 8, 1, 2.0, "nanos"),
        MeasurementRecord("B", 8, 0, 3.0, "nanos"),
        MeasurementRecord("A", 16, 0, 4.0, "nanos"),
    ]
    grouped = stats.group_samples(records)
    assert grouped == {8: {"A": [1.0, 2.0], "B": [3.0]}, 16: {"A": [4.0]}}
