"""Statistics over measurement records: box plots, rankings, speedups."""

from __future__ import annotations

import math
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .bench import MeasurementRecord
from .errors import ConfigurationError, EmptySample, IncompleteGrid


class BoxStats(NamedTuple):
    q1: float
    median: float
    q3: float
    iqr: float
    whisker_lo: float
    whisker_hi: float
    outliers: "tuple[float, ...]"


def boxplot_stats(samples: Sequence[float]) -> BoxStats:
    """Quartiles by linear interpolation; whiskers at the extreme samples
    strictly inside the 1.5-IQR fences; everything beyond the whiskers is
    an outlier.  With no sample inside a fence (e.g. constant data) the
    whisker collapses onto the quartile itself.
    """
    values = [float(v) for v in samples]
    if not values:
        raise EmptySample("boxplot_stats requires at least one sample")
    q1, median, q3 = (float(q) for q in
                      np.percentile(values, [25, 50, 75], method="linear"))
    iqr = q3 - q1
    fence_lo = q1 - 1.5 * iqr
    fence_hi = q3 + 1.5 * iqr
    inside_lo = [v for v in values if v > fence_lo]
    inside_hi = [v for v in values if v < fence_hi]
    whisker_lo = min(inside_lo) if inside_lo else q1
    whisker_hi = max(inside_hi) if inside_hi else q3
    outliers = tuple(sorted(v for v in values
                            if v < whisker_lo or v > whisker_hi))
    return BoxStats(q1, median, q3, iqr, whisker_lo, whisker_hi, outliers)


# ---------------------------------------------------------------------------
# Grouping
# ---------------------------------------------------------------------------

MeansGrid = "dict[str, dict[int, float]]"


def group_means(records: Iterable[MeasurementRecord]) -> MeansGrid:
    """Mean cost per (sorter, size); insertion order of labels preserved."""
    sums: "dict[str, dict[int, list[float]]]" = {}
    for rec in records:
        cell = sums.setdefault(rec.sorter, {}).setdefault(rec.array_size, [])
        cell.append(rec.cost)
    return {sorter: {size: sum(vals) / len(vals)
                     for size, vals in by_size.items()}
            for sorter, by_size in sums.items()}


def group_samples(records: Iterable[MeasurementRecord]
                  ) -> "dict[int, dict[str, list[float]]]":
    """Raw cost samples keyed by size then sorter (box-plot input)."""
    out: "dict[int, dict[str, list[float]]]" = {}
    for rec in records:
        out.setdefault(rec.array_size, {}).setdefault(rec.sorter, []).append(
            rec.cost)
    return out


def _as_means(results) -> MeansGrid:
    if isinstance(results, dict):
        return {sorter: dict(by_size) for sorter, by_size in results.items()}
    return group_means(results)


def _grid_sizes(means: MeansGrid) -> "tuple[int, ...]":
    sizes: "set[int]" = set()
    for by_size in means.values():
        sizes.update(by_size)
    return tuple(sorted(sizes))


def _require_complete(means: MeansGrid, sizes: Sequence[int]) -> None:
    missing = [(sorter, size)
               for sorter in means
               for size in sizes
               if size not in means[sorter]]
    if missing:
        cells = ", ".join(f"({sorter}, {size})" for sorter, size in missing)
        raise IncompleteGrid(f"missing measurement cells: {cells}")


# ---------------------------------------------------------------------------
# Ranking by geometric mean of relative slowdowns
# ---------------------------------------------------------------------------

class RankingRow(NamedTuple):
    rank: int
    sorter: str
    geomean: float
    means: "dict[int, float]"      # size -> mean cost
    slowdowns: "dict[int, float]"  # size -> mean / fastest mean at that size


class RankingTable(NamedTuple):
    sizes: "tuple[int, ...]"
    rows: "tuple[RankingRow, ...]"
    best_by_size: "dict[int, str]"  # size -> fastest sorter (flagged in output)


def rank_by_geomean(results, skip_nonpositive: bool = False) -> RankingTable:
    """Rank sorters by the geometric mean, across sizes, of their slowdown
    relative to the fastest sorter at each size.

    Relative slowdowns are ratios, so multiplying every cost at one size
    by a constant cannot change any rank.  Sizes whose fastest mean is not
    positive make ratios meaningless; they raise unless
    ``skip_nonpositive`` drops them from the geometric mean.
    """
    means = _as_means(results)
    if not means:
        raise EmptySample("no measurements to rank")
    sizes = _grid_sizes(means)
    _require_complete(means, sizes)

    best_by_size: "dict[int, str]" = {}
    usable: "list[int]" = []
    for size in sizes:
        best_sorter = min(means, key=lambda s: means[s][size])
        best = means[best_sorter][size]
        if best <= 0:
            if not skip_nonpositive:
                raise ConfigurationError(
                    f"fastest mean cost at size {size} is {best}, so relative "
                    "slowdowns are undefined; re-measure with more iterations "
                    "or pass skip_nonpositive to drop the size")
            continue
        best_by_size[size] = best_sorter
        usable.append(size)
    if not usable:
        raise ConfigurationError(
            "no size has a positive fastest mean; nothing to rank")

    scored = []
    for sorter, by_size in means.items():
        slowdowns = {size: by_size[size] / means[best_by_size[size]][size]
                     for size in usable}
        geomean = math.exp(
            sum(math.log(v) for v in slowdowns.values()) / len(usable))
        scored.append((geomean, sorter, by_size, slowdowns))
    scored.sort(key=lambda t: (t[0], t[1]))
    rows = tuple(
        RankingRow(rank, sorter, geomean, dict(by_size), slowdowns)
        for rank, (geomean, sorter, by_size, slowdowns)
        in enumerate(scored, start=1))
    return RankingTable(tuple(usable), rows, best_by_size)


# ---------------------------------------------------------------------------
# Network-vs-insertion speedup table
# ---------------------------------------------------------------------------

class SpeedupRow(NamedTuple):
    array_size: int
    network_sorter: str
    network_mean: float
    insertion_sorter: str
    insertion_mean: float
    speedup: float


class SpeedupTable(NamedTuple):
    rows: "tuple[SpeedupRow, ...]"
    average: float  # arithmetic mean of the per-size speedups


def speedup_table(results) -> SpeedupTable:
    """Per size: fastest insertion-sort mean over fastest network mean."""
    means = _as_means(results)
    if not means:
        raise EmptySample("no measurements to compare")
    sizes = _grid_sizes(means)
    networks = {s: m for s, m in means.items() if s.startswith("SN ")}
    insertions = {s: m for s, m in means.items() if s.startswith("IS ")}
    rows = []
    for size in sizes:
        nets = [(m[size], s) for s, m in networks.items() if size in m]
        inss = [(m[size], s) for s, m in insertions.items() if size in m]
        if not nets or not inss:
            raise IncompleteGrid(
                f"size {size} needs at least one network sorter and one "
                "insertion sorter")
        net_mean, net_sorter = min(nets)
        ins_mean, ins_sorter = min(inss)
        rows.append(SpeedupRow(size, net_sorter, net_mean,
                               ins_sorter, ins_mean, ins_mean / net_mean))
    average = sum(r.speedup for r in rows) / len(rows)
    return SpeedupTable(tuple(rows), average)
