"""Rendering of statistics as CSV, aligned text, and SVG box plots."""

from __future__ import annotations

import csv
import io
import pathlib
from typing import Iterable, Sequence

from .stats import BoxStats, RankingTable, SpeedupTable, boxplot_stats

BEST_MARK = "*"  # flags the fastest sorter at a size in text output


# ---------------------------------------------------------------------------
# Ranking table
# ---------------------------------------------------------------------------

def ranking_csv_text(table: RankingTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["Rank", "Sorter", "GeoM"]
                    + [f"n={size}" for size in table.sizes])
    for row in table.rows:
        writer.writerow([row.rank, row.sorter, f"{row.geomean:.6g}"]
                        + [f"{row.means[size]:.6g}" for size in table.sizes])
    return buf.getvalue()


def ranking_text(table: RankingTable) -> str:
    header = ["Rank", "Sorter", "GeoM"] + [f"n={size}" for size in table.sizes]
    body = []
    for row in table.rows:
        cells = [str(row.rank), row.sorter, f"{row.geomean:.4f}"]
        for size in table.sizes:
            mark = BEST_MARK if table.best_by_size[size] == row.sorter else ""
            cells.append(f"{row.means[size]:.4g}{mark}")
        body.append(cells)
    note = f"({BEST_MARK} = fastest at that size)"
    return _aligned([header] + body) + note + "\n"


# ---------------------------------------------------------------------------
# Speedup table
# ---------------------------------------------------------------------------

def speedup_csv_text(table: SpeedupTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["array_size", "network_sorter", "network_mean",
                     "insertion_sorter", "insertion_mean", "speedup"])
    for row in table.rows:
        writer.writerow([row.array_size, row.network_sorter,
                         f"{row.network_mean:.6g}", row.insertion_sorter,
                         f"{row.insertion_mean:.6g}", f"{row.speedup:.6g}"])
    writer.writerow(["Avg", "", "", "", "", f"{table.average:.6g}"])
    return buf.getvalue()


def speedup_text(table: SpeedupTable) -> str:
    header = ["n", "fastest network", "cost", "fastest insertion", "cost",
              "speedup"]
    body = [[str(r.array_size), r.network_sorter, f"{r.network_mean:.4g}",
             r.insertion_sorter, f"{r.insertion_mean:.4g}",
             f"{r.speedup:.3f}"] for r in table.rows]
    body.append(["Avg", "", "", "", "", f"{table.average:.3f}"])
    return _aligned([header] + body)


def _aligned(rows: Sequence[Sequence[str]]) -> str:
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
             for row in rows]
    lines.insert(1, "-" * len(lines[0]))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# SVG box plots
# ---------------------------------------------------------------------------

_PLOT = {
    "width": 840, "height": 480,
    "margin_left": 80, "margin_right": 20,
    "margin_top": 40, "margin_bottom": 90,
    "box_fill": "#9ecae1", "box_stroke": "#3182bd",
    "median_stroke": "#08306b", "outlier_fill": "#e34a33",
    "axis_stroke": "#222222",
}


def svg_boxplot(array_size: int,
                samples_by_sorter: "dict[str, Sequence[float]]") -> str:
    """One figure: a vertical box per sorter, whiskers, outlier dots, axes."""
    if not samples_by_sorter:
        raise ValueError("no samples to plot")
    p = _PLOT
    stats = {label: boxplot_stats(vals)
             for label, vals in samples_by_sorter.items()}
    lo = min(min((s.whisker_lo,) + s.outliers) for s in stats.values())
    hi = max(max((s.whisker_hi,) + s.outliers) for s in stats.values())
    if hi == lo:
        hi, lo = hi + 1.0, lo - 1.0
    span = hi - lo
    lo -= 0.05 * span
    hi += 0.05 * span

    plot_w = p["width"] - p["margin_left"] - p["margin_right"]
    plot_h = p["height"] - p["margin_top"] - p["margin_bottom"]
    x_base = p["margin_left"]
    y_base = p["margin_top"]

    def y(value: float) -> float:
        return y_base + (hi - value) / (hi - lo) * plot_h

    labels = list(stats)
    slot = plot_w / len(labels)
    box_w = min(60.0, slot * 0.5)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{p["width"]}" '
        f'height="{p["height"]}" viewBox="0 0 {p["width"]} {p["height"]}">',
        f'<rect width="{p["width"]}" height="{p["height"]}" fill="white"/>',
        f'<text x="{p["width"] / 2:.1f}" y="24" text-anchor="middle" '
        f'font-family="sans-serif" font-size="16">'
        f'cost per sort, array size {array_size}</text>',
    ]

    # axes
    ax = p["axis_stroke"]
    out.append(f'<line x1="{x_base}" y1="{y_base}" x2="{x_base}" '
               f'y2="{y_base + plot_h}" stroke="{ax}" stroke-width="1.5"/>')
    out.append(f'<line x1="{x_base}" y1="{y_base + plot_h}" '
               f'x2="{x_base + plot_w}" y2="{y_base + plot_h}" '
               f'stroke="{ax}" stroke-width="1.5"/>')
    for i in range(5):
        value = lo + (hi - lo) * i / 4
        ty = y(value)
        out.append(f'<line x1="{x_base - 5}" y1="{ty:.1f}" x2="{x_base}" '
                   f'y2="{ty:.1f}" stroke="{ax}"/>')
        out.append(f'<text x="{x_base - 9}" y="{ty + 4:.1f}" '
                   f'text-anchor="end" font-family="sans-serif" '
                   f'font-size="11">{value:.4g}</text>')

    for i, label in enumerate(labels):
        s = stats[label]
        cx = x_base + slot * (i + 0.5)
        left = cx - box_w / 2
        # whiskers with caps
        for tip, edge in ((s.whisker_lo, s.q1), (s.whisker_hi, s.q3)):
            out.append(f'<line x1="{cx:.1f}" y1="{y(edge):.1f}" '
                       f'x2="{cx:.1f}" y2="{y(tip):.1f}" stroke="{ax}"/>')
            out.append(f'<line x1="{cx - box_w / 4:.1f}" y1="{y(tip):.1f}" '
                       f'x2="{cx + box_w / 4:.1f}" y2="{y(tip):.1f}" '
                       f'stroke="{ax}"/>')
        # box and median
        out.append(f'<rect x="{left:.1f}" y="{y(s.q3):.1f}" '
                   f'width="{box_w:.1f}" '
                   f'height="{max(y(s.q1) - y(s.q3), 0.5):.1f}" '
                   f'fill="{p["box_fill"]}" stroke="{p["box_stroke"]}"/>')
        out.append(f'<line x1="{left:.1f}" y1="{y(s.median):.1f}" '
                   f'x2="{left + box_w:.1f}" y2="{y(s.median):.1f}" '
                   f'stroke="{p["median_stroke"]}" stroke-width="2"/>')
        for value in s.outliers:
            out.append(f'<circle cx="{cx:.1f}" cy="{y(value):.1f}" r="2.5" '
                       f'fill="{p["outlier_fill"]}"/>')
        out.append(f'<text x="{cx:.1f}" '
                   f'y="{y_base + plot_h + 16:.1f}" text-anchor="end" '
                   f'font-family="sans-serif" font-size="11" '
                   f'transform="rotate(-35 {cx:.1f} '
                   f'{y_base + plot_h + 16:.1f})">{_esc(label)}</text>')

    out.append("</svg>")
    return "\n".join(out) + "\n"


def _esc(text: str) -> str:
    return (text.replace("&", "&amp;").replace("<", "&lt;")
            .replace(">", "&gt;"))


def write_box_plots(out_dir,
                    samples_by_size: "dict[int, dict[str, list[float]]]",
                    prefix: str = "boxplot") -> "list[pathlib.Path]":
    out_dir = pathlib.Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    for size in sorted(samples_by_size):
        path = out_dir / f"{prefix}_size_{size:05d}.svg"
        path.write_text(svg_boxplot(size, samples_by_size[size]),
                        encoding="utf-8")
        paths.append(path)
    return paths
