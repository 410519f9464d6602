"""Command-line front end: generate, verify, bench, report, sweep."""

from __future__ import annotations

import argparse
import pathlib
import random
import sys
import time
from typing import NamedTuple, Sequence

from . import bench, networks, registry, report, stats, swaps
from .errors import (ConfigurationError, CorrectnessFailure, IncompleteGrid,
                     NetsortError, UnsupportedSize)

EXIT_OK = 0
EXIT_CORRECTNESS = 1
EXIT_CONFIG = 2

LOOP_ONE_ARRAY = "one-array-repeat"
LOOP_IN_ROW = "array-in-row"


class Preset(NamedTuple):
    iterations: int
    measures: int
    sizes: "tuple[int, ...]"


PRESETS = {
    "small-onearray": Preset(100, 500, tuple(range(2, 17))),
    "quicksort": Preset(50, 200, (2**14,)),
    "rss": Preset(50, 200, (256,)),
}

SWEEP_DEFAULT_SORTERS = (
    "SN Best 4CmS,SN BN-L 4CmS,SN BN-P 4CmS,SN BN-R 4CmS,"
    "IS Def,IS POp,IS STL,IS AIF,StdSort"
)


def parse_sizes(text: str) -> "tuple[int, ...]":
    """Size list grammar: comma-separated entries, each `N` or `LO..HI`."""
    sizes: "list[int]" = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            if ".." in part:
                lo_text, hi_text = part.split("..", 1)
                lo, hi = int(lo_text), int(hi_text)
                if lo > hi:
                    raise ValueError
                sizes.extend(range(lo, hi + 1))
            else:
                sizes.append(int(part))
        except ValueError:
            raise ConfigurationError(
                f"bad size entry {part!r}; use N or LO..HI")
    if not sizes:
        raise ConfigurationError("empty size list")
    if any(s < 0 for s in sizes):
        raise ConfigurationError("sizes must be nonnegative")
    return tuple(dict.fromkeys(sizes))


class RunPlan(NamedTuple):
    command: str
    sorters: "tuple[tuple[str, registry.SorterSpec], ...]"
    loop: str
    sizes: "tuple[int, ...]"
    iterations: int
    measures: int
    arrays: "int | None"
    cache_bytes: int
    out: pathlib.Path
    seed: int

    def describe(self) -> str:
        lines = [
            "run plan:",
            f"  command:    {self.command}",
            f"  loop:       {self.loop}",
            f"  sorters:    {', '.join(label for label, _ in self.sorters)}",
            f"  sizes:      {', '.join(map(str, self.sizes))}",
            f"  iterations: {self.iterations}",
            f"  measures:   {self.measures}",
        ]
        if self.loop == LOOP_IN_ROW:
            arrays = "auto" if self.arrays is None else str(self.arrays)
            lines.append(f"  arrays:     {arrays}")
            lines.append(f"  cache:      {self.cache_bytes} bytes")
        lines.append(f"  output:     {self.out}")
        lines.append(f"master seed: {self.seed}")
        return "\n".join(lines)


def _derive_seed() -> int:
    return time.time_ns() % 2**64


# ---------------------------------------------------------------------------
# gen
# ---------------------------------------------------------------------------

def cmd_gen(args) -> int:
    families = args.family.split(",") if args.family else list(
        networks.FAMILY_KEYS)
    sizes = parse_sizes(args.sizes)
    out_dir = pathlib.Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for family in families:
        if family not in networks.FAMILY_KEYS:
            raise ConfigurationError(f"unknown network family: {family!r}")
        for n in sizes:
            net = networks.family_network(family, n)
            text = networks.emit_unrolled_source(net, args.format)
            suffix = "txt" if args.format == "table" else "py"
            path = out_dir / f"{family.replace('-', '_')}_{n:02d}.{suffix}"
            path.write_text(text, encoding="utf-8")
            written.append(path)
    print(f"wrote {len(written)} {args.format} file(s) to {out_dir}")
    for path in written:
        print(f"  {path}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def cmd_verify(args) -> int:
    families = args.family.split(",") if args.family else list(
        networks.FAMILY_KEYS)
    sizes = parse_sizes(args.sizes)
    failures = []

    for family in families:
        if family not in networks.FAMILY_KEYS:
            raise ConfigurationError(f"unknown network family: {family!r}")
        for n in sizes:
            net = networks.family_network(family, n)
            if networks.verify_zero_one(net):
                print(f"zero-one  {family:<5} n={n:<3} "
                      f"size={len(net.comparators):<3} ok")
            else:
                failures.append(f"network {family} n={n} fails zero-one")
                print(f"zero-one  {family:<5} n={n:<3} FAIL")

    if args.trials > 0:
        rng = random.Random(args.seed if args.seed is not None else 0)
        cases = [((1, 2), (10, 20)), ((2, 1), (10, 20)), ((7, 7), (1, 2))]
        cases += [((rng.getrandbits(64), rng.getrandbits(64)),
                   (rng.getrandbits(64), rng.getrandbits(64)))
                  for _ in range(args.trials)]
        bad = set()
        for (ka, kb), (ra, rb) in cases:
            expected = ((ka, ra), (kb, rb)) if ka <= kb else ((kb, rb), (ka, ra))
            for name in swaps.STRATEGIES:
                got = swaps.conditional_swap(name, (ka, ra), (kb, rb))
                if got != expected:
                    bad.add(name)
        for name in swaps.STRATEGIES:
            if name in bad:
                failures.append(f"swap strategy {name} diverges")
                print(f"swap      {name:<5} FAIL")
            else:
                print(f"swap      {name:<5} ok ({len(cases)} cases)")
    else:
        print("swap      skipped (--trials 0)")

    if failures:
        print("verification FAILED:")
        for line in failures:
            print(f"  {line}")
        return EXIT_CORRECTNESS
    print("verification passed")
    return EXIT_OK


# ---------------------------------------------------------------------------
# bench
# ---------------------------------------------------------------------------

def _bench_plan(args, command: str, default_sorters: "str | None" = None) -> RunPlan:
    preset = PRESETS[args.preset] if args.preset else None
    sorter_text = args.sorters or default_sorters
    if not sorter_text:
        raise ConfigurationError("no sorters selected; pass --sorters")
    sorters = tuple(registry.resolve_sorters(sorter_text))

    if args.sizes:
        sizes = parse_sizes(args.sizes)
    elif preset:
        sizes = preset.sizes
    else:
        raise ConfigurationError("no sizes selected; pass --sizes or --preset")
    iterations = args.iterations or (preset.iterations if preset else 100)
    measures = args.measures or (preset.measures if preset else 100)
    seed = args.seed if args.seed is not None else _derive_seed()

    out = pathlib.Path(args.out) if args.out else pathlib.Path(
        f"bench_{args.loop}.csv")
    return RunPlan(command, sorters, args.loop, sizes, iterations, measures,
                   args.arrays, args.cache_bytes, out, seed)


def _run_bench(plan: RunPlan) -> "tuple[list[bench.MeasurementRecord], list[str]]":
    records: "list[bench.MeasurementRecord]" = []
    failures: "list[str]" = []
    for label, spec in plan.sorters:
        for size in plan.sizes:
            seq = bench.SeedSequence(bench.seed_for_cell(plan.seed, size))
            try:
                if plan.loop == LOOP_ONE_ARRAY:
                    rows = bench.one_array_repeat(
                        (label, spec), size, plan.iterations, plan.measures,
                        seq)
                else:
                    rows = bench.array_in_row(
                        (label, spec), size, plan.arrays, plan.measures,
                        seq, cache_bytes=plan.cache_bytes)
            except CorrectnessFailure as exc:
                note = f"{label} at size {size}: {exc}"
                failures.append(note)
                print(f"CORRECTNESS FAILURE: {note}; "
                      f"aborting this sorter's runs")
                break
            records.extend(rows)
            print(f"measured {label:<20} n={size:<6} "
                  f"measures={len(rows)}")
    return records, failures


def cmd_bench(args) -> int:
    plan = _bench_plan(args, "bench")
    print(plan.describe())
    records, failures = _run_bench(plan)
    bench.write_records(plan.out, records)
    sidecar = plan.out.with_suffix(plan.out.suffix + ".machine.json")
    extra = {"correctness_failures": failures, "master_seed": plan.seed}
    bench.write_machine_info(sidecar, plan.cache_bytes, extra)
    print(f"wrote {len(records)} records to {plan.out}")
    print(f"wrote machine info to {sidecar}")
    return EXIT_CORRECTNESS if failures else EXIT_OK


# ---------------------------------------------------------------------------
# report
# ---------------------------------------------------------------------------

def cmd_report(args) -> int:
    records = []
    for path in args.inputs:
        records.extend(bench.read_records(path))
    if not records:
        raise ConfigurationError("input CSVs contain no measurements")

    ranking = stats.rank_by_geomean(records,
                                    skip_nonpositive=args.skip_nonpositive)
    means = stats.group_means(records)
    has_networks = any(label.startswith("SN ") for label in means)
    has_insertion = any(label.startswith("IS ") for label in means)
    speedups = (stats.speedup_table(records)
                if has_networks and has_insertion else None)

    if args.format == "text":
        print(report.ranking_text(ranking))
        if speedups:
            print(report.speedup_text(speedups))
        else:
            print("speedup table skipped: needs at least one SN and one IS "
                  "sorter")
        return EXIT_OK

    out_dir = pathlib.Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    ranking_path = out_dir / "ranking.csv"
    ranking_path.write_text(report.ranking_csv_text(ranking),
                            encoding="utf-8")
    print(f"wrote {ranking_path}")
    if speedups:
        speedup_path = out_dir / "speedup.csv"
        speedup_path.write_text(report.speedup_csv_text(speedups),
                                encoding="utf-8")
        print(f"wrote {speedup_path}")
    else:
        print("speedup table skipped: needs at least one SN and one IS sorter")
    if args.format == "svg":
        for path in report.write_box_plots(out_dir,
                                           stats.group_samples(records)):
            print(f"wrote {path}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# sweep: bench + report in one pass
# ---------------------------------------------------------------------------

def cmd_sweep(args) -> int:
    plan = _bench_plan(args, "sweep", default_sorters=SWEEP_DEFAULT_SORTERS)
    out_dir = pathlib.Path(args.out) if args.out else pathlib.Path("sweep_out")
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = out_dir / "measurements.csv"
    plan = plan._replace(out=csv_path)
    print(plan.describe())

    records, failures = _run_bench(plan)
    bench.write_records(csv_path, records)
    sidecar = out_dir / "machine.json"
    bench.write_machine_info(sidecar, plan.cache_bytes,
                             {"correctness_failures": failures,
                              "master_seed": plan.seed})
    print(f"wrote {len(records)} records to {csv_path}")
    if not records:
        return EXIT_CORRECTNESS if failures else EXIT_OK

    report_args = argparse.Namespace(
        inputs=[csv_path], out=out_dir, format=args.format,
        skip_nonpositive=True)
    status = cmd_report(report_args)
    if failures:
        return EXIT_CORRECTNESS
    return status


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _add_bench_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--sorters", help="comma-separated sorter labels, e.g. "
                     "'SN Best 4CmS,IS Def'")
    sub.add_argument("--sizes", help="array sizes: N, LO..HI, comma-combined")
    sub.add_argument("--loop", choices=[LOOP_ONE_ARRAY, LOOP_IN_ROW],
                     default=LOOP_ONE_ARRAY)
    sub.add_argument("--iterations", type=int,
                     help="sorts per timed phase (one-array-repeat)")
    sub.add_argument("--measures", type=int, help="records per (sorter, size)")
    sub.add_argument("--arrays", type=int,
                     help="subarray count for array-in-row (default: filled "
                     "from --cache-bytes)")
    sub.add_argument("--seed", type=int,
                     help="master seed (default: derived from time, printed)")
    sub.add_argument("--cache-bytes", type=int,
                     default=bench.DEFAULT_CACHE_BYTES)
    sub.add_argument("--out", help="output CSV path")
    sub.add_argument("--preset", choices=sorted(PRESETS))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="netsort",
        description="Sorting-network toolkit: generate and verify networks, "
        "benchmark sorters, and render reports.")
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", help="emit network tables or source")
    gen.add_argument("--family",
                     help="comma-separated families (best,bn-l,bn-p,bn-r); "
                     "default: all")
    gen.add_argument("--sizes", default="2..16")
    gen.add_argument("--format", choices=["table", "source"],
                     default="table")
    gen.add_argument("--out", default="generated")
    gen.set_defaults(func=cmd_gen)

    verify = commands.add_parser(
        "verify", help="zero-one validity and swap-strategy equivalence")
    verify.add_argument("--family", help="default: all families")
    verify.add_argument("--sizes", default="2..16")
    verify.add_argument("--trials", type=int, default=10000,
                        help="random swap-equivalence cases (0 skips)")
    verify.add_argument("--seed", type=int)
    verify.set_defaults(func=cmd_verify)

    bench_cmd = commands.add_parser("bench", help="run measurement loops")
    _add_bench_flags(bench_cmd)
    bench_cmd.set_defaults(func=cmd_bench)

    rep = commands.add_parser("report", help="render tables from bench CSVs")
    rep.add_argument("inputs", nargs="+", help="measurement CSV files")
    rep.add_argument("--out", default="report_out")
    rep.add_argument("--format", choices=["csv", "text", "svg"],
                     default="csv")
    rep.add_argument("--skip-nonpositive", action="store_true",
                     help="drop sizes whose fastest mean cost is <= 0 "
                     "instead of failing")
    rep.set_defaults(func=cmd_report)

    sweep = commands.add_parser(
        "sweep", help="bench a sorter grid, then report into one directory")
    _add_bench_flags(sweep)
    sweep.add_argument("--format", choices=["csv", "text", "svg"],
                       default="csv")
    sweep.set_defaults(func=cmd_sweep)

    return parser


def main(argv: "Sequence[str] | None" = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CorrectnessFailure as exc:
        print(f"correctness failure: {exc}", file=sys.stderr)
        return EXIT_CORRECTNESS
    except (ConfigurationError, IncompleteGrid, UnsupportedSize) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except NetsortError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
