"""Command-line front end: plans, presets, commands, exit codes."""

import pytest

from netsort import bench, cli, networks, report, stats
from netsort.bench import MeasurementRecord
from netsort.errors import ConfigurationError, CorrectnessFailure


# ---------------------------------------------------------------------------
# Size grammar and presets
# ---------------------------------------------------------------------------

def test_parse_sizes():
    assert cli.parse_sizes("2..16") == tuple(range(2, 17))
    assert cli.parse_sizes("2,3,8") == (2, 3, 8)
    assert cli.parse_sizes("2..4,10") == (2, 3, 4, 10)
    assert cli.parse_sizes("5,5,5") == (5,)
    assert cli.parse_sizes("16384") == (16384,)


@pytest.mark.parametrize("bad", ["x", "5..3", "", "3..", "-1"])
def test_parse_sizes_rejects(bad):
    with pytest.raises(ConfigurationError):
        cli.parse_sizes(bad)


def test_presets_match_published_parameters():
    assert cli.PRESETS["small-onearray"] == (100, 500, tuple(range(2, 17)))
    assert cli.PRESETS["quicksort"] == (50, 200, (16384,))
    assert cli.PRESETS["rss"] == (50, 200, (256,))


# ---------------------------------------------------------------------------
# gen
# ---------------------------------------------------------------------------

def test_gen_tables(tmp_path, capsys):
    out = tmp_path / "tables"
    status = cli.main(["gen", "--family", "bn-l", "--sizes", "2..16",
                       "--format", "table", "--out", str(out)])
    assert status == 0
    files = sorted(out.glob("*.txt"))
    assert len(files) == 15
    # regeneration is byte-identical
    first = {f.name: f.read_bytes() for f in files}
    cli.main(["gen", "--family", "bn-l", "--sizes", "2..16",
              "--format", "table", "--out", str(out)])
    assert {f.name: f.read_bytes() for f in sorted(out.glob("*.txt"))} == first


def test_gen_best_10_has_29_comparators(tmp_path):
    out = tmp_path / "tables"
    assert cli.main(["gen", "--family", "best", "--sizes", "10",
                     "--out", str(out)]) == 0
    text = (out / "best_10.txt").read_text()
    net = networks.parse_table(text)
    assert len(net.comparators) == 29


def test_gen_source(tmp_path):
    out = tmp_path / "src"
    assert cli.main(["gen", "--family", "best,bn-r", "--sizes", "4,8",
                     "--format", "source", "--out", str(out)]) == 0
    names = {f.name for f in out.glob("*.py")}
    assert names == {"best_04.py", "best_08.py", "bn_r_04.py", "bn_r_08.py"}
    assert "def sort_best_4(" in (out / "best_04.py").read_text()


def test_gen_unknown_family():
    assert cli.main(["gen", "--family", "nope", "--sizes", "4"]) == 2


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def test_verify_passes(capsys):
    status = cli.main(["verify", "--sizes", "2..8", "--trials", "200",
                       "--seed", "3"])
    out = capsys.readouterr().out
    assert status == 0
    assert "verification passed" in out


def test_verify_detects_sabotaged_network(monkeypatch, capsys):
    real = networks.family_network

    def sabotaged(family, n):
        net = real(family, n)
        if family == "bn-p" and n == 6:  # drop one comparator
            return networks.Network(n=net.n,
                                    comparators=net.comparators[:-1],
                                    ordering_tag=net.ordering_tag)
        return net

    monkeypatch.setattr(cli.networks, "family_network", sabotaged)
    status = cli.main(["verify", "--sizes", "5..7", "--trials", "0"])
    out = capsys.readouterr().out
    assert status == 1
    assert "bn-p n=6" in out.replace("  ", " ") or "bn-p" in out
    assert "FAIL" in out


def test_verify_trials_zero_skips_swaps(capsys):
    status = cli.main(["verify", "--sizes", "2..3", "--trials", "0"])
    out = capsys.readouterr().out
    assert status == 0
    assert "swap      skipped" in out


# ---------------------------------------------------------------------------
# bench
# ---------------------------------------------------------------------------

def test_bench_writes_csv_and_sidecar(tmp_path, capsys):
    out = tmp_path / "run.csv"
    status = cli.main([
        "bench", "--sorters", "SN BN-L 4CmS,IS Def", "--sizes", "8",
        "--iterations", "5", "--measures", "3", "--seed", "42",
        "--out", str(out)])
    printed = capsys.readouterr().out
    assert status == 0
    assert "run plan:" in printed
    assert "master seed: 42" in printed
    records = bench.read_records(out)
    assert len(records) == 6
    assert {r.sorter for r in records} == {"SN BN-L 4CmS", "IS Def"}
    sidecar = out.with_suffix(out.suffix + ".machine.json")
    assert sidecar.exists()
    import json
    info = json.loads(sidecar.read_text())
    assert info["master_seed"] == 42
    assert info["correctness_failures"] == []


def test_bench_prints_derived_seed_when_absent(tmp_path, capsys):
    out = tmp_path / "run.csv"
    status = cli.main(["bench", "--sorters", "IS Def", "--sizes", "4",
                       "--iterations", "2", "--measures", "1",
                       "--out", str(out)])
    printed = capsys.readouterr().out
    assert status == 0
    assert "master seed: " in printed


def test_bench_preset_fills_parameters(tmp_path, monkeypatch):
    calls = []

    def fake_oar(sorter, size, iterations, measures, seeds):
        calls.append((size, iterations, measures))
        return [MeasurementRecord(sorter[0], size, 0, 1.0, "nanos")]

    monkeypatch.setattr(cli.bench, "one_array_repeat", fake_oar)
    out = tmp_path / "rss.csv"
    status = cli.main(["bench", "--preset", "rss", "--sorters",
                       "RSS 332 SN Best 4CmS", "--out", str(out)])
    assert status == 0
    assert calls == [(256, 50, 200)]


def test_bench_requires_sizes_or_preset(tmp_path):
    assert cli.main(["bench", "--sorters", "IS Def",
                     "--out", str(tmp_path / "x.csv")]) == 2


def test_bench_bad_label_is_config_error(tmp_path):
    assert cli.main(["bench", "--sorters", "XX Nope", "--sizes", "4",
                     "--out", str(tmp_path / "x.csv")]) == 2


def test_bench_correctness_failure_recorded(tmp_path, monkeypatch, capsys):
    def broken(sorter, size, iterations, measures, seeds):
        raise CorrectnessFailure("unsorted output", seed=99)

    monkeypatch.setattr(cli.bench, "one_array_repeat", broken)
    out = tmp_path / "run.csv"
    status = cli.main(["bench", "--sorters", "IS Def", "--sizes", "4,8",
                       "--iterations", "2", "--measures", "1", "--seed", "5",
                       "--out", str(out)])
    printed = capsys.readouterr().out
    assert status == 1
    assert "CORRECTNESS FAILURE" in printed
    import json
    sidecar = out.with_suffix(out.suffix + ".machine.json")
    notes = json.loads(sidecar.read_text())["correctness_failures"]
    assert len(notes) == 1  # aborted after the first size
    assert "IS Def" in notes[0]


def test_bench_array_in_row_loop(tmp_path):
    out = tmp_path / "air.csv"
    status = cli.main([
        "bench", "--loop", "array-in-row", "--sorters", "IS Def",
        "--sizes", "8", "--arrays", "64", "--measures", "2", "--seed", "1",
        "--cache-bytes", "4096", "--out", str(out)])
    assert status == 0
    records = bench.read_records(out)
    assert len(records) == 2
    assert all(r.cost >= 0 for r in records)


# ---------------------------------------------------------------------------
# report
# ---------------------------------------------------------------------------

def _toy_records(labels=("A", "B")):
    a, b = labels
    rows = []
    for size, mean_a, mean_b in ((1, 10.0, 20.0), (2, 20.0, 20.0)):
        for i, cost in enumerate((mean_a - 1, mean_a + 1)):
            rows.append(MeasurementRecord(a, size, i, cost, "nanos"))
        for i, cost in enumerate((mean_b - 2, mean_b + 2)):
            rows.append(MeasurementRecord(b, size, i, cost, "nanos"))
    return rows


def test_report_ranking_matches_worked_example(tmp_path, capsys):
    csv_in = tmp_path / "in.csv"
    bench.write_records(csv_in, _toy_records())
    out = tmp_path / "rep"
    status = cli.main(["report", str(csv_in), "--out", str(out)])
    printed = capsys.readouterr().out
    assert status == 0
    ranking = (out / "ranking.csv").read_text().splitlines()
    assert ranking[0] == "Rank,Sorter,GeoM,n=1,n=2"
    assert ranking[1] == "1,A,1,10,20"
    assert ranking[2].startswith("2,B,1.41421,")
    assert "speedup table skipped" in printed
    assert not (out / "speedup.csv").exists()


def test_report_speedup_written_for_sn_is(tmp_path):
    csv_in = tmp_path / "in.csv"
    bench.write_records(csv_in, _toy_records(("SN Best 4CmS", "IS Def")))
    out = tmp_path / "rep"
    assert cli.main(["report", str(csv_in), "--out", str(out)]) == 0
    lines = (out / "speedup.csv").read_text().splitlines()
    assert lines[0].startswith("array_size,network_sorter")
    assert lines[1].split(",")[5] == "2"     # 20 / 10 at size 1
    assert lines[-1].startswith("Avg")
    assert lines[-1].endswith("1.5")         # mean of 2.0 and 1.0


def test_report_text_format(tmp_path, capsys):
    csv_in = tmp_path / "in.csv"
    bench.write_records(csv_in, _toy_records(("SN Best 4CmS", "IS Def")))
    status = cli.main(["report", str(csv_in), "--format", "text"])
    printed = capsys.readouterr().out
    assert status == 0
    assert "Rank" in printed and "GeoM" in printed
    assert "*" in printed  # per-size best flagged
    assert "speedup" in printed


def test_report_svg_box_plots(tmp_path):
    csv_in = tmp_path / "in.csv"
    # enough near-identical samples that 500.0 falls past the 1.5-IQR fence
    records = _toy_records() + [
        MeasurementRecord("A", 1, 90 + i, cost, "nanos")
        for i, cost in enumerate((9.2, 10.8, 9.9, 500.0))]
    bench.write_records(csv_in, records)
    out = tmp_path / "rep"
    assert cli.main(["report", str(csv_in), "--format", "svg",
                     "--out", str(out)]) == 0
    svgs = sorted(out.glob("boxplot_size_*.svg"))
    assert len(svgs) == 2  # one per size
    text = svgs[0].read_text()
    assert text.startswith("<svg")
    assert "<rect" in text and "<line" in text
    assert "<circle" in text  # the 500.0 outlier


def test_report_incomplete_grid_exit_code(tmp_path, capsys):
    csv_in = tmp_path / "in.csv"
    rows = _toy_records()[:4]  # sorter A only at size 1, B at size 1
    rows = [r for r in _toy_records() if not (r.sorter == "B"
                                              and r.array_size == 2)]
    bench.write_records(csv_in, rows)
    status = cli.main(["report", str(csv_in), "--out", str(tmp_path / "r")])
    err = capsys.readouterr().err
    assert status == 2
    assert "(B, 2)" in err


def test_report_missing_file(tmp_path):
    assert cli.main(["report", str(tmp_path / "nope.csv")]) == 2


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------

def test_sweep_produces_full_bundle(tmp_path, capsys):
    out = tmp_path / "sweep"
    status = cli.main([
        "sweep", "--sizes", "8,12", "--iterations", "40", "--measures", "6",
        "--seed", "11", "--out", str(out)])
    printed = capsys.readouterr().out
    assert status == 0
    assert "run plan:" in printed and "master seed: 11" in printed
    assert (out / "measurements.csv").exists()
    assert (out / "machine.json").exists()
    assert (out / "ranking.csv").exists()
    assert (out / "speedup.csv").exists()  # default grid has SN and IS
    records = bench.read_records(out / "measurements.csv")
    labels = {r.sorter for r in records}
    assert "SN Best 4CmS" in labels and "IS Def" in labels
    assert "StdSort" in labels


# ---------------------------------------------------------------------------
# report rendering units
# ---------------------------------------------------------------------------

def test_ranking_text_alignment():
    table = stats.rank_by_geomean({"Alpha": {2: 10.0}, "B": {2: 30.0}})
    text = report.ranking_text(table)
    lines = text.splitlines()
    assert lines[0].startswith("Rank")
    assert lines[1].startswith("---")
    assert "10*" in text  # fastest flagged


def test_svg_boxplot_escapes_labels():
    text = report.svg_boxplot(4, {"a<b&c": [1.0, 2.0, 3.0]})
    assert "a&lt;b&amp;c" in text
    assert "a<b" not in text
