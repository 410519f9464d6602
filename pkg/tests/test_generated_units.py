"""The committed generated sorter units must match a fresh regeneration."""

import pathlib
import sys

SRC = pathlib.Path(__file__).resolve().parents[1] / "src" / "netsort"
TOOLS = pathlib.Path(__file__).resolve().parents[1] / "tools"
sys.path.insert(0, str(TOOLS))

import gen_sorters  # noqa: E402


def test_python_units_are_fresh():
    for family, module in (("best", "_pynets_best.py"),
                           ("bn-l", "_pynets_bn_l.py"),
                           ("bn-p", "_pynets_bn_p.py"),
                           ("bn-r", "_pynets_bn_r.py")):
        committed = (SRC / module).read_text()
        assert committed == gen_sorters.python_unit(family), (
            f"{module} is stale; run tools/gen_sorters.py")


def test_c_units_cover_all_sizes_and_swaps(tmp_path):
    gen_sorters.write_c_units(tmp_path)
    header = (tmp_path / "netsort_nets.h").read_text()
    for fam in ("best", "bn_l", "bn_p", "bn_r"):
        text = (tmp_path / f"netsort_nets_{fam}.c").read_text()
        assert f"ns_net_table_{fam}" in header
        # one table row per unrolled size, one entry per swap kernel
        for n in range(2, 17):
            assert f"[{n}] = {{" in text
        assert text.count("ns_sort_") >= 15 * 9
