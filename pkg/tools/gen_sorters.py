"""Emit the unrolled network sorter units for both backends.

One compilation unit per ordering family (keeps optimizer behavior stable on
the C side and mirrors that structure on the Python side):

  * Python units  -> src/netsort/_pynets_<family>.py      (committed)
  * C units       -> <out_dir>/netsort_nets_<family>.c    (generated at build)
                     <out_dir>/netsort_nets.h

Run directly to refresh the Python units:  python3 tools/gen_sorters.py
"""

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from netsort import networks as nw
from netsort.swaps import STRATEGIES

SIZES = range(nw.MIN_UNROLLED, nw.MAX_UNROLLED + 1)

# C identifier fragment per strategy (cannot start with a digit).
C_SWAP_IDENT = {
    "ISwp": "iswp",
    "TCOp": "tcop",
    "Tie": "tie",
    "JXhg": "jxhg",
    "4Cm": "cm4",
    "4CmS": "cm4s",
    "6Cm": "cm6",
    "2CPm": "cpm2",
    "2CPp": "cpp2",
}
C_SWAP_MACRO = {s: f"NS_CS_{C_SWAP_IDENT[s].upper()}" for s in STRATEGIES}

C_FAMILY_IDENT = {"best": "best", "bn-l": "bn_l", "bn-p": "bn_p", "bn-r": "bn_r"}


# ---------------------------------------------------------------------------
# Python units
# ---------------------------------------------------------------------------

def python_unit(family: str) -> str:
    label = nw.FAMILY_LABELS[family]
    parts = [
        f'"""Unrolled {label} network sorters for 2..16 items.\n'
        f'\nGenerated by tools/gen_sorters.py -- do not edit by hand.\n"""\n'
    ]
    for n in SIZES:
        net = nw.family_network(family, n)
        parts.append(nw.emit_unrolled_source(net, "source"))
    names = {n: nw.sorter_name(family, n) for n in SIZES}
    entries = ", ".join(f"{n}: {names[n]}" for n in SIZES)
    parts.append(f"SORTERS = {{{entries}}}\n")
    return "\n".join(parts)


def write_python_units(out_dir: Path) -> list[Path]:
    paths = []
    for family in nw.FAMILY_KEYS:
        path = out_dir / f"_pynets_{C_FAMILY_IDENT[family]}.py"
        path.write_text(python_unit(family))
        paths.append(path)
    return paths


# ---------------------------------------------------------------------------
# C units
# ---------------------------------------------------------------------------

def _c_flat_body(family: str, n: int) -> str:
    net = nw.family_network(family, n)
    fam = C_FAMILY_IDENT[family]
    macro = f"NS_NET_{fam.upper()}_{n}"
    lines = [f"#define {macro}(CS, A) \\"]
    body = [f"    CS(A, {c.low}, {c.high})" for c in net.comparators]
    lines.extend(f"{b} \\" for b in body[:-1])
    lines.append(body[-1])
    out = ["\n".join(lines), ""]
    for s in STRATEGIES:
        fn = f"ns_sort_{fam}_{n}_{C_SWAP_IDENT[s]}"
        out.append(f"static void {fn}(ns_item *a) {{ {macro}({C_SWAP_MACRO[s]}, a) }}")
    return "\n".join(out) + "\n"


def _c_recursive_body(n: int) -> str:
    merger = nw.bose_nelson_merger(n)
    macro = f"NS_MERGE_BN_R_{n}"
    lines = [f"#define {macro}(CS, A) \\"]
    body = [f"    CS(A, {c.low}, {c.high})" for c in merger]
    lines.extend(f"{b} \\" for b in body[:-1])
    lines.append(body[-1])
    out = ["\n".join(lines), ""]
    first, second = nw.bose_nelson_halves(n)
    for s in STRATEGIES:
        ident = C_SWAP_IDENT[s]
        fn = f"ns_sort_bn_r_{n}_{ident}"
        calls = []
        if first >= 2:
            calls.append(f"ns_sort_bn_r_{first}_{ident}(a);")
        if second >= 2:
            calls.append(f"ns_sort_bn_r_{second}_{ident}(a + {first});")
        calls.append(f"{macro}({C_SWAP_MACRO[s]}, a)")
        out.append(f"static void {fn}(ns_item *a) {{ {' '.join(calls)} }}")
    return "\n".join(out) + "\n"


def c_unit(family: str) -> str:
    fam = C_FAMILY_IDENT[family]
    parts = [
        f"/* Unrolled {nw.FAMILY_LABELS[family]} network sorters, 2..16 channels.\n"
        f"   Generated by tools/gen_sorters.py -- do not edit. */\n"
        f'#include "netsort_core.h"\n'
    ]
    for n in SIZES:
        if family == "bn-r" and n > 2:
            parts.append(_c_recursive_body(n))
        else:
            parts.append(_c_flat_body(family, n))
    rows = []
    for n in SIZES:
        fns = ", ".join(f"ns_sort_{fam}_{n}_{C_SWAP_IDENT[s]}" for s in STRATEGIES)
        rows.append(f"    [{n}] = {{{fns}}},")
    parts.append(
        f"const ns_net_fn ns_net_table_{fam}[17][9] = {{\n" + "\n".join(rows) + "\n};\n"
    )
    return "\n".join(parts)


NETS_HEADER = """\
/* Generated by tools/gen_sorters.py -- do not edit. */
#ifndef NETSORT_NETS_H
#define NETSORT_NETS_H

#include "netsort_core.h"

extern const ns_net_fn ns_net_table_best[17][9];
extern const ns_net_fn ns_net_table_bn_l[17][9];
extern const ns_net_fn ns_net_table_bn_p[17][9];
extern const ns_net_fn ns_net_table_bn_r[17][9];

#endif
"""


def write_c_units(out_dir: Path) -> list[Path]:
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    for family in nw.FAMILY_KEYS:
        path = out_dir / f"netsort_nets_{C_FAMILY_IDENT[family]}.c"
        path.write_text(c_unit(family))
        paths.append(path)
    header = out_dir / "netsort_nets.h"
    header.write_text(NETS_HEADER)
    paths.append(header)
    return paths


def main():
    pkg = ROOT / "src" / "netsort"
    for p in write_python_units(pkg):
        print(f"wrote {p.relative_to(ROOT)}")


if __name__ == "__main__":
    main()
