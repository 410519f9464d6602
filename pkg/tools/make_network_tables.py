"""Build the embedded best-known network tables under src/netsort/data/networks.

Table policy:
  n in 2..8  — the generated Bose-Nelson networks (best-known sizes and depths
               for these sizes match the construction, so the generated lists
               serve as the embedded tables).
  n = 10     — classic 29-comparator network (depth 9), transcribed below.
  n = 16     — Green's classic 60-comparator network, transcribed below.
  n = 9      — n=10 table restricted by dropping the top channel.
  n = 11..15 — n=16 table restricted the same way, iteratively.

Channel restriction is sound (pin the dropped top channel to +inf); every
produced table is exhaustively zero-one verified before being written.
"""

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from netsort import networks as nw

# 29-comparator, depth-9 network on 10 channels (1-based pairs, level by level).
BEST10_1BASED = [
    (5, 10), (4, 9), (3, 8), (2, 7), (1, 6),
    (2, 5), (7, 10), (1, 4), (6, 9),
    (1, 3), (4, 7), (8, 10),
    (1, 2), (3, 5), (6, 8), (9, 10),
    (2, 3), (5, 7), (8, 9), (4, 6),
    (3, 6), (7, 9), (2, 4), (5, 8),
    (3, 4), (7, 8),
    (4, 5), (6, 7),
    (5, 6),
]

# Green's 60-comparator network on 16 channels (1-based pairs, level by level).
BEST16_1BASED = [
    (1, 2), (3, 4), (5, 6), (7, 8), (9, 10), (11, 12), (13, 14), (15, 16),
    (1, 3), (5, 7), (9, 11), (13, 15), (2, 4), (6, 8), (10, 12), (14, 16),
    (1, 5), (9, 13), (2, 6), (10, 14), (3, 7), (11, 15), (4, 8), (12, 16),
    (1, 9), (2, 10), (3, 11), (4, 12), (5, 13), (6, 14), (7, 15), (8, 16),
    (6, 11), (7, 10), (4, 13), (14, 15), (8, 12), (2, 3), (5, 9),
    (2, 5), (8, 14), (3, 9), (12, 15),
    (3, 5), (6, 7), (10, 11), (12, 14), (4, 9), (8, 13),
    (7, 9), (11, 13), (4, 6), (8, 10),
    (4, 5), (6, 7), (8, 9), (10, 11), (12, 13),
    (7, 8), (9, 10),
]


def from_1based(n, pairs, tag=nw.BEST_KNOWN):
    return nw.Network(n, tuple(nw.Comparator(a - 1, b - 1) for a, b in pairs), tag)


def build_tables():
    tables = {}
    for n in range(2, 9):
        bn = nw.generate_bose_nelson(n)
        tables[n] = (
            nw.Network(n, bn.comparators, nw.BEST_KNOWN),
            f"best-known {n}-channel table: generated construction "
            f"(best sizes/depths coincide at this size)",
        )
    best10 = from_1based(10, BEST10_1BASED)
    tables[10] = (best10, "classic 29-comparator 10-channel network, depth 9")
    tables[9] = (
        nw.restrict_top_channel(best10),
        "derived from the 10-channel table by top-channel restriction",
    )
    best16 = from_1based(16, BEST16_1BASED)
    tables[16] = (best16, "Green's classic 60-comparator 16-channel network")
    cur = best16
    for n in range(15, 10, -1):
        cur = nw.restrict_top_channel(cur)
        tables[n] = (
            cur,
            f"derived from the 16-channel table by top-channel restriction (x{16 - n})",
        )
    return tables


def main():
    out_dir = ROOT / "src" / "netsort" / "data" / "networks"
    out_dir.mkdir(parents=True, exist_ok=True)
    for n in sorted(build_tables()):
        net, provenance = build_tables()[n]
        assert nw.verify_zero_one(net), f"n={n} table fails zero-one verification"
        leveled = nw.compute_levels(net)
        text = nw.format_table(
            net,
            comments=[provenance, f"size={net.size} depth={leveled.depth}"],
        )
        path = out_dir / f"best_{n:02d}.txt"
        path.write_text(text)
        print(f"wrote {path.name}: size={net.size} depth={leveled.depth}")


if __name__ == "__main__":
    main()
