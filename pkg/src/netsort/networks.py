"""Sorting networks: generation, ordering variants, leveling, verification.

A network is an ordered list of comparators over ``n`` channels.  Networks are
provided both as runtime data (for the interpreted executor) and as input to
the build-time emission of unrolled sorter source, see ``emit_unrolled_source``.

Channel indices are 0-based everywhere, including the on-disk table format.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, NamedTuple

import numpy as np

from .errors import TooLargeForExhaustive, UnsupportedSize

# Ordering tags.
BEST_KNOWN = "BestKnown"
BN_LOCALITY = "BN-Locality"
BN_PARALLEL = "BN-Parallel"
BN_RECURSIVE = "BN-Recursive"

# Family keys used by dispatch, file names and the CLI (label is how the
# family appears inside sorter labels, e.g. "SN BN-L 4CmS").
FAMILY_KEYS = ("best", "bn-l", "bn-p", "bn-r")
FAMILY_LABELS = {"best": "Best", "bn-l": "BN-L", "bn-p": "BN-P", "bn-r": "BN-R"}
FAMILY_TAGS = {
    "best": BEST_KNOWN,
    "bn-l": BN_LOCALITY,
    "bn-p": BN_PARALLEL,
    "bn-r": BN_RECURSIVE,
}
LABEL_TO_FAMILY = {v: k for k, v in FAMILY_LABELS.items()}

MIN_CHANNELS = 2
MAX_CHANNELS = 32
MAX_EXHAUSTIVE = 24
MIN_UNROLLED = 2
MAX_UNROLLED = 16

_DATA_DIR = Path(__file__).parent / "data" / "networks"


class Comparator(NamedTuple):
    low: int
    high: int


@dataclass(frozen=True)
class Network:
    n: int
    comparators: tuple[Comparator, ...]
    ordering_tag: str

    def __post_init__(self):
        for c in self.comparators:
            if not (0 <= c.low < c.high < self.n):
                raise ValueError(f"comparator {c} invalid for {self.n} channels")

    @property
    def size(self) -> int:
        return len(self.comparators)


@dataclass(frozen=True)
class LeveledNetwork:
    n: int
    levels: tuple[tuple[Comparator, ...], ...]

    @property
    def depth(self) -> int:
        return len(self.levels)


def _comparators(pairs: Iterable[tuple[int, int]]) -> tuple[Comparator, ...]:
    return tuple(Comparator(int(a), int(b)) for a, b in pairs)


# ---------------------------------------------------------------------------
# Bose-Nelson construction
# ---------------------------------------------------------------------------

def _bn_split(i: int, m: int, out: list[Comparator]) -> None:
    """Sort m channels starting at i: first half, second half, then merge."""
    if m < 2:
        return
    half = m // 2
    _bn_split(i, half, out)
    _bn_split(i + half, m - half, out)
    _bn_merge(i, half, i + half, m - half, out)


def _bn_merge(i: int, x: int, j: int, y: int, out: list[Comparator]) -> None:
    """Merge x sorted channels at i with y sorted channels at j."""
    if x == 1 and y == 1:
        out.append(Comparator(i, j))
    elif x == 1 and y == 2:
        out.append(Comparator(i, j + 1))
        out.append(Comparator(i, j))
    elif x == 2 and y == 1:
        out.append(Comparator(i, j))
        out.append(Comparator(i + 1, j))
    else:
        x_mid = x // 2
        y_mid = y // 2 if x % 2 else (y + 1) // 2
        _bn_merge(i, x_mid, j, y_mid, out)
        _bn_merge(i + x_mid, x - x_mid, j + y_mid, y - y_mid, out)
        _bn_merge(i + x_mid, x - x_mid, j, y_mid, out)


def generate_bose_nelson(n: int) -> Network:
    """Bose-Nelson network in natural recursive order (== locality order)."""
    if n < 0:
        raise ValueError("channel count must be nonnegative")
    out: list[Comparator] = []
    _bn_split(0, n, out)
    return Network(max(n, 0), tuple(out), BN_LOCALITY)


def bose_nelson_merger(n: int) -> tuple[Comparator, ...]:
    """Merger comparators that combine the two sorted halves of an n-sorter.

    Channel indices are relative to the start of the n-channel range; the
    halves are n//2 and n - n//2 channels laid out contiguously.
    """
    out: list[Comparator] = []
    if n >= 2:
        half = n // 2
        _bn_merge(0, half, half, n - half, out)
    return tuple(out)


def bose_nelson_halves(n: int) -> tuple[int, int]:
    return n // 2, n - n // 2


# ---------------------------------------------------------------------------
# Ordering variants and leveling
# ---------------------------------------------------------------------------

def reorder_locality(net: Network) -> Network:
    """Depth-first recursion order: first half, second half, merger.

    The generator already emits this order; the reorder re-derives it from the
    recursion and checks the input carries the same comparator multiset.
    """
    reference = generate_bose_nelson(net.n)
    if sorted(net.comparators) != sorted(reference.comparators):
        raise ValueError("input is not a Bose-Nelson network for this n")
    return Network(net.n, reference.comparators, BN_LOCALITY)


def compute_levels(net: Network) -> LeveledNetwork:
    """Greedy earliest-fit schedule preserving same-channel order.

    A comparator lands in the earliest level strictly after every earlier
    comparator that shares one of its channels; ties keep network order.
    """
    last = [0] * max(net.n, 1)
    levels: list[list[Comparator]] = []
    for c in net.comparators:
        lvl = max(last[c.low], last[c.high]) + 1
        if lvl > len(levels):
            levels.append([])
        levels[lvl - 1].append(c)
        last[c.low] = lvl
        last[c.high] = lvl
    return LeveledNetwork(net.n, tuple(tuple(level) for level in levels))


def depth(net: Network) -> int:
    return compute_levels(net).depth


def reorder_parallelism(net: Network) -> Network:
    """Levels of the greedy schedule concatenated in order."""
    leveled = compute_levels(net)
    flat = tuple(c for level in leveled.levels for c in level)
    return Network(net.n, flat, BN_PARALLEL)


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------

def verify_zero_one(net: Network) -> bool:
    """Exhaustive 0/1-principle check over all 2^n binary inputs.

    Each channel carries one big-integer bitset holding that channel's value
    for every input vector at once; a comparator is two bitwise ops.  A
    network sorts all inputs iff every adjacent channel pair ends up with
    chan[i] <= chan[i+1] on all vectors, i.e. chan[i] & ~chan[i+1] == 0.
    """
    n = net.n
    if n > MAX_EXHAUSTIVE:
        raise TooLargeForExhaustive(f"n={n} exceeds exhaustive limit {MAX_EXHAUSTIVE}")
    if n < 2:
        return True
    total = 1 << n
    patterns = np.arange(total, dtype=np.uint32)
    chans = []
    for i in range(n):
        bits = ((patterns >> np.uint32(i)) & np.uint32(1)).astype(np.uint8)
        packed = np.packbits(bits, bitorder="little").tobytes()
        chans.append(int.from_bytes(packed, "little"))
    for c in net.comparators:
        lo, hi = chans[c.low], chans[c.high]
        chans[c.low] = lo & hi
        chans[c.high] = lo | hi
    full = (1 << total) - 1
    for i in range(n - 1):
        if chans[i] & (chans[i + 1] ^ full):
            return False
    return True


# ---------------------------------------------------------------------------
# Table format and embedded best-known networks
# ---------------------------------------------------------------------------

def format_table(net: Network, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"n={net.n}")
    lines.extend(f"{c.low} {c.high}" for c in net.comparators)
    return "\n".join(lines) + "\n"


def parse_table(text: str, ordering_tag: str = BEST_KNOWN) -> Network:
    n = None
    comps: list[tuple[int, int]] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            if not line.startswith("n="):
                raise ValueError(f"expected 'n=<int>' header, got {line!r}")
            n = int(line[2:])
            continue
        a, b = line.split()
        comps.append((int(a), int(b)))
    if n is None:
        raise ValueError("missing 'n=<int>' header")
    return Network(n, _comparators(comps), ordering_tag)


def load_table(path: Path, ordering_tag: str = BEST_KNOWN) -> Network:
    return parse_table(Path(path).read_text(), ordering_tag)


@functools.lru_cache(maxsize=None)
def best_network(n: int) -> Network:
    """Embedded, verified best-known network for 2..16 channels."""
    if not (MIN_UNROLLED <= n <= MAX_UNROLLED):
        raise UnsupportedSize(f"no embedded best-known network for n={n}")
    path = _DATA_DIR / f"best_{n:02d}.txt"
    return load_table(path, BEST_KNOWN)


def restrict_top_channel(net: Network) -> Network:
    """Drop the top channel and every comparator touching it.

    Sound because the top channel can be pinned to the maximum sentinel: a
    comparator (i, top) then never exchanges, so removing it (and the channel)
    leaves a valid network on n-1 channels.
    """
    top = net.n - 1
    kept = tuple(c for c in net.comparators if c.high != top and c.low != top)
    return Network(net.n - 1, kept, net.ordering_tag)


@functools.lru_cache(maxsize=None)
def family_network(family: str, n: int) -> Network:
    """The network run by the unrolled sorter of (family, n)."""
    if family not in FAMILY_KEYS:
        raise ValueError(f"unknown family {family!r}")
    if not (MIN_UNROLLED <= n <= MAX_UNROLLED):
        raise UnsupportedSize(f"family {family} supports n in 2..16, got {n}")
    if family == "best":
        return best_network(n)
    bn = generate_bose_nelson(n)
    if family == "bn-l":
        return bn
    if family == "bn-p":
        return reorder_parallelism(bn)
    # bn-r executes the locality order through recursive sub-sorter calls
    return Network(bn.n, bn.comparators, BN_RECURSIVE)


# ---------------------------------------------------------------------------
# Source emission
# ---------------------------------------------------------------------------

def sorter_name(family: str, n: int) -> str:
    return f"sort_{family.replace('-', '_')}_{n}"


def _emit_python_flat(net: Network, name: str) -> str:
    lines = [f"def {name}(keys, refs, base, cswap):"]
    if not net.comparators:
        lines.append("    pass")
    for c in net.comparators:
        lines.append(f"    cswap(keys, refs, base + {c.low}, base + {c.high})")
    return "\n".join(lines) + "\n"


def _emit_python_recursive(n: int, family: str) -> str:
    name = sorter_name(family, n)
    lines = [f"def {name}(keys, refs, base, cswap):"]
    if n == 2:
        lines.append("    cswap(keys, refs, base + 0, base + 1)")
        return "\n".join(lines) + "\n"
    first, second = bose_nelson_halves(n)
    if first >= 2:
        lines.append(f"    {sorter_name(family, first)}(keys, refs, base, cswap)")
    if second >= 2:
        lines.append(f"    {sorter_name(family, second)}(keys, refs, base + {first}, cswap)")
    for c in bose_nelson_merger(n):
        lines.append(f"    cswap(keys, refs, base + {c.low}, base + {c.high})")
    return "\n".join(lines) + "\n"


def emit_unrolled_source(net: Network, target: str) -> str:
    """Emit a network either as a data table or as straight-line sorter source.

    ``table``  — the text table format (for the interpreted executor).
    ``source`` — a Python function with one conditional-swap invocation per
                 comparator in network order; the BN-Recursive tag emits a
                 body that calls the two half-sorters and inlines the merger.
    """
    if target == "table":
        return format_table(net)
    if target != "source":
        raise ValueError(f"unknown emission target {target!r}")
    family = {v: k for k, v in FAMILY_TAGS.items()}.get(net.ordering_tag)
    if family is None:
        family = "net"
    if net.ordering_tag == BN_RECURSIVE:
        return _emit_python_recursive(net.n, family)
    return _emit_python_flat(net, sorter_name(family, net.n))


# ---------------------------------------------------------------------------
# Size accounting
# ---------------------------------------------------------------------------

def bose_nelson_size(n: int) -> int:
    """Comparator count of the generated network (frozen-table cross-check)."""
    return generate_bose_nelson(n).size


def size_bound_holds(n: int, c: float = 2.0) -> bool:
    """O(n log^2 n) growth check: size(2n) <= c*size(n) + n*(ceil(log2 n)+1)^2."""
    if n < 2:
        return True
    lhs = bose_nelson_size(2 * n)
    rhs = c * bose_nelson_size(n) + n * (math.ceil(math.log2(n)) + 1) ** 2
    return lhs <= rhs
