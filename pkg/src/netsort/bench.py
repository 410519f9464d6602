"""Measurement harness: seed derivation, measurement loops, CSV records.

Two loop shapes are provided.  ``one_array_repeat`` times (fill + sort +
check) minus (fill + simulated check) over one repeatedly refilled array;
the subtraction means per-record costs may legitimately go negative for
tiny arrays.  ``array_in_row`` fills one long buffer that exceeds a cache
budget and times a single sweep sorting each contiguous subarray, verified
afterwards against a pre-sorted reference copy.

Costs are expressed per single sort of one array, in the backend's timer
units (cycle counts where the hardware exposes a counter, else
nanoseconds); the unit is recorded with each measurement.
"""

from __future__ import annotations

import csv
import io
import json
import platform
from typing import Iterable, NamedTuple, Union

from . import backend, registry
from .errors import ConfigurationError

LCG_MODULUS = 2147483647  # 2^31 - 1; valid generator states are 1..modulus-1
DEFAULT_CACHE_BYTES = 32 * 2**20
ITEM_BYTES = 16

CSV_HEADER = ("sorter", "array_size", "measure_index", "cost", "timer_kind")

lcg_next = backend.lcg_next
fill_random = backend.fill_items
fingerprint = backend.fingerprint
check_sorted = backend.check_sorted


class MeasurementRecord(NamedTuple):
    sorter: str
    array_size: int
    measure_index: int
    cost: float  # may be negative: it is a difference of two timings
    timer_kind: str


class SeedSequence:
    """Derives one generator seed per measure from a single master seed.

    The master seed may be any unsigned 64-bit value; it is folded into a
    valid generator state and successive seeds are produced by advancing
    the generator itself, so a printed master seed reproduces every
    measure's input stream exactly.
    """

    def __init__(self, master_seed: int):
        if not 0 <= master_seed < 2**64:
            raise ConfigurationError(
                f"master seed must be an unsigned 64-bit value, got {master_seed}")
        self.master_seed = master_seed
        self._state = master_seed % (LCG_MODULUS - 1) + 1

    def next_seed(self) -> int:
        self._state = lcg_next(self._state)
        return self._state


def seed_for_cell(master_seed: int, array_size: int) -> int:
    """Master seed for one (sorter, size) measurement cell.

    Depends only on the master seed and the size, so every sorter measured
    at a given size sees the identical sequence of input arrays — ratios
    between sorters are then paired comparisons, and adding or reordering
    sorters cannot perturb anyone's inputs.
    """
    return (master_seed ^ (array_size * 0x9E3779B97F4A7C15)) % 2**64


def check_seed(seed: int) -> int:
    """Validate a raw generator state (must lie in [1, modulus-1])."""
    if not 1 <= seed <= LCG_MODULUS - 1:
        raise ConfigurationError(
            f"generator seed must be in [1, {LCG_MODULUS - 1}], got {seed}")
    return seed


SeedSource = Union[int, SeedSequence]


def _as_seed_sequence(seed_source: SeedSource) -> SeedSequence:
    if isinstance(seed_source, SeedSequence):
        return seed_source
    return SeedSequence(seed_source)


SorterLike = Union[str, registry.SorterSpec, "tuple[str, registry.SorterSpec]"]


def _resolve(sorter: SorterLike) -> "tuple[str, registry.SorterSpec]":
    if isinstance(sorter, registry.SorterSpec):
        return registry.format_label(sorter), sorter
    if isinstance(sorter, tuple):
        label, spec = sorter
        return label, spec
    spec = registry.parse_label(sorter)
    return registry.format_label(spec), spec


def one_array_repeat(
    sorter: SorterLike,
    array_size: int,
    iterations: int,
    measures: int,
    seed_source: SeedSource,
) -> "list[MeasurementRecord]":
    """Repeated-fill loop; one record per measure.

    Per measure: draw a seed, run one unmeasured warm-up round, time
    `iterations` rounds of (fill, sort, check), reseed, time `iterations`
    rounds of (fill, simulated check), and record the difference divided
    by `iterations`.  A sorted-order or fingerprint mismatch raises
    CorrectnessFailure carrying the offending seed.
    """
    if iterations < 1:
        raise ConfigurationError("iterations must be >= 1")
    if measures < 1:
        raise ConfigurationError("measures must be >= 1")
    label, spec = _resolve(sorter)
    seeds = _as_seed_sequence(seed_source)
    records = []
    for index in range(measures):
        seed = seeds.next_seed()
        t_full, t_overhead = backend.measure_one_array_repeat(
            spec, array_size, iterations, seed)
        cost = (t_full - t_overhead) / iterations
        records.append(MeasurementRecord(
            label, array_size, index, cost, backend.TIMER_KIND))
    return records


def default_number_of_arrays(array_size: int,
                             cache_bytes: int = DEFAULT_CACHE_BYTES) -> int:
    """Smallest count whose total byte size exceeds the cache budget."""
    if array_size < 1:
        raise ConfigurationError("array size must be >= 1")
    return cache_bytes // (array_size * ITEM_BYTES) + 1


def array_in_row(
    sorter: SorterLike,
    array_size: int,
    number_of_arrays: "int | None",
    measures: int,
    seed_source: SeedSource,
    cache_bytes: int = DEFAULT_CACHE_BYTES,
) -> "list[MeasurementRecord]":
    """Contiguous-subarrays loop; one record per measure.

    The buffer of number_of_arrays x array_size items must exceed
    `cache_bytes` so the sweep streams from memory rather than re-sorting
    a cache-resident block.  Costs are per subarray; there is no
    second measurement phase to subtract.
    """
    if measures < 1:
        raise ConfigurationError("measures must be >= 1")
    if array_size < 1:
        raise ConfigurationError("array size must be >= 1")
    if number_of_arrays is None:
        number_of_arrays = default_number_of_arrays(array_size, cache_bytes)
    total_bytes = number_of_arrays * array_size * ITEM_BYTES
    if total_bytes <= cache_bytes:
        raise ConfigurationError(
            f"{number_of_arrays} arrays of {array_size} items occupy "
            f"{total_bytes} bytes, which does not exceed the cache budget "
            f"of {cache_bytes} bytes")
    label, spec = _resolve(sorter)
    seeds = _as_seed_sequence(seed_source)
    records = []
    for index in range(measures):
        seed = seeds.next_seed()
        ticks = backend.measure_array_in_row(
            spec, array_size, number_of_arrays, seed)
        cost = ticks / number_of_arrays
        records.append(MeasurementRecord(
            label, array_size, index, cost, backend.TIMER_KIND))
    return records


# ---------------------------------------------------------------------------
# CSV persistence
# ---------------------------------------------------------------------------

def write_records(path_or_file, records: Iterable[MeasurementRecord]) -> None:
    if hasattr(path_or_file, "write"):
        _write_records_stream(path_or_file, records)
        return
    with open(path_or_file, "w", newline="", encoding="utf-8") as handle:
        _write_records_stream(handle, records)


def _write_records_stream(stream, records) -> None:
    writer = csv.writer(stream)
    writer.writerow(CSV_HEADER)
    for rec in records:
        writer.writerow([rec.sorter, rec.array_size, rec.measure_index,
                         repr(rec.cost), rec.timer_kind])


def read_records(path_or_file) -> "list[MeasurementRecord]":
    if hasattr(path_or_file, "read"):
        return _read_records_stream(path_or_file)
    with open(path_or_file, "r", newline="", encoding="utf-8") as handle:
        return _read_records_stream(handle)


def _read_records_stream(stream) -> "list[MeasurementRecord]":
    reader = csv.reader(stream)
    try:
        header = next(reader)
    except StopIteration:
        raise ConfigurationError("measurement CSV is empty (header required)")
    if tuple(header) != CSV_HEADER:
        raise ConfigurationError(
            f"bad measurement CSV header: {header!r}; "
            f"expected {list(CSV_HEADER)!r}")
    records = []
    for row in reader:
        if not row:
            continue
        if len(row) != 5:
            raise ConfigurationError(f"bad measurement CSV row: {row!r}")
        records.append(MeasurementRecord(
            row[0], int(row[1]), int(row[2]), float(row[3]), row[4]))
    return records


def records_to_csv_text(records: Iterable[MeasurementRecord]) -> str:
    buf = io.StringIO()
    _write_records_stream(buf, records)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# Machine-info sidecar
# ---------------------------------------------------------------------------

def host_description() -> str:
    desc = platform.platform()
    try:
        with open("/proc/cpuinfo", "r", encoding="utf-8") as handle:
            for line in handle:
                if line.lower().startswith("model name"):
                    desc += "; " + line.split(":", 1)[1].strip()
                    break
    except OSError:
        pass
    return desc


def machine_info(cache_bytes: int = DEFAULT_CACHE_BYTES) -> dict:
    return {
        "timer_kind": backend.TIMER_KIND,
        "cache_bytes": cache_bytes,
        "host": host_description(),
        "lane": backend.LANE,
        "python": platform.python_version(),
    }


def write_machine_info(path, cache_bytes: int = DEFAULT_CACHE_BYTES,
                       extra: "dict | None" = None) -> dict:
    info = machine_info(cache_bytes)
    if extra:
        info.update(extra)
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(info, handle, indent=2, sort_keys=True)
        handle.write("\n")
    return info
