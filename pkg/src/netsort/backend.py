"""Compute-lane selection.

The package ships two interchangeable kernel lanes:

  * ``netsort._native``  — compiled extension (hand-written C core plus
    generated unrolled network units), used when importable;
  * ``netsort._pybackend`` — pure Python, always available.

Set ``NETSORT_BACKEND=python`` or ``NETSORT_BACKEND=native`` to force a lane
(the benchmark in ``benchmarks/compare_lanes.py`` and the cross-lane tests
rely on this).  The selected lane is reported in ``LANE``; the cost unit it
measures in is reported in ``TIMER_KIND`` ("cycles" or "nanos").
"""

from __future__ import annotations

import os

from .errors import ConfigurationError

_FORCED = os.environ.get("NETSORT_BACKEND", "").strip().lower()
if _FORCED not in ("", "native", "python"):
    raise ConfigurationError(
        f"NETSORT_BACKEND must be 'native' or 'python', got {_FORCED!r}")

impl = None
if _FORCED != "python":
    try:
        from . import _native as impl  # type: ignore[attr-defined]
    except ImportError:
        impl = None
        if _FORCED == "native":
            raise
if impl is None:
    from . import _pybackend as impl

LANE = impl.LANE
TIMER_KIND = impl.TIMER_KIND
FP_PRIME = impl.FP_PRIME

lcg_next = impl.lcg_next
fill_items = impl.fill_items
fingerprint = impl.fingerprint
check_sorted = impl.check_sorted
run_sorter = impl.run_sorter
run_sorter_many = impl.run_sorter_many
swap_pairs = impl.swap_pairs
classify_block_u64 = impl.classify_block_u64
hybrid_stats = impl.hybrid_stats
measure_one_array_repeat = impl.measure_one_array_repeat
measure_array_in_row = impl.measure_array_in_row
sim_check_count = impl.sim_check_count
sink_value = impl.sink_value
