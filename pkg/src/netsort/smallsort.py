"""Small-set sorters for 2..16 items.

Four unrolled network families x nine swap strategies, an interpreted
network executor (verification tool), four insertion-sort variants, and a
uniform dispatcher.  All operate in place on structured arrays of
``items.ITEM_DTYPE`` and order by key only; the ref field travels with its
key.
"""

from __future__ import annotations

import numpy as np

from . import backend, registry
from . import networks as nw
from .errors import UnsupportedSize
from .networks import Network
from .swaps import STRATEGIES, SWAP_FUNCS
from . import _pybackend


def sort_network(arr: np.ndarray, n: int, family_key: str,
                 swap_name: str) -> np.ndarray:
    """Sort the first n items with the unrolled (family, n) network."""
    if not nw.MIN_UNROLLED <= n <= nw.MAX_UNROLLED:
        raise UnsupportedSize(
            f"network sorters cover {nw.MIN_UNROLLED}..{nw.MAX_UNROLLED}"
            f" items, got {n}")
    if len(arr) < n:
        raise UnsupportedSize(f"slice holds {len(arr)} items, need {n}")
    spec = registry.spec_network(family_key, swap_name)
    backend.run_sorter(spec, arr, n)
    return arr


def sort_network_interpreted(arr: np.ndarray, net: Network,
                             swap_name: str = "ISwp") -> np.ndarray:
    """Run a network from its comparator table (no unrolled code)."""
    n = net.n
    if len(arr) < n:
        raise UnsupportedSize(f"slice holds {len(arr)} items, need {n}")
    fn = SWAP_FUNCS[swap_name]
    keys = arr["key"][:n].tolist()
    refs = arr["ref"][:n].tolist()
    for c in net.comparators:
        fn(keys, refs, c.low, c.high)
    arr["key"][:n] = keys
    arr["ref"][:n] = refs
    return arr


def insertion_sort(arr: np.ndarray, n: int | None = None,
                   variant: str = "Def",
                   count_comparisons: bool = False) -> "np.ndarray | tuple":
    """Insertion sort (any size).  Optionally report key-comparison count.

    Comparison counting always runs on the instrumented pure-Python lane;
    both lanes are extensionally identical, so the count is a faithful
    witness for either.
    """
    n = len(arr) if n is None else n
    spec = registry.spec_insertion(variant)
    if count_comparisons:
        _pybackend.reset_insertion_comparisons()
        _pybackend.run_sorter(spec, arr, n)
        return arr, _pybackend.insertion_comparisons()
    backend.run_sorter(spec, arr, n)
    return arr


def sort_small(arr: np.ndarray, n: int, sorter_label: str) -> np.ndarray:
    """Dispatch to a small sorter by its label (``SN ...`` or ``IS ...``)."""
    if n <= 1:
        return arr
    spec = registry.parse_label(sorter_label)
    if spec.kind not in (registry.KIND_NETWORK, registry.KIND_INSERTION):
        raise UnsupportedSize(f"not a small sorter: {sorter_label!r}")
    if spec.kind == registry.KIND_NETWORK and n > nw.MAX_UNROLLED:
        raise UnsupportedSize(
            f"network sorters cover at most {nw.MAX_UNROLLED} items, got {n}")
    backend.run_sorter(spec, arr, n)
    return arr


def swap_call_count(family_key: str, n: int, arr: np.ndarray,
                    swap_name: str = "4CmS") -> int:
    """Comparator executions for one run (instrumented pure lane)."""
    from .swaps import count_ops

    spec = registry.spec_network(family_key, swap_name)
    with count_ops() as counter:
        _pybackend.run_sorter(spec, arr, n)
    return counter.swap_calls


__all__ = [
    "sort_network",
    "sort_network_interpreted",
    "insertion_sort",
    "sort_small",
    "swap_call_count",
    "STRATEGIES",
]
