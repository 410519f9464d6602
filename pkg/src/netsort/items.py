"""The item record sorted throughout the package.

An item is a 64-bit unsigned key plus a 64-bit unsigned reference payload that
must travel with its key through every sort.  Arrays of items are numpy
structured arrays with the packed ``ITEM_DTYPE`` layout, which both the
compiled and the pure backend operate on in place.
"""

import numpy as np

KEY_BITS = 64
ITEM_BYTES = 16

ITEM_DTYPE = np.dtype([("key", "<u8"), ("ref", "<u8")], align=False)


def empty_items(n: int) -> np.ndarray:
    return np.zeros(n, dtype=ITEM_DTYPE)


def items_from_pairs(pairs) -> np.ndarray:
    """Build an item array from an iterable of (key, ref) tuples."""
    pairs = list(pairs)
    arr = empty_items(len(pairs))
    for i, (k, r) in enumerate(pairs):
        arr[i] = (k, r)
    return arr


def items_from_keys(keys) -> np.ndarray:
    """Item array with refs 0..n-1, handy for tracking payload transport."""
    keys = list(keys)
    arr = empty_items(len(keys))
    arr["key"] = np.asarray(keys, dtype=np.uint64)
    arr["ref"] = np.arange(len(keys), dtype=np.uint64)
    return arr


def as_pairs(items: np.ndarray):
    return [(int(it["key"]), int(it["ref"])) for it in items]


def random_items(rng: np.random.Generator, n: int, key_bits: int = 64) -> np.ndarray:
    """Test helper: uniformly random keys/refs from a numpy Generator."""
    arr = empty_items(n)
    high = (1 << key_bits) if key_bits < 64 else (1 << 64)
    arr["key"] = rng.integers(0, high, size=n, dtype=np.uint64)
    arr["ref"] = rng.integers(0, 1 << 64, size=n, dtype=np.uint64)
    return arr
