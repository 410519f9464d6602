"""Conditional-swap strategies.

Nine interchangeable primitives with one observable contract — after the call
the pair is ordered by key, items travel as whole (key, ref) units, equal keys
never exchange (strict ``<``) — but deliberately different control/data-flow
styles.  The compiled backend carries the low-level counterparts; the pure
implementations here mirror each strategy's stated data flow in Python
semantics (Python has no real conditional-select instruction, so in this lane
branch-freedom is structural intent, not machine behavior).

All in-place functions operate on parallel key/ref lists at two slot indices.
"""

from __future__ import annotations

from dataclasses import dataclass

STRATEGIES = ("ISwp", "TCOp", "Tie", "JXhg", "4Cm", "4CmS", "6Cm", "2CPm", "2CPp")

LONG_NAMES = {
    "ISwp": "Branching",
    "TCOp": "TernarySelect",
    "Tie": "PairAssign",
    "JXhg": "JumpExchange",
    "4Cm": "FourSelect",
    "4CmS": "FourSelectSplit",
    "6Cm": "SixSelect",
    "2CPm": "IndirectSelect",
    "2CPp": "PredicateIndirectSelect",
}

_BRANCH_FREE = frozenset({"TCOp", "4Cm", "4CmS", "6Cm", "2CPm", "2CPp"})


def strategy_is_branch_free(strategy: str) -> bool:
    """True for the conditional-select strategies, false for branching ones."""
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown swap strategy {strategy!r}")
    return strategy in _BRANCH_FREE


# ---------------------------------------------------------------------------
# Instrumentation (pure lane only)
# ---------------------------------------------------------------------------

@dataclass
class OpCounter:
    comparisons: int = 0
    swap_calls: int = 0


_counter: OpCounter | None = None


class count_ops:
    """Context manager enabling comparison/swap counting on the pure lane."""

    def __enter__(self) -> OpCounter:
        global _counter
        self._prev = _counter
        _counter = OpCounter()
        return _counter

    def __exit__(self, *exc):
        global _counter
        _counter = self._prev
        return False


def note_comparison():
    if _counter is not None:
        _counter.comparisons += 1


def _enter_swap():
    if _counter is not None:
        _counter.comparisons += 1
        _counter.swap_calls += 1


# ---------------------------------------------------------------------------
# Strategy implementations (in-place on parallel key/ref lists)
# ---------------------------------------------------------------------------

def _cs_iswp(keys, refs, i, j):
    # Branching: conditional branch around a whole-item exchange.
    _enter_swap()
    if keys[j] < keys[i]:
        keys[i], keys[j] = keys[j], keys[i]
        refs[i], refs[j] = refs[j], refs[i]


def _cs_tcop(keys, refs, i, j):
    # TernarySelect: one predicate, both fields assigned via selects.
    _enter_swap()
    r = keys[j] < keys[i]
    tk = keys[i]
    tr = refs[i]
    keys[i] = keys[j] if r else keys[i]
    refs[i] = refs[j] if r else refs[i]
    keys[j] = tk if r else keys[j]
    refs[j] = tr if r else refs[j]


def _cs_tie(keys, refs, i, j):
    # PairAssign: simultaneous two-item assignment from a selected pair.
    _enter_swap()
    r = keys[j] < keys[i]
    left = (keys[i], refs[i])
    right = (keys[j], refs[j])
    (keys[i], refs[i]), (keys[j], refs[j]) = (right, left) if r else (left, right)


def _cs_jxhg(keys, refs, i, j):
    # JumpExchange: compare, conditionally skip two register exchanges.
    _enter_swap()
    if keys[j] < keys[i]:
        keys[i], keys[j] = keys[j], keys[i]
        refs[i], refs[j] = refs[j], refs[i]
        return


def _cs_4cm(keys, refs, i, j):
    # FourSelect: unconditional copy of left, then four selections in place.
    _enter_swap()
    r = keys[j] < keys[i]
    tk = keys[i]
    tr = refs[i]
    keys[i] = keys[j] if r else keys[i]
    refs[i] = refs[j] if r else refs[i]
    keys[j] = tk if r else keys[j]
    refs[j] = tr if r else refs[j]


def _cs_4cms(keys, refs, i, j):
    # FourSelectSplit: same data flow as FourSelect, but four independent
    # selection steps computed before any write-back, so neighbouring swaps
    # may interleave their loads/stores.
    _enter_swap()
    r = keys[j] < keys[i]
    nki = keys[j] if r else keys[i]
    nri = refs[j] if r else refs[i]
    nkj = keys[i] if r else keys[j]
    nrj = refs[i] if r else refs[j]
    keys[i] = nki
    refs[i] = nri
    keys[j] = nkj
    refs[j] = nrj


def _cs_6cm(keys, refs, i, j):
    # SixSelect: temporaries themselves populated via conditional selection.
    _enter_swap()
    r = keys[j] < keys[i]
    tk = 0
    tr = 0
    tk = keys[i] if r else tk
    tr = refs[i] if r else tr
    keys[i] = keys[j] if r else keys[i]
    refs[i] = refs[j] if r else refs[i]
    keys[j] = tk if r else keys[j]
    refs[j] = tr if r else refs[j]


def _cs_2cpm(keys, refs, i, j):
    # IndirectSelect: select item locations, then copy through the handles.
    _enter_swap()
    r = keys[j] < keys[i]
    temp = (keys[i], refs[i])
    left_src = j if r else i
    keys[i], refs[i] = keys[left_src], refs[left_src]
    right = temp if r else (keys[j], refs[j])
    keys[j], refs[j] = right


def _cs_2cpp(keys, refs, i, j):
    # PredicateIndirectSelect: comparison materialized as an integer
    # predicate first, then the same two handle selections.
    _enter_swap()
    p = 1 if keys[j] < keys[i] else 0
    temp = (keys[i], refs[i])
    left_src = (i, j)[p]
    keys[i], refs[i] = keys[left_src], refs[left_src]
    right = ((keys[j], refs[j]), temp)[p]
    keys[j], refs[j] = right


SWAP_FUNCS = {
    "ISwp": _cs_iswp,
    "TCOp": _cs_tcop,
    "Tie": _cs_tie,
    "JXhg": _cs_jxhg,
    "4Cm": _cs_4cm,
    "4CmS": _cs_4cms,
    "6Cm": _cs_6cm,
    "2CPm": _cs_2cpm,
    "2CPp": _cs_2cpp,
}

# Stable integer codes shared with the compiled backend.
SWAP_CODES = {name: idx for idx, name in enumerate(STRATEGIES)}


def conditional_swap(strategy: str, left: tuple[int, int], right: tuple[int, int]):
    """Order two (key, ref) items; returns the updated (left, right) pair."""
    fn = SWAP_FUNCS.get(strategy)
    if fn is None:
        raise ValueError(f"unknown swap strategy {strategy!r}")
    keys = [left[0], right[0]]
    refs = [left[1], right[1]]
    fn(keys, refs, 0, 1)
    return (keys[0], refs[0]), (keys[1], refs[1])
