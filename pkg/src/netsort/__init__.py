"""netsort — branch-free small-array sorting toolkit.

Comparator networks (generated and embedded best-known tables), a family of
conditional-swap primitives, fixed-size sorters, a register-resident sample
sort, an introsort-style hybrid quicksort, and a measurement harness with
cycle-level timing.

The hot kernels live in a compiled extension (``netsort._native``); a pure
Python fallback is selected automatically at import when the extension is not
available.  See ``netsort.backend``.
"""

__version__ = "0.1.0"
