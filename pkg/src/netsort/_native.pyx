# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled compute lane: thin wrapper over the C core in csrc/.

Exposes the same surface as ``netsort._pybackend``; ``netsort.backend``
picks whichever lane is available at import time.
"""

import numpy as np

cimport numpy as cnp

from .errors import ConfigurationError, CorrectnessFailure, UnsupportedSize
from .items import ITEM_DTYPE

cnp.import_array()


cdef extern from "netsort_core.h":
    ctypedef struct ns_item:
        unsigned long long key
        unsigned long long ref
    ctypedef struct ns_spec:
        int kind
        int family
        int swap
        int ins_variant
        int base_kind
        int rss_oversampling
        int rss_block
        int rss_threshold
        unsigned int rss_sample_seed
        int qs_base_is_rss
        int qs_threshold
        int qs_depth_factor
        int qs_final_pass
        int pivot_swap
    ctypedef struct ns_qs_stats:
        long base_calls
        long max_base
        long heap_calls
        long partition_violations
        int check_partitions
    unsigned int ns_lcg_next(unsigned int seed) nogil
    unsigned int ns_fill(ns_item *a, long n, unsigned int seed) nogil
    unsigned long long ns_fp_at(const ns_item *a, long n,
                                unsigned long long z) nogil
    unsigned long long ns_fp_search(const ns_item *a, long n,
                                    unsigned long long z0,
                                    unsigned long long *z_used) nogil
    int ns_scan_sorted(const ns_item *a, long n) nogil
    void ns_cswap_dyn(int code, ns_item *l, ns_item *r) nogil
    void ns_insertion_sort(ns_item *a, long n, int variant) nogil
    void ns_heapsort(ns_item *a, long n) nogil
    void ns_std_sort(ns_item *a, long n) nogil
    void ns_classify_block(const ns_item *a, long n, unsigned long long s0,
                           unsigned long long s1, unsigned long long s2,
                           int block, unsigned char *tags) nogil
    int ns_run_sorter(const ns_spec *sp, ns_item *a, long n,
                      ns_item *scratch, unsigned char *tags) nogil
    int ns_hybrid_stats(const ns_spec *sp, ns_item *a, long n,
                        ns_item *scratch, unsigned char *tags,
                        ns_qs_stats *st) nogil
    int ns_measure_oar(const ns_spec *sp, long size, long iterations,
                       unsigned int seed, ns_item *buf, ns_item *scratch,
                       unsigned char *tags, unsigned long long *t1_out,
                       unsigned long long *t2_out) nogil
    int ns_measure_air(const ns_spec *sp, long size, long narrays,
                       unsigned int seed, ns_item *big, ns_item *ref,
                       ns_item *warm, ns_item *scratch, unsigned char *tags,
                       unsigned long long *t_out) nogil
    int ns_timer_is_cycles() nogil
    unsigned long long ns_sim_check_count() nogil
    unsigned long long ns_sink_value() nogil


LANE = "native"
TIMER_KIND = "cycles" if ns_timer_is_cycles() else "nanos"
FP_PRIME = (1 << 61) - 1

KIND_NETWORK = 0
KIND_RSS = 2
KIND_HYBRID = 3


cdef ns_item *item_ptr(object arr, long need) except? NULL:
    cdef cnp.ndarray nd
    if not isinstance(arr, np.ndarray) or arr.dtype != ITEM_DTYPE:
        raise ConfigurationError("expected a structured item array")
    nd = <cnp.ndarray> arr
    if not cnp.PyArray_IS_C_CONTIGUOUS(nd):
        raise ConfigurationError("item array must be C-contiguous")
    if nd.size < need:
        raise ConfigurationError(
            f"array holds {nd.size} items, need {need}")
    return <ns_item *> cnp.PyArray_DATA(nd)


cdef ns_spec make_spec(object spec):
    # positional layout pinned to registry.SorterSpec._fields by a test
    cdef ns_spec sp
    sp.kind = spec[0]
    sp.family = spec[1]
    sp.swap = spec[2]
    sp.ins_variant = spec[3]
    sp.base_kind = spec[4]
    sp.rss_oversampling = spec[5]
    sp.rss_block = spec[6]
    sp.rss_threshold = spec[7]
    sp.rss_sample_seed = spec[8]
    sp.qs_base_is_rss = spec[9]
    sp.qs_threshold = spec[10]
    sp.qs_depth_factor = spec[11]
    sp.qs_final_pass = spec[12]
    sp.pivot_swap = spec[13]
    return sp


def lcg_next(seed):
    return ns_lcg_next(<unsigned int> seed)


def fill_items(arr, seed):
    cdef long n = len(arr)
    cdef ns_item *p = item_ptr(arr, n)
    cdef unsigned int s = <unsigned int> seed
    with nogil:
        s = ns_fill(p, n, s)
    return s


def fingerprint(arr, n=None, z=1, p=FP_PRIME):
    if p != FP_PRIME:
        from . import _pybackend
        return _pybackend.fingerprint(arr, n, z, p)
    cdef long nn = len(arr) if n is None else <long> n
    cdef ns_item *ptr = item_ptr(arr, nn)
    cdef unsigned long long v, zu
    cdef unsigned long long z0 = <unsigned long long> z
    with nogil:
        v = ns_fp_search(ptr, nn, z0, &zu)
    return int(v), int(zu)


def check_sorted(arr, n=None):
    cdef long nn = len(arr) if n is None else <long> n
    cdef ns_item *ptr = item_ptr(arr, nn)
    cdef int ok
    with nogil:
        ok = ns_scan_sorted(ptr, nn)
    return bool(ok)


cdef _raise_status(int status, object spec, object seed=None):
    if status == -1:
        raise CorrectnessFailure(
            "sorted-check or fingerprint mismatch", seed=seed)
    if status == -2:
        if spec is not None and spec[0] == KIND_NETWORK:
            raise UnsupportedSize("network sorters cover 2..16 items")
        raise ConfigurationError("sorter spec rejected by compiled lane")


cdef tuple _work_buffers(object spec, long n):
    # RSS and hybrid kernels need distribution scratch and tag buffers
    if spec[0] in (KIND_RSS, KIND_HYBRID):
        return (np.empty(n, dtype=ITEM_DTYPE),
                np.empty(n, dtype=np.uint8))
    return None, None


def run_sorter(spec, arr, n=None):
    cdef long nn = len(arr) if n is None else <long> n
    if spec[0] == KIND_NETWORK and nn >= 2 and not 2 <= nn <= 16:
        raise UnsupportedSize(
            f"network sorters cover 2..16 items, got {nn}")
    cdef ns_item *ptr = item_ptr(arr, nn)
    cdef ns_spec sp = make_spec(spec)
    scratch, tags = _work_buffers(spec, nn)
    cdef ns_item *sptr = NULL
    cdef unsigned char *tptr = NULL
    if scratch is not None:
        sptr = item_ptr(scratch, nn)
        tptr = <unsigned char *> cnp.PyArray_DATA(<cnp.ndarray> tags)
    cdef int status
    with nogil:
        status = ns_run_sorter(&sp, ptr, nn, sptr, tptr)
    _raise_status(status, spec)


def run_sorter_many(spec, rows):
    if rows.ndim != 2:
        raise ConfigurationError("expected a 2-D array of input rows")
    cdef long m = rows.shape[0]
    cdef long n = rows.shape[1]
    cdef ns_item *ptr = item_ptr(rows, m * n)
    cdef ns_spec sp = make_spec(spec)
    scratch, tags = _work_buffers(spec, n)
    cdef ns_item *sptr = NULL
    cdef unsigned char *tptr = NULL
    if scratch is not None:
        sptr = item_ptr(scratch, n)
        tptr = <unsigned char *> cnp.PyArray_DATA(<cnp.ndarray> tags)
    cdef int status = 0
    cdef long i
    with nogil:
        for i in range(m):
            status |= ns_run_sorter(&sp, ptr + i * n, n, sptr, tptr)
    _raise_status(status, spec)


def swap_pairs(code, rows):
    if rows.ndim != 2 or rows.shape[1] != 2:
        raise ConfigurationError("expected an (m, 2) array of item pairs")
    cdef long m = rows.shape[0]
    cdef ns_item *ptr = item_ptr(rows, m * 2)
    cdef int c = <int> code
    cdef long i
    with nogil:
        for i in range(m):
            ns_cswap_dyn(c, ptr + 2 * i, ptr + 2 * i + 1)


def classify_block_u64(keys, s0, s1, s2, block=1):
    cdef long n = len(keys)
    items = np.zeros(n, dtype=ITEM_DTYPE)
    items["key"] = keys
    tags = np.empty(n, dtype=np.uint8)
    cdef ns_item *ptr = item_ptr(items, n)
    cdef unsigned char *tptr = <unsigned char *> cnp.PyArray_DATA(
        <cnp.ndarray> tags)
    cdef unsigned long long c0 = s0, c1 = s1, c2 = s2
    cdef int b = block
    with nogil:
        ns_classify_block(ptr, n, c0, c1, c2, b, tptr)
    return tags


def hybrid_stats(spec, arr):
    cdef long n = len(arr)
    cdef ns_item *ptr = item_ptr(arr, n)
    cdef ns_spec sp = make_spec(spec)
    scratch = np.empty(n, dtype=ITEM_DTYPE)
    tags = np.empty(n, dtype=np.uint8)
    cdef ns_item *sptr = item_ptr(scratch, n)
    cdef unsigned char *tptr = <unsigned char *> cnp.PyArray_DATA(
        <cnp.ndarray> tags)
    cdef ns_qs_stats st
    st.base_calls = 0
    st.max_base = 0
    st.heap_calls = 0
    st.partition_violations = 0
    st.check_partitions = 1
    cdef int status
    with nogil:
        status = ns_hybrid_stats(&sp, ptr, n, sptr, tptr, &st)
    _raise_status(status, spec)
    return {
        "base_calls": st.base_calls,
        "max_base": st.max_base,
        "heap_calls": st.heap_calls,
        "partition_violations": st.partition_violations,
    }


def measure_one_array_repeat(spec, size, iterations, seed):
    cdef long sz = size
    cdef long it = iterations
    buf = np.empty(sz, dtype=ITEM_DTYPE)
    scratch = np.empty(sz, dtype=ITEM_DTYPE)
    tags = np.empty(sz, dtype=np.uint8)
    cdef ns_item *bptr = item_ptr(buf, sz)
    cdef ns_item *sptr = item_ptr(scratch, sz)
    cdef unsigned char *tptr = <unsigned char *> cnp.PyArray_DATA(
        <cnp.ndarray> tags)
    cdef ns_spec sp = make_spec(spec)
    cdef unsigned int sd = <unsigned int> seed
    cdef unsigned long long t1 = 0, t2 = 0
    cdef int status
    with nogil:
        status = ns_measure_oar(&sp, sz, it, sd, bptr, sptr, tptr, &t1, &t2)
    _raise_status(status, spec, seed)
    return int(t1), int(t2)


def measure_array_in_row(spec, size, narrays, seed):
    cdef long sz = size
    cdef long m = narrays
    cdef long total = sz * m
    big = np.empty(total, dtype=ITEM_DTYPE)
    ref = np.empty(total, dtype=ITEM_DTYPE)
    warm = np.empty(sz, dtype=ITEM_DTYPE)
    scratch = np.empty(sz, dtype=ITEM_DTYPE)
    tags = np.empty(sz, dtype=np.uint8)
    cdef ns_item *bptr = item_ptr(big, total)
    cdef ns_item *rptr = item_ptr(ref, total)
    cdef ns_item *wptr = item_ptr(warm, sz)
    cdef ns_item *sptr = item_ptr(scratch, sz)
    cdef unsigned char *tptr = <unsigned char *> cnp.PyArray_DATA(
        <cnp.ndarray> tags)
    cdef ns_spec sp = make_spec(spec)
    cdef unsigned int sd = <unsigned int> seed
    cdef unsigned long long t = 0
    cdef int status
    with nogil:
        status = ns_measure_air(&sp, sz, m, sd, bptr, rptr, wptr, sptr,
                                tptr, &t)
    _raise_status(status, spec, seed)
    return int(t)


def sim_check_count():
    return int(ns_sim_check_count())


def sink_value():
    return int(ns_sink_value())
