/* Core types and conditional-swap kernels for the compiled lane.
 *
 * Everything the generated network units need lives here: the 128-bit item,
 * the nine conditional-swap styles as always-inline functions, and one
 * statement-shaped macro per style so a network body can be instantiated
 * once per (network, style) pair.
 */
#ifndef NETSORT_CORE_H
#define NETSORT_CORE_H

#include <stddef.h>
#include <stdint.h>

#if defined(__GNUC__)
#define NS_INLINE static inline __attribute__((always_inline))
#else
#define NS_INLINE static inline
#endif

typedef struct {
    uint64_t key;
    uint64_t ref;
} ns_item;

typedef void (*ns_net_fn)(ns_item *);

/* ------------------------------------------------------------------ */
/* Conditional swaps.  All are extensionally identical: afterwards      */
/* l->key <= r->key and the two items are the input items, possibly    */
/* exchanged whole.  Equal keys never exchange (strict <).             */
/* ------------------------------------------------------------------ */

/* Branching: conditional branch around a whole-item exchange. */
NS_INLINE void ns_cs_iswp(ns_item *l, ns_item *r) {
    if (r->key < l->key) {
        ns_item t = *l;
        *l = *r;
        *r = t;
    }
}

/* TernarySelect: predicate once, every field assigned via a value select. */
NS_INLINE void ns_cs_tcop(ns_item *l, ns_item *r) {
    int c = r->key < l->key;
    uint64_t tk = l->key;
    uint64_t tr = l->ref;
    l->key = c ? r->key : l->key;
    l->ref = c ? r->ref : l->ref;
    r->key = c ? tk : r->key;
    r->ref = c ? tr : r->ref;
}

/* PairAssign: simultaneous assignment from a selected ordered pair. */
NS_INLINE void ns_cs_tie(ns_item *l, ns_item *r) {
    ns_item a, b;
    if (r->key < l->key) {
        a = *r;
        b = *l;
    } else {
        a = *l;
        b = *r;
    }
    *l = a;
    *r = b;
}

/* JumpExchange: compare, conditionally jump over two register exchanges. */
NS_INLINE void ns_cs_jxhg(ns_item *l, ns_item *r) {
    if (r->key < l->key) {
        uint64_t t;
        t = l->key; l->key = r->key; r->key = t;
        t = l->ref; l->ref = r->ref; r->ref = t;
    }
}

/* Branch-free ALU select: a if mask set (all ones) else b. */
NS_INLINE uint64_t ns_sel(uint64_t mask, uint64_t a, uint64_t b) {
    return (a & mask) | (b & ~mask);
}

/* FourSelect: unconditional copy of left, then four masked selections. */
NS_INLINE void ns_cs_cm4(ns_item *l, ns_item *r) {
    uint64_t m = (uint64_t)0 - (uint64_t)(r->key < l->key);
    uint64_t tk = l->key;
    uint64_t tr = l->ref;
    l->key = ns_sel(m, r->key, l->key);
    l->ref = ns_sel(m, r->ref, l->ref);
    r->key = ns_sel(m, tk, r->key);
    r->ref = ns_sel(m, tr, r->ref);
}

/* FourSelectSplit: same data flow, but all loads complete before any
 * store so adjacent swaps may interleave in the pipeline. */
NS_INLINE void ns_cs_cm4s(ns_item *l, ns_item *r) {
    uint64_t m = (uint64_t)0 - (uint64_t)(r->key < l->key);
    uint64_t nlk = ns_sel(m, r->key, l->key);
    uint64_t nlr = ns_sel(m, r->ref, l->ref);
    uint64_t nrk = ns_sel(m, l->key, r->key);
    uint64_t nrr = ns_sel(m, l->ref, r->ref);
    l->key = nlk;
    l->ref = nlr;
    r->key = nrk;
    r->ref = nrr;
}

/* SixSelect: temporaries populated only via selection (six selects). */
NS_INLINE void ns_cs_cm6(ns_item *l, ns_item *r) {
    uint64_t m = (uint64_t)0 - (uint64_t)(r->key < l->key);
    uint64_t tk = 0;
    uint64_t tr = 0;
    tk = ns_sel(m, l->key, tk);
    tr = ns_sel(m, l->ref, tr);
    l->key = ns_sel(m, r->key, l->key);
    l->ref = ns_sel(m, r->ref, l->ref);
    r->key = ns_sel(m, tk, r->key);
    r->ref = ns_sel(m, tr, r->ref);
}

/* IndirectSelect: two location handles selected branch-free, then
 * unconditional copies through them. */
NS_INLINE void ns_cs_cpm2(ns_item *l, ns_item *r) {
    ns_item temp = *l;
    ns_item *lsrc = r->key < l->key ? r : l;
    *l = *lsrc;
    ns_item *rsrc = r->key < temp.key ? &temp : r;
    *r = *rsrc;
}

/* PredicateIndirectSelect: comparison materialized as an integer first,
 * decoupling it from the selections (supports arbitrary predicates). */
NS_INLINE void ns_cs_cpp2(ns_item *l, ns_item *r) {
    int p = (int)(r->key < l->key);
    ns_item temp = *l;
    ns_item *lsrc = p ? r : l;
    *l = *lsrc;
    ns_item *rsrc = p ? &temp : r;
    *r = *rsrc;
}

/* Statement-shaped wrappers for generated network bodies. */
#define NS_CS_ISWP(A, I, J) ns_cs_iswp(&(A)[I], &(A)[J]);
#define NS_CS_TCOP(A, I, J) ns_cs_tcop(&(A)[I], &(A)[J]);
#define NS_CS_TIE(A, I, J)  ns_cs_tie(&(A)[I], &(A)[J]);
#define NS_CS_JXHG(A, I, J) ns_cs_jxhg(&(A)[I], &(A)[J]);
#define NS_CS_CM4(A, I, J)  ns_cs_cm4(&(A)[I], &(A)[J]);
#define NS_CS_CM4S(A, I, J) ns_cs_cm4s(&(A)[I], &(A)[J]);
#define NS_CS_CM6(A, I, J)  ns_cs_cm6(&(A)[I], &(A)[J]);
#define NS_CS_CPM2(A, I, J) ns_cs_cpm2(&(A)[I], &(A)[J]);
#define NS_CS_CPP2(A, I, J) ns_cs_cpp2(&(A)[I], &(A)[J]);

/* ------------------------------------------------------------------ */
/* Flat sorter description shared with the Python registry (the field  */
/* order mirrors registry.SorterSpec and is pinned by a test).         */
/* ------------------------------------------------------------------ */

typedef struct {
    int kind;              /* 0 net, 1 insertion, 2 rss, 3 hybrid, 4 std */
    int family;            /* network family code 0..3 */
    int swap;              /* swap strategy code 0..8 */
    int ins_variant;       /* 0 Def, 1 POp, 2 STL, 3 AIF */
    int base_kind;         /* 0 network, 1 insertion */
    int rss_oversampling;
    int rss_block;
    int rss_threshold;
    uint32_t rss_sample_seed;
    int qs_base_is_rss;
    int qs_threshold;
    int qs_depth_factor;
    int qs_final_pass;
    int pivot_swap;
} ns_spec;

typedef struct {
    long base_calls;
    long max_base;
    long heap_calls;
    long partition_violations;
    int check_partitions;
} ns_qs_stats;

/* ------------------------------------------------------------------ */
/* Kernel entry points (netsort_core.c)                                */
/* ------------------------------------------------------------------ */

uint32_t ns_lcg_next(uint32_t seed);
uint32_t ns_fill(ns_item *a, long n, uint32_t seed);
uint64_t ns_fp_at(const ns_item *a, long n, uint64_t z);
uint64_t ns_fp_search(const ns_item *a, long n, uint64_t z0, uint64_t *z_used);
int ns_scan_sorted(const ns_item *a, long n);
void ns_cswap_dyn(int code, ns_item *l, ns_item *r);
void ns_insertion_sort(ns_item *a, long n, int variant);
void ns_heapsort(ns_item *a, long n);
void ns_std_sort(ns_item *a, long n);
void ns_classify_block(const ns_item *a, long n, uint64_t s0, uint64_t s1,
                       uint64_t s2, int block, uint8_t *tags);
int ns_run_sorter(const ns_spec *sp, ns_item *a, long n, ns_item *scratch,
                  uint8_t *tags);
int ns_hybrid_stats(const ns_spec *sp, ns_item *a, long n, ns_item *scratch,
                    uint8_t *tags, ns_qs_stats *st);
int ns_measure_oar(const ns_spec *sp, long size, long iterations,
                   uint32_t seed, ns_item *buf, ns_item *scratch,
                   uint8_t *tags, uint64_t *t1_out, uint64_t *t2_out);
int ns_measure_air(const ns_spec *sp, long size, long narrays, uint32_t seed,
                   ns_item *big, ns_item *ref, ns_item *warm,
                   ns_item *scratch, uint8_t *tags, uint64_t *t_out);
int ns_timer_is_cycles(void);
uint64_t ns_sim_check_count(void);
uint64_t ns_sink_value(void);

#endif /* NETSORT_CORE_H */
