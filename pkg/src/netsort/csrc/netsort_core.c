/* Compiled-lane kernels: deterministic fill, fingerprint, sorters, and the
 * two measurement loops.  Behavior mirrors netsort/_pybackend.py exactly;
 * the cross-lane tests hold both to the same outputs.
 */
#include "netsort_core.h"
#include "netsort_nets.h"

#include <stdlib.h>
#include <string.h>

#if defined(__x86_64__) || defined(_M_X64)
#include <x86intrin.h>
#define NS_TIMER_CYCLES 1
static uint64_t ns_ticks(void) { return __rdtsc(); }
#else
#include <time.h>
#define NS_TIMER_CYCLES 0
static uint64_t ns_ticks(void) {
    struct timespec ts;
    clock_gettime(CLOCK_MONOTONIC, &ts);
    return (uint64_t)ts.tv_sec * 1000000000ull + (uint64_t)ts.tv_nsec;
}
#endif

int ns_timer_is_cycles(void) { return NS_TIMER_CYCLES; }

/* Witnesses that the simulated check really runs (debug-mode assertion). */
static volatile uint64_t ns_sim_checks = 0;
static volatile uint64_t ns_sink = 0;

uint64_t ns_sim_check_count(void) { return ns_sim_checks; }
uint64_t ns_sink_value(void) { return ns_sink; }

/* ------------------------------------------------------------------ */
/* Deterministic input generation                                      */
/* ------------------------------------------------------------------ */

uint32_t ns_lcg_next(uint32_t seed) {
    return (uint32_t)(((uint64_t)seed * 48271u) % 2147483647u);
}

uint32_t ns_fill(ns_item *a, long n, uint32_t seed) {
    for (long i = 0; i < n; i++) {
        seed = ns_lcg_next(seed);
        a[i].key = seed;
        seed = ns_lcg_next(seed);
        a[i].ref = seed;
    }
    return seed;
}

/* ------------------------------------------------------------------ */
/* Fingerprint over keys, modulo the Mersenne prime 2^61 - 1           */
/* ------------------------------------------------------------------ */

#define NS_FP_P ((uint64_t)0x1FFFFFFFFFFFFFFFull)

static uint64_t ns_mod_p(uint64_t x) {
    uint64_t s = (x & NS_FP_P) + (x >> 61);
    return s >= NS_FP_P ? s - NS_FP_P : s;
}

static uint64_t ns_mulmod_p(uint64_t a, uint64_t b) {
    unsigned __int128 t = (unsigned __int128)a * b;
    uint64_t s = ((uint64_t)t & NS_FP_P) + (uint64_t)(t >> 61);
    return s >= NS_FP_P ? s - NS_FP_P : s;
}

uint64_t ns_fp_at(const ns_item *a, long n, uint64_t z) {
    uint64_t v = 1;
    uint64_t zz = ns_mod_p(z);
    for (long i = 0; i < n; i++) {
        uint64_t k = ns_mod_p(a[i].key);
        uint64_t d = zz >= k ? zz - k : zz + (NS_FP_P - k);
        v = ns_mulmod_p(v, d);
    }
    return v;
}

uint64_t ns_fp_search(const ns_item *a, long n, uint64_t z0,
                      uint64_t *z_used) {
    uint64_t z = z0;
    for (;;) {
        uint64_t v = ns_fp_at(a, n, z);
        if (v != 0) {
            *z_used = z;
            return v;
        }
        z++;
    }
}

/* Full scan on purpose: the simulated check must perform the exact same
 * comparisons as the real one, so neither may exit early. */
int ns_scan_sorted(const ns_item *a, long n) {
    int ok = 1;
    for (long i = 1; i < n; i++)
        ok &= a[i - 1].key <= a[i].key;
    return ok;
}

/* ------------------------------------------------------------------ */
/* Runtime-dispatched conditional swap (pivot nets, pair API)          */
/* ------------------------------------------------------------------ */

void ns_cswap_dyn(int code, ns_item *l, ns_item *r) {
    switch (code) {
    case 0: ns_cs_iswp(l, r); break;
    case 1: ns_cs_tcop(l, r); break;
    case 2: ns_cs_tie(l, r); break;
    case 3: ns_cs_jxhg(l, r); break;
    case 4: ns_cs_cm4(l, r); break;
    case 5: ns_cs_cm4s(l, r); break;
    case 6: ns_cs_cm6(l, r); break;
    case 7: ns_cs_cpm2(l, r); break;
    default: ns_cs_cpp2(l, r); break;
    }
}

/* ------------------------------------------------------------------ */
/* Insertion sorts                                                     */
/* ------------------------------------------------------------------ */

static void ns_ins_def(ns_item *a, long n) {
    for (long i = 1; i < n; i++) {
        ns_item val = a[i];
        long j = i - 1;
        while (j >= 0 && val.key < a[j].key) {
            a[j + 1] = a[j];
            j--;
        }
        a[j + 1] = val;
    }
}

static void ns_ins_pop(ns_item *a, long n) {
    ns_item *end = a + n;
    for (ns_item *cur = a + 1; cur < end; cur++) {
        ns_item val = *cur;
        ns_item *pos = cur;
        while (pos > a && val.key < (pos - 1)->key) {
            *pos = *(pos - 1);
            pos--;
        }
        *pos = val;
    }
}

/* Guarded first insert, then an unguarded inner loop with the front
 * element as sentinel. */
static void ns_ins_stl(ns_item *a, long n) {
    if (n < 2)
        return;
    for (ns_item *i = a + 1; i != a + n; i++) {
        ns_item val = *i;
        if (val.key < a->key) {
            for (ns_item *p = i; p != a; p--)
                *p = *(p - 1);
            *a = val;
        } else {
            ns_item *next = i - 1;
            while (val.key < next->key) {
                *(next + 1) = *next;
                next--;
            }
            *(next + 1) = val;
        }
    }
}

/* Def plus a pre-check: smaller-than-front candidates rotate straight
 * to the front. */
static void ns_ins_aif(ns_item *a, long n) {
    for (long i = 1; i < n; i++) {
        ns_item val = a[i];
        if (val.key < a[0].key) {
            for (long j = i; j > 0; j--)
                a[j] = a[j - 1];
            a[0] = val;
        } else {
            long j = i - 1;
            while (j >= 0 && val.key < a[j].key) {
                a[j + 1] = a[j];
                j--;
            }
            a[j + 1] = val;
        }
    }
}

void ns_insertion_sort(ns_item *a, long n, int variant) {
    switch (variant) {
    case 0: ns_ins_def(a, n); break;
    case 1: ns_ins_pop(a, n); break;
    case 2: ns_ins_stl(a, n); break;
    default: ns_ins_aif(a, n); break;
    }
}

/* ------------------------------------------------------------------ */
/* Network dispatch                                                    */
/* ------------------------------------------------------------------ */

static const ns_net_fn (*ns_net_tables[4])[9] = {
    ns_net_table_best,
    ns_net_table_bn_l,
    ns_net_table_bn_p,
    ns_net_table_bn_r,
};

static ns_net_fn ns_net_lookup(int family, long n, int swap) {
    if (family < 0 || family > 3 || n < 2 || n > 16 || swap < 0 || swap > 8)
        return NULL;
    return ns_net_tables[family][n][swap];
}

/* ------------------------------------------------------------------ */
/* Heapsort (depth-guard escape)                                       */
/* ------------------------------------------------------------------ */

static void ns_sift_down(ns_item *a, long root, long end) {
    for (;;) {
        long child = 2 * root + 1;
        if (child > end)
            break;
        if (child + 1 <= end && a[child].key < a[child + 1].key)
            child++;
        if (a[root].key < a[child].key) {
            ns_item t = a[root];
            a[root] = a[child];
            a[child] = t;
            root = child;
        } else {
            break;
        }
    }
}

void ns_heapsort(ns_item *a, long n) {
    if (n < 2)
        return;
    for (long s = n / 2 - 1; s >= 0; s--)
        ns_sift_down(a, s, n - 1);
    for (long e = n - 1; e > 0; e--) {
        ns_item t = a[0];
        a[0] = a[e];
        a[e] = t;
        ns_sift_down(a, 0, e - 1);
    }
}

/* ------------------------------------------------------------------ */
/* Host-platform standard sort (baseline rows)                         */
/* ------------------------------------------------------------------ */

static int ns_cmp_key(const void *x, const void *y) {
    const ns_item *a = (const ns_item *)x;
    const ns_item *b = (const ns_item *)y;
    return a->key < b->key ? -1 : (a->key > b->key ? 1 : 0);
}

void ns_std_sort(ns_item *a, long n) {
    qsort(a, (size_t)n, sizeof(ns_item), ns_cmp_key);
}

/* ------------------------------------------------------------------ */
/* RSS classification: per-lane state in distinct scalars              */
/* ------------------------------------------------------------------ */

#define NS_CLS_LANE(T)                                              \
    uint64_t k##T = a[i + T].key;                                   \
    uint64_t c##T = s1 < k##T;                                      \
    uint64_t x##T = ns_sel((uint64_t)0 - c##T, s2, s0);             \
    tags[i + T] = (uint8_t)((c##T << 1) + (x##T < k##T));

void ns_classify_block(const ns_item *a, long n, uint64_t s0, uint64_t s1,
                       uint64_t s2, int block, uint8_t *tags) {
    long i = 0;
    switch (block) {
    case 2:
        for (; i + 2 <= n; i += 2) { NS_CLS_LANE(0) NS_CLS_LANE(1) }
        break;
    case 3:
        for (; i + 3 <= n; i += 3) { NS_CLS_LANE(0) NS_CLS_LANE(1)
                                     NS_CLS_LANE(2) }
        break;
    case 4:
        for (; i + 4 <= n; i += 4) { NS_CLS_LANE(0) NS_CLS_LANE(1)
                                     NS_CLS_LANE(2) NS_CLS_LANE(3) }
        break;
    case 5:
        for (; i + 5 <= n; i += 5) { NS_CLS_LANE(0) NS_CLS_LANE(1)
                                     NS_CLS_LANE(2) NS_CLS_LANE(3)
                                     NS_CLS_LANE(4) }
        break;
    default:
        break;
    }
    for (; i < n; i++) { NS_CLS_LANE(0) }
}

/* ------------------------------------------------------------------ */
/* Register sample sort                                                */
/* ------------------------------------------------------------------ */

#define NS_RSS_MAX_DEPTH 64
#define NS_RSS_MAX_SAMPLE 64 /* oversampling is a single digit: <= 36 */

static void ns_small_base(const ns_spec *sp, ns_item *a, long n) {
    if (n < 2)
        return;
    if (sp->base_kind == 0 && n <= 16) {
        ns_net_fn fn = ns_net_lookup(sp->family, n, sp->swap);
        if (fn) {
            fn(a);
            return;
        }
    }
    if (sp->base_kind == 0)
        ns_ins_def(a, n);
    else
        ns_insertion_sort(a, n, sp->ins_variant);
}

static void ns_rss_rec(const ns_spec *sp, ns_item *a, long n,
                       ns_item *scratch, uint8_t *tags, uint32_t *state,
                       int depth) {
    if (n <= sp->rss_threshold) {
        ns_small_base(sp, a, n);
        return;
    }
    long sample = 4L * sp->rss_oversampling;
    if (n < sample) {
        if (n <= 16)
            ns_small_base(sp, a, n);
        else
            ns_ins_def(a, n);
        return;
    }
    if (depth >= NS_RSS_MAX_DEPTH || sample > NS_RSS_MAX_SAMPLE) {
        ns_ins_def(a, n);
        return;
    }

    ns_item smp[NS_RSS_MAX_SAMPLE];
    uint32_t s = *state;
    for (long t = 0; t < sample; t++) {
        s = ns_lcg_next(s);
        smp[t].key = a[(long)((uint64_t)s % (uint64_t)n)].key;
        smp[t].ref = 0;
    }
    *state = s;
    if (sample <= 16)
        ns_small_base(sp, smp, sample);
    else
        ns_ins_def(smp, sample);
    long ovs = sp->rss_oversampling;
    uint64_t s0 = smp[ovs - 1].key;
    uint64_t s1 = smp[2 * ovs - 1].key;
    uint64_t s2 = smp[3 * ovs - 1].key;

    ns_classify_block(a, n, s0, s1, s2, sp->rss_block, tags);
    long counts[4] = {0, 0, 0, 0};
    for (long i = 0; i < n; i++)
        counts[tags[i]]++;
    long largest = counts[0];
    for (int b = 1; b < 4; b++)
        if (counts[b] > largest)
            largest = counts[b];
    if (largest == n) { /* no progress possible (e.g. all keys equal) */
        ns_ins_def(a, n);
        return;
    }

    long off[4];
    off[0] = 0;
    off[1] = counts[0];
    off[2] = off[1] + counts[1];
    off[3] = off[2] + counts[2];
    for (long i = 0; i < n; i++)
        scratch[off[tags[i]]++] = a[i];
    memcpy(a, scratch, (size_t)n * sizeof(ns_item));

    long start = 0;
    for (int b = 0; b < 4; b++) {
        if (counts[b] > 1)
            ns_rss_rec(sp, a + start, counts[b], scratch + start,
                       tags + start, state, depth + 1);
        start += counts[b];
    }
}

/* ------------------------------------------------------------------ */
/* Hybrid quicksort                                                    */
/* ------------------------------------------------------------------ */

static long ns_partition(const ns_spec *sp, ns_item *a, long lo, long hi) {
    long mid = lo + (hi - lo) / 2;
    /* 3-element network on (lo, mid, hi); pivot = resulting middle */
    ns_cswap_dyn(sp->pivot_swap, &a[mid], &a[hi]);
    ns_cswap_dyn(sp->pivot_swap, &a[lo], &a[hi]);
    ns_cswap_dyn(sp->pivot_swap, &a[lo], &a[mid]);
    uint64_t pivot = a[mid].key;
    long i = lo, j = hi;
    for (;;) {
        while (a[i].key < pivot)
            i++;
        while (pivot < a[j].key)
            j--;
        if (i >= j)
            return j;
        ns_item t = a[i];
        a[i] = a[j];
        a[j] = t;
        i++;
        j--;
    }
}

static void ns_qs_base(const ns_spec *sp, ns_item *a, long n,
                       ns_item *scratch, uint8_t *tags, ns_qs_stats *st) {
    if (st) {
        st->base_calls++;
        if (n > st->max_base)
            st->max_base = n;
    }
    if (sp->qs_base_is_rss) {
        uint32_t state = sp->rss_sample_seed;
        ns_rss_rec(sp, a, n, scratch, tags, &state, 0);
    } else {
        ns_small_base(sp, a, n);
    }
}

static void ns_qs_rec(const ns_spec *sp, ns_item *a, long lo, long hi,
                      int depth, ns_item *scratch, uint8_t *tags,
                      ns_qs_stats *st) {
    for (;;) {
        long n = hi - lo + 1;
        if (n <= sp->qs_threshold) {
            if (n >= 2 && !sp->qs_final_pass)
                ns_qs_base(sp, a + lo, n, scratch + lo, tags + lo, st);
            return;
        }
        if (depth <= 0) {
            if (st)
                st->heap_calls++;
            ns_heapsort(a + lo, n);
            return;
        }
        depth--;
        long j = ns_partition(sp, a, lo, hi);
        if (st && st->check_partitions) {
            uint64_t left_max = a[lo].key;
            for (long t = lo + 1; t <= j; t++)
                if (a[t].key > left_max)
                    left_max = a[t].key;
            uint64_t right_min = a[j + 1].key;
            for (long t = j + 2; t <= hi; t++)
                if (a[t].key < right_min)
                    right_min = a[t].key;
            if (right_min < left_max)
                st->partition_violations++;
        }
        if (j - lo < hi - j - 1) {
            ns_qs_rec(sp, a, lo, j, depth, scratch, tags, st);
            lo = j + 1;
        } else {
            ns_qs_rec(sp, a, j + 1, hi, depth, scratch, tags, st);
            hi = j;
        }
    }
}

static int ns_floor_log2(long n) {
    int k = -1;
    while (n) {
        n >>= 1;
        k++;
    }
    return k;
}

static void ns_hybrid(const ns_spec *sp, ns_item *a, long n,
                      ns_item *scratch, uint8_t *tags, ns_qs_stats *st) {
    if (n < 2)
        return;
    int depth = sp->qs_depth_factor * ns_floor_log2(n);
    ns_qs_rec(sp, a, 0, n - 1, depth, scratch, tags, st);
    if (sp->qs_final_pass)
        ns_ins_def(a, n);
}

/* ------------------------------------------------------------------ */
/* Uniform sorter entry                                                */
/* ------------------------------------------------------------------ */

int ns_run_sorter(const ns_spec *sp, ns_item *a, long n, ns_item *scratch,
                  uint8_t *tags) {
    switch (sp->kind) {
    case 0: {
        if (n < 2)
            return 0;
        ns_net_fn fn = ns_net_lookup(sp->family, n, sp->swap);
        if (!fn)
            return -2;
        fn(a);
        return 0;
    }
    case 1:
        ns_insertion_sort(a, n, sp->ins_variant);
        return 0;
    case 2: {
        uint32_t state = sp->rss_sample_seed;
        ns_rss_rec(sp, a, n, scratch, tags, &state, 0);
        return 0;
    }
    case 3:
        ns_hybrid(sp, a, n, scratch, tags, NULL);
        return 0;
    case 4:
        ns_std_sort(a, n);
        return 0;
    default:
        return -2;
    }
}

int ns_hybrid_stats(const ns_spec *sp, ns_item *a, long n, ns_item *scratch,
                    uint8_t *tags, ns_qs_stats *st) {
    if (sp->kind != 3)
        return -2;
    ns_hybrid(sp, a, n, scratch, tags, st);
    return 0;
}

/* ------------------------------------------------------------------ */
/* Measurement loops                                                   */
/* ------------------------------------------------------------------ */

int ns_measure_oar(const ns_spec *sp, long size, long iterations,
                   uint32_t seed, ns_item *buf, ns_item *scratch,
                   uint8_t *tags, uint64_t *t1_out, uint64_t *t2_out) {
    /* Hoist network / insertion dispatch out of the timed loops. */
    ns_net_fn netf = NULL;
    int insv = -1;
    if (sp->kind == 0) {
        netf = ns_net_lookup(sp->family, size, sp->swap);
        if (!netf && size >= 2)
            return -2;
    } else if (sp->kind == 1) {
        insv = sp->ins_variant;
    }

    uint32_t s = seed;
    uint64_t zu, v, w;
    int ok;

    /* one unmeasured warm-up round */
    s = ns_fill(buf, size, s);
    v = ns_fp_search(buf, size, 1, &zu);
    if (netf)
        netf(buf);
    else if (insv >= 0)
        ns_insertion_sort(buf, size, insv);
    else if (ns_run_sorter(sp, buf, size, scratch, tags))
        return -2;
    ok = ns_scan_sorted(buf, size);
    w = ns_fp_at(buf, size, zu);
    if (!ok || w != v)
        return -1;

    int failed = 0;
    uint64_t t0 = ns_ticks();
    for (long it = 0; it < iterations; it++) {
        s = ns_fill(buf, size, s);
        v = ns_fp_search(buf, size, 1, &zu);
        if (netf)
            netf(buf);
        else if (insv >= 0)
            ns_insertion_sort(buf, size, insv);
        else
            ns_run_sorter(sp, buf, size, scratch, tags);
        ok = ns_scan_sorted(buf, size);
        w = ns_fp_at(buf, size, zu);
        failed |= !ok | (w != v);
    }
    *t1_out = ns_ticks() - t0;
    if (failed)
        return -1;

    s = seed; /* reseed: phase 2 replays the same input stream */
    t0 = ns_ticks();
    for (long it = 0; it < iterations; it++) {
        s = ns_fill(buf, size, s);
        v = ns_fp_search(buf, size, 1, &zu);
        ok = ns_scan_sorted(buf, size);
        w = ns_fp_at(buf, size, zu);
        ns_sink ^= v ^ w ^ (uint64_t)ok;
        ns_sim_checks++;
    }
    *t2_out = ns_ticks() - t0;
    return 0;
}

int ns_measure_air(const ns_spec *sp, long size, long narrays, uint32_t seed,
                   ns_item *big, ns_item *ref, ns_item *warm,
                   ns_item *scratch, uint8_t *tags, uint64_t *t_out) {
    long total = size * narrays;
    ns_net_fn netf = NULL;
    int insv = -1;
    if (sp->kind == 0) {
        netf = ns_net_lookup(sp->family, size, sp->swap);
        if (!netf && size >= 2)
            return -2;
    } else if (sp->kind == 1) {
        insv = sp->ins_variant;
    }

    ns_fill(big, total, seed);
    memcpy(ref, big, (size_t)total * sizeof(ns_item));
    for (long k = 0; k < narrays; k++)
        ns_std_sort(ref + k * size, size);

    /* warm-up on a throwaway copy of the first subarray */
    memcpy(warm, big, (size_t)size * sizeof(ns_item));
    if (ns_run_sorter(sp, warm, size, scratch, tags))
        return -2;

    uint64_t t0 = ns_ticks();
    for (long k = 0; k < narrays; k++) {
        ns_item *sub = big + k * size;
        if (netf)
            netf(sub);
        else if (insv >= 0)
            ns_insertion_sort(sub, size, insv);
        else
            ns_run_sorter(sp, sub, size, scratch, tags);
    }
    *t_out = ns_ticks() - t0;

    for (long i = 0; i < total; i++)
        if (big[i].key != ref[i].key)
            return -1;
    for (long k = 0; k < narrays; k++) {
        uint64_t sum_a = 0, sum_b = 0, xor_a = 0, xor_b = 0;
        for (long i = 0; i < size; i++) {
            uint64_t ra = big[k * size + i].ref;
            uint64_t rb = ref[k * size + i].ref;
            sum_a += ra;
            sum_b += rb;
            xor_a ^= ra;
            xor_b ^= rb;
        }
        if (sum_a != sum_b || xor_a != xor_b)
            return -1;
    }
    return 0;
}
