/* Unrolled BN-R network sorters, 2..16 channels.
   Generated by tools/gen_sorters.py -- do not edit. */
#include "netsort_core.h"

#define NS_NET_BN_R_2(CS, A) \
    CS(A, 0, 1)

static void ns_sort_bn_r_2_iswp(ns_item *a) { NS_NET_BN_R_2(NS_CS_ISWP, a) }
static void ns_sort_bn_r_2_tcop(ns_item *a) { NS_NET_BN_R_2(NS_CS_TCOP, a) }
static void ns_sort_bn_r_2_tie(ns_item *a) { NS_NET_BN_R_2(NS_CS_TIE, a) }
static void ns_sort_bn_r_2_jxhg(ns_item *a) { NS_NET_BN_R_2(NS_CS_JXHG, a) }
static void ns_sort_bn_r_2_cm4(ns_item *a) { NS_NET_BN_R_2(NS_CS_CM4, a) }
static void ns_sort_bn_r_2_cm4s(ns_item *a) { NS_NET_BN_R_2(NS_CS_CM4S, a) }
static void ns_sort_bn_r_2_cm6(ns_item *a) { NS_NET_BN_R_2(NS_CS_CM6, a) }
static void ns_sort_bn_r_2_cpm2(ns_item *a) { NS_NET_BN_R_2(NS_CS_CPM2, a) }
static void ns_sort_bn_r_2_cpp2(ns_item *a) { NS_NET_BN_R_2(NS_CS_CPP2, a) }

#define NS_MERGE_BN_R_3(CS, A) \
    CS(A, 0, 2) \
    CS(A, 0, 1)

static void ns_sort_bn_r_3_iswp(ns_item *a) { ns_sort_bn_r_2_iswp(a + 1); NS_MERGE_BN_R_3(NS_CS_ISWP, a) }
static void ns_sort_bn_r_3_tcop(ns_item *a) { ns_sort_bn_r_2_tcop(a + 1); NS_MERGE_BN_R_3(NS_CS_TCOP, a) }
static void ns_sort_bn_r_3_tie(ns_item *a) { ns_sort_bn_r_2_tie(a + 1); NS_MERGE_BN_R_3(NS_CS_TIE, a) }
static void ns_sort_bn_r_3_jxhg(ns_item *a) { ns_sort_bn_r_2_jxhg(a + 1); NS_MERGE_BN_R_3(NS_CS_JXHG, a) }
static void ns_sort_bn_r_3_cm4(ns_item *a) { ns_sort_bn_r_2_cm4(a + 1); NS_MERGE_BN_R_3(NS_CS_CM4, a) }
static void ns_sort_bn_r_3_cm4s(ns_item *a) { ns_sort_bn_r_2_cm4s(a + 1); NS_MERGE_BN_R_3(NS_CS_CM4S, a) }
static void ns_sort_bn_r_3_cm6(ns_item *a) { ns_sort_bn_r_2_cm6(a + 1); NS_MERGE_BN_R_3(NS_CS_CM6, a) }
static void ns_sort_bn_r_3_cpm2(ns_item *a) { ns_sort_bn_r_2_cpm2(a + 1); NS_MERGE_BN_R_3(NS_CS_CPM2, a) }
static void ns_sort_bn_r_3_cpp2(ns_item *a) { ns_sort_bn_r_2_cpp2(a + 1); NS_MERGE_BN_R_3(NS_CS_CPP2, a) }

#define NS_MERGE_BN_R_4(CS, A) \
    CS(A, 0, 2) \
    CS(A, 1, 3) \
    CS(A, 1, 2)

static void ns_sort_bn_r_4_iswp(ns_item *a) { ns_sort_bn_r_2_iswp(a); ns_sort_bn_r_2_iswp(a + 2); NS_MERGE_BN_R_4(NS_CS_ISWP, a) }
static void ns_sort_bn_r_4_tcop(ns_item *a) { ns_sort_bn_r_2_tcop(a); ns_sort_bn_r_2_tcop(a + 2); NS_MERGE_BN_R_4(NS_CS_TCOP, a) }
static void ns_sort_bn_r_4_tie(ns_item *a) { ns_sort_bn_r_2_tie(a); ns_sort_bn_r_2_tie(a + 2); NS_MERGE_BN_R_4(NS_CS_TIE, a) }
static void ns_sort_bn_r_4_jxhg(ns_item *a) { ns_sort_bn_r_2_jxhg(a); ns_sort_bn_r_2_jxhg(a + 2); NS_MERGE_BN_R_4(NS_CS_JXHG, a) }
static void ns_sort_bn_r_4_cm4(ns_item *a) { ns_sort_bn_r_2_cm4(a); ns_sort_bn_r_2_cm4(a + 2); NS_MERGE_BN_R_4(NS_CS_CM4, a) }
static void ns_sort_bn_r_4_cm4s(ns_item *a) { ns_sort_bn_r_2_cm4s(a); ns_sort_bn_r_2_cm4s(a + 2); NS_MERGE_BN_R_4(NS_CS_CM4S, a) }
static void ns_sort_bn_r_4_cm6(ns_item *a) { ns_sort_bn_r_2_cm6(a); ns_sort_bn_r_2_cm6(a + 2); NS_MERGE_BN_R_4(NS_CS_CM6, a) }
static void ns_sort_bn_r_4_cpm2(ns_item *a) { ns_sort_bn_r_2_cpm2(a); ns_sort_bn_r_2_cpm2(a + 2); NS_MERGE_BN_R_4(NS_CS_CPM2, a) }
static void ns_sort_bn_r_4_cpp2(ns_item *a) { ns_sort_bn_r_2_cpp2(a); ns_sort_bn_r_2_cpp2(a + 2); NS_MERGE_BN_R_4(NS_CS_CPP2, a) }

#define NS_MERGE_BN_R_5(CS, A) \
    CS(A, 0, 3) \
    CS(A, 0, 2) \
    CS(A, 1, 4) \
    CS(A, 1, 3) \
    CS(A, 1, 2)

static void ns_sort_bn_r_5_iswp(ns_item *a) { ns_sort_bn_r_2_iswp(a); ns_sort_bn_r_3_iswp(a + 2); NS_MERGE_BN_R_5(NS_CS_ISWP, a) }
static void ns_sort_bn_r_5_tcop(ns_item *a) { ns_sort_bn_r_2_tcop(a); ns_sort_bn_r_3_tcop(a + 2); NS_MERGE_BN_R_5(NS_CS_TCOP, a) }
static void ns_sort_bn_r_5_tie(ns_item *a) { ns_sort_bn_r_2_tie(a); ns_sort_bn_r_3_tie(a + 2); NS_MERGE_BN_R_5(NS_CS_TIE, a) }
static void ns_sort_bn_r_5_jxhg(ns_item *a) { ns_sort_bn_r_2_jxhg(a); ns_sort_bn_r_3_jxhg(a + 2); NS_MERGE_BN_R_5(NS_CS_JXHG, a) }
static void ns_sort_bn_r_5_cm4(ns_item *a) { ns_sort_bn_r_2_cm4(a); ns_sort_bn_r_3_cm4(a + 2); NS_MERGE_BN_R_5(NS_CS_CM4, a) }
static void ns_sort_bn_r_5_cm4s(ns_item *a) { ns_sort_bn_r_2_cm4s(a); ns_sort_bn_r_3_cm4s(a + 2); NS_MERGE_BN_R_5(NS_CS_CM4S, a) }
static void ns_sort_bn_r_5_cm6(ns_item *a) { ns_sort_bn_r_2_cm6(a); ns_sort_bn_r_3_cm6(a + 2); NS_MERGE_BN_R_5(NS_CS_CM6, a) }
static void ns_sort_bn_r_5_cpm2(ns_item *a) { ns_sort_bn_r_2_cpm2(a); ns_sort_bn_r_3_cpm2(a + 2); NS_MERGE_BN_R_5(NS_CS_CPM2, a) }
static void ns_sort_bn_r_5_cpp2(ns_item *a) { ns_sort_bn_r_2_cpp2(a); ns_sort_bn_r_3_cpp2(a + 2); NS_MERGE_BN_R_5(NS_CS_CPP2, a) }

#define NS_MERGE_BN_R_6(CS, A) \
    CS(A, 0, 3) \
    CS(A, 1, 4) \
    CS(A, 2, 5) \
    CS(A, 2, 4) \
    CS(A, 1, 3) \
    CS(A, 2, 3)

static void ns_sort_bn_r_6_iswp(ns_item *a) { ns_sort_bn_r_3_iswp(a); ns_sort_bn_r_3_iswp(a + 3); NS_MERGE_BN_R_6(NS_CS_ISWP, a) }
static void ns_sort_bn_r_6_tcop(ns_item *a) { ns_sort_bn_r_3_tcop(a); ns_sort_bn_r_3_tcop(a + 3); NS_MERGE_BN_R_6(NS_CS_TCOP, a) }
static void ns_sort_bn_r_6_tie(ns_item *a) { ns_sort_bn_r_3_tie(a); ns_sort_bn_r_3_tie(a + 3); NS_MERGE_BN_R_6(NS_CS_TIE, a) }
static void ns_sort_bn_r_6_jxhg(ns_item *a) { ns_sort_bn_r_3_jxhg(a); ns_sort_bn_r_3_jxhg(a + 3); NS_MERGE_BN_R_6(NS_CS_JXHG, a) }
static void ns_sort_bn_r_6_cm4(ns_item *a) { ns_sort_bn_r_3_cm4(a); ns_sort_bn_r_3_cm4(a + 3); NS_MERGE_BN_R_6(NS_CS_CM4, a) }
static void ns_sort_bn_r_6_cm4s(ns_item *a) { ns_sort_bn_r_3_cm4s(a); ns_sort_bn_r_3_cm4s(a + 3); NS_MERGE_BN_R_6(NS_CS_CM4S, a) }
static void ns_sort_bn_r_6_cm6(ns_item *a) { ns_sort_bn_r_3_cm6(a); ns_sort_bn_r_3_cm6(a + 3); NS_MERGE_BN_R_6(NS_CS_CM6, a) }
static void ns_sort_bn_r_6_cpm2(ns_item *a) { ns_sort_bn_r_3_cpm2(a); ns_sort_bn_r_3_cpm2(a + 3); NS_MERGE_BN_R_6(NS_CS_CPM2, a) }
static void ns_sort_bn_r_6_cpp2(ns_item *a) { ns_sort_bn_r_3_cpp2(a); ns_sort_bn_r_3_cpp2(a + 3); NS_MERGE_BN_R_6(NS_CS_CPP2, a) }

#define NS_MERGE_BN_R_7(CS, A) \
    CS(A, 0, 4) \
    CS(A, 0, 3) \
    CS(A, 1, 5) \
    CS(A, 2, 6) \
    CS(A, 2, 5) \
    CS(A, 1, 3) \
    CS(A, 2, 4) \
    CS(A, 2, 3)

static void ns_sort_bn_r_7_iswp(ns_item *a) { ns_sort_bn_r_3_iswp(a); ns_sort_bn_r_4_iswp(a + 3); NS_MERGE_BN_R_7(NS_CS_ISWP, a) }
static void ns_sort_bn_r_7_tcop(ns_item *a) { ns_sort_bn_r_3_tcop(a); ns_sort_bn_r_4_tcop(a + 3); NS_MERGE_BN_R_7(NS_CS_TCOP, a) }
static void ns_sort_bn_r_7_tie(ns_item *a) { ns_sort_bn_r_3_tie(a); ns_sort_bn_r_4_tie(a + 3); NS_MERGE_BN_R_7(NS_CS_TIE, a) }
static void ns_sort_bn_r_7_jxhg(ns_item *a) { ns_sort_bn_r_3_jxhg(a); ns_sort_bn_r_4_jxhg(a + 3); NS_MERGE_BN_R_7(NS_CS_JXHG, a) }
static void ns_sort_bn_r_7_cm4(ns_item *a) { ns_sort_bn_r_3_cm4(a); ns_sort_bn_r_4_cm4(a + 3); NS_MERGE_BN_R_7(NS_CS_CM4, a) }
static void ns_sort_bn_r_7_cm4s(ns_item *a) { ns_sort_bn_r_3_cm4s(a); ns_sort_bn_r_4_cm4s(a + 3); NS_MERGE_BN_R_7(NS_CS_CM4S, a) }
static void ns_sort_bn_r_7_cm6(ns_item *a) { ns_sort_bn_r_3_cm6(a); ns_sort_bn_r_4_cm6(a + 3); NS_MERGE_BN_R_7(NS_CS_CM6, a) }
static void ns_sort_bn_r_7_cpm2(ns_item *a) { ns_sort_bn_r_3_cpm2(a); ns_sort_bn_r_4_cpm2(a + 3); NS_MERGE_BN_R_7(NS_CS_CPM2, a) }
static void ns_sort_bn_r_7_cpp2(ns_item *a) { ns_sort_bn_r_3_cpp2(a); ns_sort_bn_r_4_cpp2(a + 3); NS_MERGE_BN_R_7(NS_CS_CPP2, a) }

#define NS_MERGE_BN_R_8(CS, A) \
    CS(A, 0, 4) \
    CS(A, 1, 5) \
    CS(A, 1, 4) \
    CS(A, 2, 6) \
    CS(A, 3, 7) \
    CS(A, 3, 6) \
    CS(A, 2, 4) \
    CS(A, 3, 5) \
    CS(A, 3, 4)

static void ns_sort_bn_r_8_iswp(ns_item *a) { ns_sort_bn_r_4_iswp(a); ns_sort_bn_r_4_iswp(a + 4); NS_MERGE_BN_R_8(NS_CS_ISWP, a) }
static void ns_sort_bn_r_8_tcop(ns_item *a) { ns_sort_bn_r_4_tcop(a); ns_sort_bn_r_4_tcop(a + 4); NS_MERGE_BN_R_8(NS_CS_TCOP, a) }
static void ns_sort_bn_r_8_tie(ns_item *a) { ns_sort_bn_r_4_tie(a); ns_sort_bn_r_4_tie(a + 4); NS_MERGE_BN_R_8(NS_CS_TIE, a) }
static void ns_sort_bn_r_8_jxhg(ns_item *a) { ns_sort_bn_r_4_jxhg(a); ns_sort_bn_r_4_jxhg(a + 4); NS_MERGE_BN_R_8(NS_CS_JXHG, a) }
static void ns_sort_bn_r_8_cm4(ns_item *a) { ns_sort_bn_r_4_cm4(a); ns_sort_bn_r_4_cm4(a + 4); NS_MERGE_BN_R_8(NS_CS_CM4, a) }
static void ns_sort_bn_r_8_cm4s(ns_item *a) { ns_sort_bn_r_4_cm4s(a); ns_sort_bn_r_4_cm4s(a + 4); NS_MERGE_BN_R_8(NS_CS_CM4S, a) }
static void ns_sort_bn_r_8_cm6(ns_item *a) { ns_sort_bn_r_4_cm6(a); ns_sort_bn_r_4_cm6(a + 4); NS_MERGE_BN_R_8(NS_CS_CM6, a) }
static void ns_sort_bn_r_8_cpm2(ns_item *a) { ns_sort_bn_r_4_cpm2(a); ns_sort_bn_r_4_cpm2(a + 4); NS_MERGE_BN_R_8(NS_CS_CPM2, a) }
static void ns_sort_bn_r_8_cpp2(ns_item *a) { ns_sort_bn_r_4_cpp2(a); ns_sort_bn_r_4_cpp2(a + 4); NS_MERGE_BN_R_8(NS_CS_CPP2, a) }

#define NS_MERGE_BN_R_9(CS, A) \
    CS(A, 0, 5) \
    CS(A, 0, 4) \
    CS(A, 1, 6) \
    CS(A, 1, 5) \
    CS(A, 1, 4) \
    CS(A, 2, 7) \
    CS(A, 3, 8) \
    CS(A, 3, 7) \
    CS(A, 2, 5) \
    CS(A, 2, 4) \
    CS(A, 3, 6) \
    CS(A, 3, 5) \
    CS(A, 3, 4)

static void ns_sort_bn_r_9_iswp(ns_item *a) { ns_sort_bn_r_4_iswp(a); ns_sort_bn_r_5_iswp(a + 4); NS_MERGE_BN_R_9(NS_CS_ISWP, a) }
static void ns_sort_bn_r_9_tcop(ns_item *a) { ns_sort_bn_r_4_tcop(a); ns_sort_bn_r_5_tcop(a + 4); NS_MERGE_BN_R_9(NS_CS_TCOP, a) }
static void ns_sort_bn_r_9_tie(ns_item *a) { ns_sort_bn_r_4_tie(a); ns_sort_bn_r_5_tie(a + 4); NS_MERGE_BN_R_9(NS_CS_TIE, a) }
static void ns_sort_bn_r_9_jxhg(ns_item *a) { ns_sort_bn_r_4_jxhg(a); ns_sort_bn_r_5_jxhg(a + 4); NS_MERGE_BN_R_9(NS_CS_JXHG, a) }
static void ns_sort_bn_r_9_cm4(ns_item *a) { ns_sort_bn_r_4_cm4(a); ns_sort_bn_r_5_cm4(a + 4); NS_MERGE_BN_R_9(NS_CS_CM4, a) }
static void ns_sort_bn_r_9_cm4s(ns_item *a) { ns_sort_bn_r_4_cm4s(a); ns_sort_bn_r_5_cm4s(a + 4); NS_MERGE_BN_R_9(NS_CS_CM4S, a) }
static void ns_sort_bn_r_9_cm6(ns_item *a) { ns_sort_bn_r_4_cm6(a); ns_sort_bn_r_5_cm6(a + 4); NS_MERGE_BN_R_9(NS_CS_CM6, a) }
static void ns_sort_bn_r_9_cpm2(ns_item *a) { ns_sort_bn_r_4_cpm2(a); ns_sort_bn_r_5_cpm2(a + 4); NS_MERGE_BN_R_9(NS_CS_CPM2, a) }
static void ns_sort_bn_r_9_cpp2(ns_item *a) { ns_sort_bn_r_4_cpp2(a); ns_sort_bn_r_5_cpp2(a + 4); NS_MERGE_BN_R_9(NS_CS_CPP2, a) }

#define NS_MERGE_BN_R_10(CS, A) \
    CS(A, 0, 5) \
    CS(A, 1, 6) \
    CS(A, 1, 5) \
    CS(A, 2, 7) \
    CS(A, 3, 8) \
    CS(A, 4, 9) \
    CS(A, 4, 8) \
    CS(A, 3, 7) \
    CS(A, 4, 7) \
    CS(A, 2, 5) \
    CS(A, 3, 6) \
    CS(A, 4, 6) \
    CS(A, 3, 5) \
    CS(A, 4, 5)

static void ns_sort_bn_r_10_iswp(ns_item *a) { ns_sort_bn_r_5_iswp(a); ns_sort_bn_r_5_iswp(a + 5); NS_MERGE_BN_R_10(NS_CS_ISWP, a) }
static void ns_sort_bn_r_10_tcop(ns_item *a) { ns_sort_bn_r_5_tcop(a); ns_sort_bn_r_5_tcop(a + 5); NS_MERGE_BN_R_10(NS_CS_TCOP, a) }
static void ns_sort_bn_r_10_tie(ns_item *a) { ns_sort_bn_r_5_tie(a); ns_sort_bn_r_5_tie(a + 5); NS_MERGE_BN_R_10(NS_CS_TIE, a) }
static void ns_sort_bn_r_10_jxhg(ns_item *a) { ns_sort_bn_r_5_jxhg(a); ns_sort_bn_r_5_jxhg(a + 5); NS_MERGE_BN_R_10(NS_CS_JXHG, a) }
static void ns_sort_bn_r_10_cm4(ns_item *a) { ns_sort_bn_r_5_cm4(a); ns_sort_bn_r_5_cm4(a + 5); NS_MERGE_BN_R_10(NS_CS_CM4, a) }
static void ns_sort_bn_r_10_cm4s(ns_item *a) { ns_sort_bn_r_5_cm4s(a); ns_sort_bn_r_5_cm4s(a + 5); NS_MERGE_BN_R_10(NS_CS_CM4S, a) }
static void ns_sort_bn_r_10_cm6(ns_item *a) { ns_sort_bn_r_5_cm6(a); ns_sort_bn_r_5_cm6(a + 5); NS_MERGE_BN_R_10(NS_CS_CM6, a) }
static void ns_sort_bn_r_10_cpm2(ns_item *a) { ns_sort_bn_r_5_cpm2(a); ns_sort_bn_r_5_cpm2(a + 5); NS_MERGE_BN_R_10(NS_CS_CPM2, a) }
static void ns_sort_bn_r_10_cpp2(ns_item *a) { ns_sort_bn_r_5_cpp2(a); ns_sort_bn_r_5_cpp2(a + 5); NS_MERGE_BN_R_10(NS_CS_CPP2, a) }

#define NS_MERGE_BN_R_11(CS, A) \
    CS(A, 0, 6) \
    CS(A, 0, 5) \
    CS(A, 1, 7) \
    CS(A, 1, 6) \
    CS(A, 1, 5) \
    CS(A, 2, 8) \
    CS(A, 3, 9) \
    CS(A, 4, 10) \
    CS(A, 4, 9) \
    CS(A, 3, 8) \
    CS(A, 4, 8) \
    CS(A, 2, 5) \
    CS(A, 3, 6) \
    CS(A, 4, 7) \
    CS(A, 4, 6) \
    CS(A, 3, 5) \
    CS(A, 4, 5)

static void ns_sort_bn_r_11_iswp(ns_item *a) { ns_sort_bn_r_5_iswp(a); ns_sort_bn_r_6_iswp(a + 5); NS_MERGE_BN_R_11(NS_CS_ISWP, a) }
static void ns_sort_bn_r_11_tcop(ns_item *a) { ns_sort_bn_r_5_tcop(a); ns_sort_bn_r_6_tcop(a + 5); NS_MERGE_BN_R_11(NS_CS_TCOP, a) }
static void ns_sort_bn_r_11_tie(ns_item *a) { ns_sort_bn_r_5_tie(a); ns_sort_bn_r_6_tie(a + 5); NS_MERGE_BN_R_11(NS_CS_TIE, a) }
static void ns_sort_bn_r_11_jxhg(ns_item *a) { ns_sort_bn_r_5_jxhg(a); ns_sort_bn_r_6_jxhg(a + 5); NS_MERGE_BN_R_11(NS_CS_JXHG, a) }
static void ns_sort_bn_r_11_cm4(ns_item *a) { ns_sort_bn_r_5_cm4(a); ns_sort_bn_r_6_cm4(a + 5); NS_MERGE_BN_R_11(NS_CS_CM4, a) }
static void ns_sort_bn_r_11_cm4s(ns_item *a) { ns_sort_bn_r_5_cm4s(a); ns_sort_bn_r_6_cm4s(a + 5); NS_MERGE_BN_R_11(NS_CS_CM4S, a) }
static void ns_sort_bn_r_11_cm6(ns_item *a) { ns_sort_bn_r_5_cm6(a); ns_sort_bn_r_6_cm6(a + 5); NS_MERGE_BN_R_11(NS_CS_CM6, a) }
static void ns_sort_bn_r_11_cpm2(ns_item *a) { ns_sort_bn_r_5_cpm2(a); ns_sort_bn_r_6_cpm2(a + 5); NS_MERGE_BN_R_11(NS_CS_CPM2, a) }
static void ns_sort_bn_r_11_cpp2(ns_item *a) { ns_sort_bn_r_5_cpp2(a); ns_sort_bn_r_6_cpp2(a + 5); NS_MERGE_BN_R_11(NS_CS_CPP2, a) }

#define NS_MERGE_BN_R_12(CS, A) \
    CS(A, 0, 6) \
    CS(A, 1, 7) \
    CS(A, 2, 8) \
    CS(A, 2, 7) \
    CS(A, 1, 6) \
    CS(A, 2, 6) \
    CS(A, 3, 9) \
    CS(A, 4, 10) \
    CS(A, 5, 11) \
    CS(A, 5, 10) \
    CS(A, 4, 9) \
    CS(A, 5, 9) \
    CS(A, 3, 6) \
    CS(A, 4, 7) \
    CS(A, 5, 8) \
    CS(A, 5, 7) \
    CS(A, 4, 6) \
    CS(A, 5, 6)

static void ns_sort_bn_r_12_iswp(ns_item *a) { ns_sort_bn_r_6_iswp(a); ns_sort_bn_r_6_iswp(a + 6); NS_MERGE_BN_R_12(NS_CS_ISWP, a) }
static void ns_sort_bn_r_12_tcop(ns_item *a) { ns_sort_bn_r_6_tcop(a); ns_sort_bn_r_6_tcop(a + 6); NS_MERGE_BN_R_12(NS_CS_TCOP, a) }
static void ns_sort_bn_r_12_tie(ns_item *a) { ns_sort_bn_r_6_tie(a); ns_sort_bn_r_6_tie(a + 6); NS_MERGE_BN_R_12(NS_CS_TIE, a) }
static void ns_sort_bn_r_12_jxhg(ns_item *a) { ns_sort_bn_r_6_jxhg(a); ns_sort_bn_r_6_jxhg(a + 6); NS_MERGE_BN_R_12(NS_CS_JXHG, a) }
static void ns_sort_bn_r_12_cm4(ns_item *a) { ns_sort_bn_r_6_cm4(a); ns_sort_bn_r_6_cm4(a + 6); NS_MERGE_BN_R_12(NS_CS_CM4, a) }
static void ns_sort_bn_r_12_cm4s(ns_item *a) { ns_sort_bn_r_6_cm4s(a); ns_sort_bn_r_6_cm4s(a + 6); NS_MERGE_BN_R_12(NS_CS_CM4S, a) }
static void ns_sort_bn_r_12_cm6(ns_item *a) { ns_sort_bn_r_6_cm6(a); ns_sort_bn_r_6_cm6(a + 6); NS_MERGE_BN_R_12(NS_CS_CM6, a) }
static void ns_sort_bn_r_12_cpm2(ns_item *a) { ns_sort_bn_r_6_cpm2(a); ns_sort_bn_r_6_cpm2(a + 6); NS_MERGE_BN_R_12(NS_CS_CPM2, a) }
static void ns_sort_bn_r_12_cpp2(ns_item *a) { ns_sort_bn_r_6_cpp2(a); ns_sort_bn_r_6_cpp2(a + 6); NS_MERGE_BN_R_12(NS_CS_CPP2, a) }

#define NS_MERGE_BN_R_13(CS, A) \
    CS(A, 0, 7) \
    CS(A, 0, 6) \
    CS(A, 1, 8) \
    CS(A, 2, 9) \
    CS(A, 2, 8) \
    CS(A, 1, 6) \
    CS(A, 2, 7) \
    CS(A, 2, 6) \
    CS(A, 3, 10) \
    CS(A, 4, 11) \
    CS(A, 5, 12) \
    CS(A, 5, 11) \
    CS(A, 4, 10) \
    CS(A, 5, 10) \
    CS(A, 3, 7) \
    CS(A, 3, 6) \
    CS(A, 4, 8) \
    CS(A, 5, 9) \
    CS(A, 5, 8) \
    CS(A, 4, 6) \
    CS(A, 5, 7) \
    CS(A, 5, 6)

static void ns_sort_bn_r_13_iswp(ns_item *a) { ns_sort_bn_r_6_iswp(a); ns_sort_bn_r_7_iswp(a + 6); NS_MERGE_BN_R_13(NS_CS_ISWP, a) }
static void ns_sort_bn_r_13_tcop(ns_item *a) { ns_sort_bn_r_6_tcop(a); ns_sort_bn_r_7_tcop(a + 6); NS_MERGE_BN_R_13(NS_CS_TCOP, a) }
static void ns_sort_bn_r_13_tie(ns_item *a) { ns_sort_bn_r_6_tie(a); ns_sort_bn_r_7_tie(a + 6); NS_MERGE_BN_R_13(NS_CS_TIE, a) }
static void ns_sort_bn_r_13_jxhg(ns_item *a) { ns_sort_bn_r_6_jxhg(a); ns_sort_bn_r_7_jxhg(a + 6); NS_MERGE_BN_R_13(NS_CS_JXHG, a) }
static void ns_sort_bn_r_13_cm4(ns_item *a) { ns_sort_bn_r_6_cm4(a); ns_sort_bn_r_7_cm4(a + 6); NS_MERGE_BN_R_13(NS_CS_CM4, a) }
static void ns_sort_bn_r_13_cm4s(ns_item *a) { ns_sort_bn_r_6_cm4s(a); ns_sort_bn_r_7_cm4s(a + 6); NS_MERGE_BN_R_13(NS_CS_CM4S, a) }
static void ns_sort_bn_r_13_cm6(ns_item *a) { ns_sort_bn_r_6_cm6(a); ns_sort_bn_r_7_cm6(a + 6); NS_MERGE_BN_R_13(NS_CS_CM6, a) }
static void ns_sort_bn_r_13_cpm2(ns_item *a) { ns_sort_bn_r_6_cpm2(a); ns_sort_bn_r_7_cpm2(a + 6); NS_MERGE_BN_R_13(NS_CS_CPM2, a) }
static void ns_sort_bn_r_13_cpp2(ns_item *a) { ns_sort_bn_r_6_cpp2(a); ns_sort_bn_r_7_cpp2(a + 6); NS_MERGE_BN_R_13(NS_CS_CPP2, a) }

#define NS_MERGE_BN_R_14(CS, A) \
    CS(A, 0, 7) \
    CS(A, 1, 8) \
    CS(A, 2, 9) \
    CS(A, 2, 8) \
    CS(A, 1, 7) \
    CS(A, 2, 7) \
    CS(A, 3, 10) \
    CS(A, 4, 11) \
    CS(A, 4, 10) \
    CS(A, 5, 12) \
    CS(A, 6, 13) \
    CS(A, 6, 12) \
    CS(A, 5, 10) \
    CS(A, 6, 11) \
    CS(A, 6, 10) \
    CS(A, 3, 7) \
    CS(A, 4, 8) \
    CS(A, 4, 7) \
    CS(A, 5, 9) \
    CS(A, 6, 9) \
    CS(A, 5, 7) \
    CS(A, 6, 8) \
    CS(A, 6, 7)

static void ns_sort_bn_r_14_iswp(ns_item *a) { ns_sort_bn_r_7_iswp(a); ns_sort_bn_r_7_iswp(a + 7); NS_MERGE_BN_R_14(NS_CS_ISWP, a) }
static void ns_sort_bn_r_14_tcop(ns_item *a) { ns_sort_bn_r_7_tcop(a); ns_sort_bn_r_7_tcop(a + 7); NS_MERGE_BN_R_14(NS_CS_TCOP, a) }
static void ns_sort_bn_r_14_tie(ns_item *a) { ns_sort_bn_r_7_tie(a); ns_sort_bn_r_7_tie(a + 7); NS_MERGE_BN_R_14(NS_CS_TIE, a) }
static void ns_sort_bn_r_14_jxhg(ns_item *a) { ns_sort_bn_r_7_jxhg(a); ns_sort_bn_r_7_jxhg(a + 7); NS_MERGE_BN_R_14(NS_CS_JXHG, a) }
static void ns_sort_bn_r_14_cm4(ns_item *a) { ns_sort_bn_r_7_cm4(a); ns_sort_bn_r_7_cm4(a + 7); NS_MERGE_BN_R_14(NS_CS_CM4, a) }
static void ns_sort_bn_r_14_cm4s(ns_item *a) { ns_sort_bn_r_7_cm4s(a); ns_sort_bn_r_7_cm4s(a + 7); NS_MERGE_BN_R_14(NS_CS_CM4S, a) }
static void ns_sort_bn_r_14_cm6(ns_item *a) { ns_sort_bn_r_7_cm6(a); ns_sort_bn_r_7_cm6(a + 7); NS_MERGE_BN_R_14(NS_CS_CM6, a) }
static void ns_sort_bn_r_14_cpm2(ns_item *a) { ns_sort_bn_r_7_cpm2(a); ns_sort_bn_r_7_cpm2(a + 7); NS_MERGE_BN_R_14(NS_CS_CPM2, a) }
static void ns_sort_bn_r_14_cpp2(ns_item *a) { ns_sort_bn_r_7_cpp2(a); ns_sort_bn_r_7_cpp2(a + 7); NS_MERGE_BN_R_14(NS_CS_CPP2, a) }

#define NS_MERGE_BN_R_15(CS, A) \
    CS(A, 0, 8) \
    CS(A, 0, 7) \
    CS(A, 1, 9) \
    CS(A, 2, 10) \
    CS(A, 2, 9) \
    CS(A, 1, 7) \
    CS(A, 2, 8) \
    CS(A, 2, 7) \
    CS(A, 3, 11) \
    CS(A, 4, 12) \
    CS(A, 4, 11) \
    CS(A, 5, 13) \
    CS(A, 6, 14) \
    CS(A, 6, 13) \
    CS(A, 5, 11) \
    CS(A, 6, 12) \
    CS(A, 6, 11) \
    CS(A, 3, 7) \
    CS(A, 4, 8) \
    CS(A, 4, 7) \
    CS(A, 5, 9) \
    CS(A, 6, 10) \
    CS(A, 6, 9) \
    CS(A, 5, 7) \
    CS(A, 6, 8) \
    CS(A, 6, 7)

static void ns_sort_bn_r_15_iswp(ns_item *a) { ns_sort_bn_r_7_iswp(a); ns_sort_bn_r_8_iswp(a + 7); NS_MERGE_BN_R_15(NS_CS_ISWP, a) }
static void ns_sort_bn_r_15_tcop(ns_item *a) { ns_sort_bn_r_7_tcop(a); ns_sort_bn_r_8_tcop(a + 7); NS_MERGE_BN_R_15(NS_CS_TCOP, a) }
static void ns_sort_bn_r_15_tie(ns_item *a) { ns_sort_bn_r_7_tie(a); ns_sort_bn_r_8_tie(a + 7); NS_MERGE_BN_R_15(NS_CS_TIE, a) }
static void ns_sort_bn_r_15_jxhg(ns_item *a) { ns_sort_bn_r_7_jxhg(a); ns_sort_bn_r_8_jxhg(a + 7); NS_MERGE_BN_R_15(NS_CS_JXHG, a) }
static void ns_sort_bn_r_15_cm4(ns_item *a) { ns_sort_bn_r_7_cm4(a); ns_sort_bn_r_8_cm4(a + 7); NS_MERGE_BN_R_15(NS_CS_CM4, a) }
static void ns_sort_bn_r_15_cm4s(ns_item *a) { ns_sort_bn_r_7_cm4s(a); ns_sort_bn_r_8_cm4s(a + 7); NS_MERGE_BN_R_15(NS_CS_CM4S, a) }
static void ns_sort_bn_r_15_cm6(ns_item *a) { ns_sort_bn_r_7_cm6(a); ns_sort_bn_r_8_cm6(a + 7); NS_MERGE_BN_R_15(NS_CS_CM6, a) }
static void ns_sort_bn_r_15_cpm2(ns_item *a) { ns_sort_bn_r_7_cpm2(a); ns_sort_bn_r_8_cpm2(a + 7); NS_MERGE_BN_R_15(NS_CS_CPM2, a) }
static void ns_sort_bn_r_15_cpp2(ns_item *a) { ns_sort_bn_r_7_cpp2(a); ns_sort_bn_r_8_cpp2(a + 7); NS_MERGE_BN_R_15(NS_CS_CPP2, a) }

#define NS_MERGE_BN_R_16(CS, A) \
    CS(A, 0, 8) \
    CS(A, 1, 9) \
    CS(A, 1, 8) \
    CS(A, 2, 10) \
    CS(A, 3, 11) \
    CS(A, 3, 10) \
    CS(A, 2, 8) \
    CS(A, 3, 9) \
    CS(A, 3, 8) \
    CS(A, 4, 12) \
    CS(A, 5, 13) \
    CS(A, 5, 12) \
    CS(A, 6, 14) \
    CS(A, 7, 15) \
    CS(A, 7, 14) \
    CS(A, 6, 12) \
    CS(A, 7, 13) \
    CS(A, 7, 12) \
    CS(A, 4, 8) \
    CS(A, 5, 9) \
    CS(A, 5, 8) \
    CS(A, 6, 10) \
    CS(A, 7, 11) \
    CS(A, 7, 10) \
    CS(A, 6, 8) \
    CS(A, 7, 9) \
    CS(A, 7, 8)

static void ns_sort_bn_r_16_iswp(ns_item *a) { ns_sort_bn_r_8_iswp(a); ns_sort_bn_r_8_iswp(a + 8); NS_MERGE_BN_R_16(NS_CS_ISWP, a) }
static void ns_sort_bn_r_16_tcop(ns_item *a) { ns_sort_bn_r_8_tcop(a); ns_sort_bn_r_8_tcop(a + 8); NS_MERGE_BN_R_16(NS_CS_TCOP, a) }
static void ns_sort_bn_r_16_tie(ns_item *a) { ns_sort_bn_r_8_tie(a); ns_sort_bn_r_8_tie(a + 8); NS_MERGE_BN_R_16(NS_CS_TIE, a) }
static void ns_sort_bn_r_16_jxhg(ns_item *a) { ns_sort_bn_r_8_jxhg(a); ns_sort_bn_r_8_jxhg(a + 8); NS_MERGE_BN_R_16(NS_CS_JXHG, a) }
static void ns_sort_bn_r_16_cm4(ns_item *a) { ns_sort_bn_r_8_cm4(a); ns_sort_bn_r_8_cm4(a + 8); NS_MERGE_BN_R_16(NS_CS_CM4, a) }
static void ns_sort_bn_r_16_cm4s(ns_item *a) { ns_sort_bn_r_8_cm4s(a); ns_sort_bn_r_8_cm4s(a + 8); NS_MERGE_BN_R_16(NS_CS_CM4S, a) }
static void ns_sort_bn_r_16_cm6(ns_item *a) { ns_sort_bn_r_8_cm6(a); ns_sort_bn_r_8_cm6(a + 8); NS_MERGE_BN_R_16(NS_CS_CM6, a) }
static void ns_sort_bn_r_16_cpm2(ns_item *a) { ns_sort_bn_r_8_cpm2(a); ns_sort_bn_r_8_cpm2(a + 8); NS_MERGE_BN_R_16(NS_CS_CPM2, a) }
static void ns_sort_bn_r_16_cpp2(ns_item *a) { ns_sort_bn_r_8_cpp2(a); ns_sort_bn_r_8_cpp2(a + 8); NS_MERGE_BN_R_16(NS_CS_CPP2, a) }

const ns_net_fn ns_net_table_bn_r[17][9] = {
    [2] = {ns_sort_bn_r_2_iswp, ns_sort_bn_r_2_tcop, ns_sort_bn_r_2_tie, ns_sort_bn_r_2_jxhg, ns_sort_bn_r_2_cm4, ns_sort_bn_r_2_cm4s, ns_sort_bn_r_2_cm6, ns_sort_bn_r_2_cpm2, ns_sort_bn_r_2_cpp2},
    [3] = {ns_sort_bn_r_3_iswp, ns_sort_bn_r_3_tcop, ns_sort_bn_r_3_tie, ns_sort_bn_r_3_jxhg, ns_sort_bn_r_3_cm4, ns_sort_bn_r_3_cm4s, ns_sort_bn_r_3_cm6, ns_sort_bn_r_3_cpm2, ns_sort_bn_r_3_cpp2},
    [4] = {ns_sort_bn_r_4_iswp, ns_sort_bn_r_4_tcop, ns_sort_bn_r_4_tie, ns_sort_bn_r_4_jxhg, ns_sort_bn_r_4_cm4, ns_sort_bn_r_4_cm4s, ns_sort_bn_r_4_cm6, ns_sort_bn_r_4_cpm2, ns_sort_bn_r_4_cpp2},
    [5] = {ns_sort_bn_r_5_iswp, ns_sort_bn_r_5_tcop, ns_sort_bn_r_5_tie, ns_sort_bn_r_5_jxhg, ns_sort_bn_r_5_cm4, ns_sort_bn_r_5_cm4s, ns_sort_bn_r_5_cm6, ns_sort_bn_r_5_cpm2, ns_sort_bn_r_5_cpp2},
    [6] = {ns_sort_bn_r_6_iswp, ns_sort_bn_r_6_tcop, ns_sort_bn_r_6_tie, ns_sort_bn_r_6_jxhg, ns_sort_bn_r_6_cm4, ns_sort_bn_r_6_cm4s, ns_sort_bn_r_6_cm6, ns_sort_bn_r_6_cpm2, ns_sort_bn_r_6_cpp2},
    [7] = {ns_sort_bn_r_7_iswp, ns_sort_bn_r_7_tcop, ns_sort_bn_r_7_tie, ns_sort_bn_r_7_jxhg, ns_sort_bn_r_7_cm4, ns_sort_bn_r_7_cm4s, ns_sort_bn_r_7_cm6, ns_sort_bn_r_7_cpm2, ns_sort_bn_r_7_cpp2},
    [8] = {ns_sort_bn_r_8_iswp, ns_sort_bn_r_8_tcop, ns_sort_bn_r_8_tie, ns_sort_bn_r_8_jxhg, ns_sort_bn_r_8_cm4, ns_sort_bn_r_8_cm4s, ns_sort_bn_r_8_cm6, ns_sort_bn_r_8_cpm2, ns_sort_bn_r_8_cpp2},
    [9] = {ns_sort_bn_r_9_iswp, ns_sort_bn_r_9_tcop, ns_sort_bn_r_9_tie, ns_sort_bn_r_9_jxhg, ns_sort_bn_r_9_cm4, ns_sort_bn_r_9_cm4s, ns_sort_bn_r_9_cm6, ns_sort_bn_r_9_cpm2, ns_sort_bn_r_9_cpp2},
    [10] = {ns_sort_bn_r_10_iswp, ns_sort_bn_r_10_tcop, ns_sort_bn_r_10_tie, ns_sort_bn_r_10_jxhg, ns_sort_bn_r_10_cm4, ns_sort_bn_r_10_cm4s, ns_sort_bn_r_10_cm6, ns_sort_bn_r_10_cpm2, ns_sort_bn_r_10_cpp2},
    [11] = {ns_sort_bn_r_11_iswp, ns_sort_bn_r_11_tcop, ns_sort_bn_r_11_tie, ns_sort_bn_r_11_jxhg, ns_sort_bn_r_11_cm4, ns_sort_bn_r_11_cm4s, ns_sort_bn_r_11_cm6, ns_sort_bn_r_11_cpm2, ns_sort_bn_r_11_cpp2},
    [12] = {ns_sort_bn_r_12_iswp, ns_sort_bn_r_12_tcop, ns_sort_bn_r_12_tie, ns_sort_bn_r_12_jxhg, ns_sort_bn_r_12_cm4, ns_sort_bn_r_12_cm4s, ns_sort_bn_r_12_cm6, ns_sort_bn_r_12_cpm2, ns_sort_bn_r_12_cpp2},
    [13] = {ns_sort_bn_r_13_iswp, ns_sort_bn_r_13_tcop, ns_sort_bn_r_13_tie, ns_sort_bn_r_13_jxhg, ns_sort_bn_r_13_cm4, ns_sort_bn_r_13_cm4s, ns_sort_bn_r_13_cm6, ns_sort_bn_r_13_cpm2, ns_sort_bn_r_13_cpp2},
    [14] = {ns_sort_bn_r_14_iswp, ns_sort_bn_r_14_tcop, ns_sort_bn_r_14_tie, ns_sort_bn_r_14_jxhg, ns_sort_bn_r_14_cm4, ns_sort_bn_r_14_cm4s, ns_sort_bn_r_14_cm6, ns_sort_bn_r_14_cpm2, ns_sort_bn_r_14_cpp2},
    [15] = {ns_sort_bn_r_15_iswp, ns_sort_bn_r_15_tcop, ns_sort_bn_r_15_tie, ns_sort_bn_r_15_jxhg, ns_sort_bn_r_15_cm4, ns_sort_bn_r_15_cm4s, ns_sort_bn_r_15_cm6, ns_sort_bn_r_15_cpm2, ns_sort_bn_r_15_cpp2},
    [16] = {ns_sort_bn_r_16_iswp, ns_sort_bn_r_16_tcop, ns_sort_bn_r_16_tie, ns_sort_bn_r_16_jxhg, ns_sort_bn_r_16_cm4, ns_sort_bn_r_16_cm4s, ns_sort_bn_r_16_cm6, ns_sort_bn_r_16_cpm2, ns_sort_bn_r_16_cpp2},
};
