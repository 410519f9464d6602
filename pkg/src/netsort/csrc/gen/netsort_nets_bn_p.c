/* Unrolled BN-P network sorters, 2..16 channels.
   Generated by tools/gen_sorters.py -- do not edit. */
#include "netsort_core.h"

#define NS_NET_BN_P_2(CS, A) \
    CS(A, 0, 1)

static void ns_sort_bn_p_2_iswp(ns_item *a) { NS_NET_BN_P_2(NS_CS_ISWP, a) }
static void ns_sort_bn_p_2_tcop(ns_item *a) { NS_NET_BN_P_2(NS_CS_TCOP, a) }
static void ns_sort_bn_p_2_tie(ns_item *a) { NS_NET_BN_P_2(NS_CS_TIE, a) }
static void ns_sort_bn_p_2_jxhg(ns_item *a) { NS_NET_BN_P_2(NS_CS_JXHG, a) }
static void ns_sort_bn_p_2_cm4(ns_item *a) { NS_NET_BN_P_2(NS_CS_CM4, a) }
static void ns_sort_bn_p_2_cm4s(ns_item *a) { NS_NET_BN_P_2(NS_CS_CM4S, a) }
static void ns_sort_bn_p_2_cm6(ns_item *a) { NS_NET_BN_P_2(NS_CS_CM6, a) }
static void ns_sort_bn_p_2_cpm2(ns_item *a) { NS_NET_BN_P_2(NS_CS_CPM2, a) }
static void ns_sort_bn_p_2_cpp2(ns_item *a) { NS_NET_BN_P_2(NS_CS_CPP2, a) }

#define NS_NET_BN_P_3(CS, A) \
    CS(A, 1, 2) \
    CS(A, 0, 2) \
    CS(A, 0, 1)

static void ns_sort_bn_p_3_iswp(ns_item *a) { NS_NET_BN_P_3(NS_CS_ISWP, a) }
static void ns_sort_bn_p_3_tcop(ns_item *a) { NS_NET_BN_P_3(NS_CS_TCOP, a) }
static void ns_sort_bn_p_3_tie(ns_item *a) { NS_NET_BN_P_3(NS_CS_TIE, a) }
static void ns_sort_bn_p_3_jxhg(ns_item *a) { NS_NET_BN_P_3(NS_CS_JXHG, a) }
static void ns_sort_bn_p_3_cm4(ns_item *a) { NS_NET_BN_P_3(NS_CS_CM4, a) }
static void ns_sort_bn_p_3_cm4s(ns_item *a) { NS_NET_BN_P_3(NS_CS_CM4S, a) }
static void ns_sort_bn_p_3_cm6(ns_item *a) { NS_NET_BN_P_3(NS_CS_CM6, a) }
static void ns_sort_bn_p_3_cpm2(ns_item *a) { NS_NET_BN_P_3(NS_CS_CPM2, a) }
static void ns_sort_bn_p_3_cpp2(ns_item *a) { NS_NET_BN_P_3(NS_CS_CPP2, a) }

#define NS_NET_BN_P_4(CS, A) \
    CS(A, 0, 1) \
    CS(A, 2, 3) \
    CS(A, 0, 2) \
    CS(A, 1, 3) \
    CS(A, 1, 2)

static void ns_sort_bn_p_4_iswp(ns_item *a) { NS_NET_BN_P_4(NS_CS_ISWP, a) }
static void ns_sort_bn_p_4_tcop(ns_item *a) { NS_NET_BN_P_4(NS_CS_TCOP, a) }
static void ns_sort_bn_p_4_tie(ns_item *a) { NS_NET_BN_P_4(NS_CS_TIE, a) }
static void ns_sort_bn_p_4_jxhg(ns_item *a) { NS_NET_BN_P_4(NS_CS_JXHG, a) }
static void ns_sort_bn_p_4_cm4(ns_item *a) { NS_NET_BN_P_4(NS_CS_CM4, a) }
static void ns_sort_bn_p_4_cm4s(ns_item *a) { NS_NET_BN_P_4(NS_CS_CM4S, a) }
static void ns_sort_bn_p_4_cm6(ns_item *a) { NS_NET_BN_P_4(NS_CS_CM6, a) }
static void ns_sort_bn_p_4_cpm2(ns_item *a) { NS_NET_BN_P_4(NS_CS_CPM2, a) }
static void ns_sort_bn_p_4_cpp2(ns_item *a) { NS_NET_BN_P_4(NS_CS_CPP2, a) }

#define NS_NET_BN_P_5(CS, A) \
    CS(A, 0, 1) \
    CS(A, 3, 4) \
    CS(A, 2, 4) \
    CS(A, 2, 3) \
    CS(A, 1, 4) \
    CS(A, 0, 3) \
    CS(A, 0, 2) \
    CS(A, 1, 3) \
    CS(A, 1, 2)

static void ns_sort_bn_p_5_iswp(ns_item *a) { NS_NET_BN_P_5(NS_CS_ISWP, a) }
static void ns_sort_bn_p_5_tcop(ns_item *a) { NS_NET_BN_P_5(NS_CS_TCOP, a) }
static void ns_sort_bn_p_5_tie(ns_item *a) { NS_NET_BN_P_5(NS_CS_TIE, a) }
static void ns_sort_bn_p_5_jxhg(ns_item *a) { NS_NET_BN_P_5(NS_CS_JXHG, a) }
static void ns_sort_bn_p_5_cm4(ns_item *a) { NS_NET_BN_P_5(NS_CS_CM4, a) }
static void ns_sort_bn_p_5_cm4s(ns_item *a) { NS_NET_BN_P_5(NS_CS_CM4S, a) }
static void ns_sort_bn_p_5_cm6(ns_item *a) { NS_NET_BN_P_5(NS_CS_CM6, a) }
static void ns_sort_bn_p_5_cpm2(ns_item *a) { NS_NET_BN_P_5(NS_CS_CPM2, a) }
static void ns_sort_bn_p_5_cpp2(ns_item *a) { NS_NET_BN_P_5(NS_CS_CPP2, a) }

#define NS_NET_BN_P_6(CS, A) \
    CS(A, 1, 2) \
    CS(A, 4, 5) \
    CS(A, 0, 2) \
    CS(A, 3, 5) \
    CS(A, 0, 1) \
    CS(A, 3, 4) \
    CS(A, 2, 5) \
    CS(A, 0, 3) \
    CS(A, 1, 4) \
    CS(A, 2, 4) \
    CS(A, 1, 3) \
    CS(A, 2, 3)

static void ns_sort_bn_p_6_iswp(ns_item *a) { NS_NET_BN_P_6(NS_CS_ISWP, a) }
static void ns_sort_bn_p_6_tcop(ns_item *a) { NS_NET_BN_P_6(NS_CS_TCOP, a) }
static void ns_sort_bn_p_6_tie(ns_item *a) { NS_NET_BN_P_6(NS_CS_TIE, a) }
static void ns_sort_bn_p_6_jxhg(ns_item *a) { NS_NET_BN_P_6(NS_CS_JXHG, a) }
static void ns_sort_bn_p_6_cm4(ns_item *a) { NS_NET_BN_P_6(NS_CS_CM4, a) }
static void ns_sort_bn_p_6_cm4s(ns_item *a) { NS_NET_BN_P_6(NS_CS_CM4S, a) }
static void ns_sort_bn_p_6_cm6(ns_item *a) { NS_NET_BN_P_6(NS_CS_CM6, a) }
static void ns_sort_bn_p_6_cpm2(ns_item *a) { NS_NET_BN_P_6(NS_CS_CPM2, a) }
static void ns_sort_bn_p_6_cpp2(ns_item *a) { NS_NET_BN_P_6(NS_CS_CPP2, a) }

#define NS_NET_BN_P_7(CS, A) \
    CS(A, 1, 2) \
    CS(A, 3, 4) \
    CS(A, 5, 6) \
    CS(A, 0, 2) \
    CS(A, 3, 5) \
    CS(A, 4, 6) \
    CS(A, 0, 1) \
    CS(A, 4, 5) \
    CS(A, 2, 6) \
    CS(A, 0, 4) \
    CS(A, 1, 5) \
    CS(A, 0, 3) \
    CS(A, 2, 5) \
    CS(A, 1, 3) \
    CS(A, 2, 4) \
    CS(A, 2, 3)

static void ns_sort_bn_p_7_iswp(ns_item *a) { NS_NET_BN_P_7(NS_CS_ISWP, a) }
static void ns_sort_bn_p_7_tcop(ns_item *a) { NS_NET_BN_P_7(NS_CS_TCOP, a) }
static void ns_sort_bn_p_7_tie(ns_item *a) { NS_NET_BN_P_7(NS_CS_TIE, a) }
static void ns_sort_bn_p_7_jxhg(ns_item *a) { NS_NET_BN_P_7(NS_CS_JXHG, a) }
static void ns_sort_bn_p_7_cm4(ns_item *a) { NS_NET_BN_P_7(NS_CS_CM4, a) }
static void ns_sort_bn_p_7_cm4s(ns_item *a) { NS_NET_BN_P_7(NS_CS_CM4S, a) }
static void ns_sort_bn_p_7_cm6(ns_item *a) { NS_NET_BN_P_7(NS_CS_CM6, a) }
static void ns_sort_bn_p_7_cpm2(ns_item *a) { NS_NET_BN_P_7(NS_CS_CPM2, a) }
static void ns_sort_bn_p_7_cpp2(ns_item *a) { NS_NET_BN_P_7(NS_CS_CPP2, a) }

#define NS_NET_BN_P_8(CS, A) \
    CS(A, 0, 1) \
    CS(A, 2, 3) \
    CS(A, 4, 5) \
    CS(A, 6, 7) \
    CS(A, 0, 2) \
    CS(A, 1, 3) \
    CS(A, 4, 6) \
    CS(A, 5, 7) \
    CS(A, 1, 2) \
    CS(A, 5, 6) \
    CS(A, 0, 4) \
    CS(A, 3, 7) \
    CS(A, 1, 5) \
    CS(A, 2, 6) \
    CS(A, 1, 4) \
    CS(A, 3, 6) \
    CS(A, 2, 4) \
    CS(A, 3, 5) \
    CS(A, 3, 4)

static void ns_sort_bn_p_8_iswp(ns_item *a) { NS_NET_BN_P_8(NS_CS_ISWP, a) }
static void ns_sort_bn_p_8_tcop(ns_item *a) { NS_NET_BN_P_8(NS_CS_TCOP, a) }
static void ns_sort_bn_p_8_tie(ns_item *a) { NS_NET_BN_P_8(NS_CS_TIE, a) }
static void ns_sort_bn_p_8_jxhg(ns_item *a) { NS_NET_BN_P_8(NS_CS_JXHG, a) }
static void ns_sort_bn_p_8_cm4(ns_item *a) { NS_NET_BN_P_8(NS_CS_CM4, a) }
static void ns_sort_bn_p_8_cm4s(ns_item *a) { NS_NET_BN_P_8(NS_CS_CM4S, a) }
static void ns_sort_bn_p_8_cm6(ns_item *a) { NS_NET_BN_P_8(NS_CS_CM6, a) }
static void ns_sort_bn_p_8_cpm2(ns_item *a) { NS_NET_BN_P_8(NS_CS_CPM2, a) }
static void ns_sort_bn_p_8_cpp2(ns_item *a) { NS_NET_BN_P_8(NS_CS_CPP2, a) }

#define NS_NET_BN_P_9(CS, A) \
    CS(A, 0, 1) \
    CS(A, 2, 3) \
    CS(A, 4, 5) \
    CS(A, 7, 8) \
    CS(A, 0, 2) \
    CS(A, 1, 3) \
    CS(A, 6, 8) \
    CS(A, 1, 2) \
    CS(A, 6, 7) \
    CS(A, 5, 8) \
    CS(A, 4, 7) \
    CS(A, 3, 8) \
    CS(A, 4, 6) \
    CS(A, 5, 7) \
    CS(A, 5, 6) \
    CS(A, 2, 7) \
    CS(A, 0, 5) \
    CS(A, 1, 6) \
    CS(A, 3, 7) \
    CS(A, 0, 4) \
    CS(A, 1, 5) \
    CS(A, 3, 6) \
    CS(A, 1, 4) \
    CS(A, 2, 5) \
    CS(A, 2, 4) \
    CS(A, 3, 5) \
    CS(A, 3, 4)

static void ns_sort_bn_p_9_iswp(ns_item *a) { NS_NET_BN_P_9(NS_CS_ISWP, a) }
static void ns_sort_bn_p_9_tcop(ns_item *a) { NS_NET_BN_P_9(NS_CS_TCOP, a) }
static void ns_sort_bn_p_9_tie(ns_item *a) { NS_NET_BN_P_9(NS_CS_TIE, a) }
static void ns_sort_bn_p_9_jxhg(ns_item *a) { NS_NET_BN_P_9(NS_CS_JXHG, a) }
static void ns_sort_bn_p_9_cm4(ns_item *a) { NS_NET_BN_P_9(NS_CS_CM4, a) }
static void ns_sort_bn_p_9_cm4s(ns_item *a) { NS_NET_BN_P_9(NS_CS_CM4S, a) }
static void ns_sort_bn_p_9_cm6(ns_item *a) { NS_NET_BN_P_9(NS_CS_CM6, a) }
static void ns_sort_bn_p_9_cpm2(ns_item *a) { NS_NET_BN_P_9(NS_CS_CPM2, a) }
static void ns_sort_bn_p_9_cpp2(ns_item *a) { NS_NET_BN_P_9(NS_CS_CPP2, a) }

#define NS_NET_BN_P_10(CS, A) \
    CS(A, 0, 1) \
    CS(A, 3, 4) \
    CS(A, 5, 6) \
    CS(A, 8, 9) \
    CS(A, 2, 4) \
    CS(A, 7, 9) \
    CS(A, 2, 3) \
    CS(A, 1, 4) \
    CS(A, 7, 8) \
    CS(A, 6, 9) \
    CS(A, 0, 3) \
    CS(A, 5, 8) \
    CS(A, 4, 9) \
    CS(A, 0, 2) \
    CS(A, 1, 3) \
    CS(A, 5, 7) \
    CS(A, 6, 8) \
    CS(A, 1, 2) \
    CS(A, 6, 7) \
    CS(A, 0, 5) \
    CS(A, 3, 8) \
    CS(A, 1, 6) \
    CS(A, 2, 7) \
    CS(A, 4, 8) \
    CS(A, 1, 5) \
    CS(A, 3, 7) \
    CS(A, 4, 7) \
    CS(A, 2, 5) \
    CS(A, 3, 6) \
    CS(A, 4, 6) \
    CS(A, 3, 5) \
    CS(A, 4, 5)

static void ns_sort_bn_p_10_iswp(ns_item *a) { NS_NET_BN_P_10(NS_CS_ISWP, a) }
static void ns_sort_bn_p_10_tcop(ns_item *a) { NS_NET_BN_P_10(NS_CS_TCOP, a) }
static void ns_sort_bn_p_10_tie(ns_item *a) { NS_NET_BN_P_10(NS_CS_TIE, a) }
static void ns_sort_bn_p_10_jxhg(ns_item *a) { NS_NET_BN_P_10(NS_CS_JXHG, a) }
static void ns_sort_bn_p_10_cm4(ns_item *a) { NS_NET_BN_P_10(NS_CS_CM4, a) }
static void ns_sort_bn_p_10_cm4s(ns_item *a) { NS_NET_BN_P_10(NS_CS_CM4S, a) }
static void ns_sort_bn_p_10_cm6(ns_item *a) { NS_NET_BN_P_10(NS_CS_CM6, a) }
static void ns_sort_bn_p_10_cpm2(ns_item *a) { NS_NET_BN_P_10(NS_CS_CPM2, a) }
static void ns_sort_bn_p_10_cpp2(ns_item *a) { NS_NET_BN_P_10(NS_CS_CPP2, a) }

#define NS_NET_BN_P_11(CS, A) \
    CS(A, 0, 1) \
    CS(A, 3, 4) \
    CS(A, 6, 7) \
    CS(A, 9, 10) \
    CS(A, 2, 4) \
    CS(A, 5, 7) \
    CS(A, 8, 10) \
    CS(A, 2, 3) \
    CS(A, 1, 4) \
    CS(A, 5, 6) \
    CS(A, 8, 9) \
    CS(A, 7, 10) \
    CS(A, 0, 3) \
    CS(A, 5, 8) \
    CS(A, 6, 9) \
    CS(A, 4, 10) \
    CS(A, 0, 2) \
    CS(A, 1, 3) \
    CS(A, 7, 9) \
    CS(A, 6, 8) \
    CS(A, 1, 2) \
    CS(A, 7, 8) \
    CS(A, 0, 6) \
    CS(A, 3, 9) \
    CS(A, 0, 5) \
    CS(A, 1, 7) \
    CS(A, 2, 8) \
    CS(A, 4, 9) \
    CS(A, 1, 6) \
    CS(A, 3, 8) \
    CS(A, 1, 5) \
    CS(A, 4, 8) \
    CS(A, 3, 6) \
    CS(A, 2, 5) \
    CS(A, 4, 7) \
    CS(A, 4, 6) \
    CS(A, 3, 5) \
    CS(A, 4, 5)

static void ns_sort_bn_p_11_iswp(ns_item *a) { NS_NET_BN_P_11(NS_CS_ISWP, a) }
static void ns_sort_bn_p_11_tcop(ns_item *a) { NS_NET_BN_P_11(NS_CS_TCOP, a) }
static void ns_sort_bn_p_11_tie(ns_item *a) { NS_NET_BN_P_11(NS_CS_TIE, a) }
static void ns_sort_bn_p_11_jxhg(ns_item *a) { NS_NET_BN_P_11(NS_CS_JXHG, a) }
static void ns_sort_bn_p_11_cm4(ns_item *a) { NS_NET_BN_P_11(NS_CS_CM4, a) }
static void ns_sort_bn_p_11_cm4s(ns_item *a) { NS_NET_BN_P_11(NS_CS_CM4S, a) }
static void ns_sort_bn_p_11_cm6(ns_item *a) { NS_NET_BN_P_11(NS_CS_CM6, a) }
static void ns_sort_bn_p_11_cpm2(ns_item *a) { NS_NET_BN_P_11(NS_CS_CPM2, a) }
static void ns_sort_bn_p_11_cpp2(ns_item *a) { NS_NET_BN_P_11(NS_CS_CPP2, a) }

#define NS_NET_BN_P_12(CS, A) \
    CS(A, 1, 2) \
    CS(A, 4, 5) \
    CS(A, 7, 8) \
    CS(A, 10, 11) \
    CS(A, 0, 2) \
    CS(A, 3, 5) \
    CS(A, 6, 8) \
    CS(A, 9, 11) \
    CS(A, 0, 1) \
    CS(A, 3, 4) \
    CS(A, 2, 5) \
    CS(A, 6, 7) \
    CS(A, 9, 10) \
    CS(A, 8, 11) \
    CS(A, 0, 3) \
    CS(A, 1, 4) \
    CS(A, 6, 9) \
    CS(A, 7, 10) \
    CS(A, 5, 11) \
    CS(A, 2, 4) \
    CS(A, 1, 3) \
    CS(A, 8, 10) \
    CS(A, 7, 9) \
    CS(A, 0, 6) \
    CS(A, 2, 3) \
    CS(A, 8, 9) \
    CS(A, 1, 7) \
    CS(A, 4, 10) \
    CS(A, 2, 8) \
    CS(A, 1, 6) \
    CS(A, 3, 9) \
    CS(A, 5, 10) \
    CS(A, 2, 7) \
    CS(A, 4, 9) \
    CS(A, 2, 6) \
    CS(A, 5, 9) \
    CS(A, 4, 7) \
    CS(A, 3, 6) \
    CS(A, 5, 8) \
    CS(A, 5, 7) \
    CS(A, 4, 6) \
    CS(A, 5, 6)

static void ns_sort_bn_p_12_iswp(ns_item *a) { NS_NET_BN_P_12(NS_CS_ISWP, a) }
static void ns_sort_bn_p_12_tcop(ns_item *a) { NS_NET_BN_P_12(NS_CS_TCOP, a) }
static void ns_sort_bn_p_12_tie(ns_item *a) { NS_NET_BN_P_12(NS_CS_TIE, a) }
static void ns_sort_bn_p_12_jxhg(ns_item *a) { NS_NET_BN_P_12(NS_CS_JXHG, a) }
static void ns_sort_bn_p_12_cm4(ns_item *a) { NS_NET_BN_P_12(NS_CS_CM4, a) }
static void ns_sort_bn_p_12_cm4s(ns_item *a) { NS_NET_BN_P_12(NS_CS_CM4S, a) }
static void ns_sort_bn_p_12_cm6(ns_item *a) { NS_NET_BN_P_12(NS_CS_CM6, a) }
static void ns_sort_bn_p_12_cpm2(ns_item *a) { NS_NET_BN_P_12(NS_CS_CPM2, a) }
static void ns_sort_bn_p_12_cpp2(ns_item *a) { NS_NET_BN_P_12(NS_CS_CPP2, a) }

#define NS_NET_BN_P_13(CS, A) \
    CS(A, 1, 2) \
    CS(A, 4, 5) \
    CS(A, 7, 8) \
    CS(A, 9, 10) \
    CS(A, 11, 12) \
    CS(A, 0, 2) \
    CS(A, 3, 5) \
    CS(A, 6, 8) \
    CS(A, 9, 11) \
    CS(A, 10, 12) \
    CS(A, 0, 1) \
    CS(A, 3, 4) \
    CS(A, 2, 5) \
    CS(A, 6, 7) \
    CS(A, 10, 11) \
    CS(A, 8, 12) \
    CS(A, 0, 3) \
    CS(A, 1, 4) \
    CS(A, 6, 10) \
    CS(A, 7, 11) \
    CS(A, 5, 12) \
    CS(A, 2, 4) \
    CS(A, 1, 3) \
    CS(A, 6, 9) \
    CS(A, 8, 11) \
    CS(A, 2, 3) \
    CS(A, 7, 9) \
    CS(A, 8, 10) \
    CS(A, 4, 11) \
    CS(A, 8, 9) \
    CS(A, 0, 7) \
    CS(A, 3, 10) \
    CS(A, 5, 11) \
    CS(A, 0, 6) \
    CS(A, 1, 8) \
    CS(A, 2, 9) \
    CS(A, 4, 10) \
    CS(A, 2, 8) \
    CS(A, 1, 6) \
    CS(A, 5, 10) \
    CS(A, 2, 7) \
    CS(A, 4, 8) \
    CS(A, 5, 9) \
    CS(A, 2, 6) \
    CS(A, 3, 7) \
    CS(A, 5, 8) \
    CS(A, 3, 6) \
    CS(A, 5, 7) \
    CS(A, 4, 6) \
    CS(A, 5, 6)

static void ns_sort_bn_p_13_iswp(ns_item *a) { NS_NET_BN_P_13(NS_CS_ISWP, a) }
static void ns_sort_bn_p_13_tcop(ns_item *a) { NS_NET_BN_P_13(NS_CS_TCOP, a) }
static void ns_sort_bn_p_13_tie(ns_item *a) { NS_NET_BN_P_13(NS_CS_TIE, a) }
static void ns_sort_bn_p_13_jxhg(ns_item *a) { NS_NET_BN_P_13(NS_CS_JXHG, a) }
static void ns_sort_bn_p_13_cm4(ns_item *a) { NS_NET_BN_P_13(NS_CS_CM4, a) }
static void ns_sort_bn_p_13_cm4s(ns_item *a) { NS_NET_BN_P_13(NS_CS_CM4S, a) }
static void ns_sort_bn_p_13_cm6(ns_item *a) { NS_NET_BN_P_13(NS_CS_CM6, a) }
static void ns_sort_bn_p_13_cpm2(ns_item *a) { NS_NET_BN_P_13(NS_CS_CPM2, a) }
static void ns_sort_bn_p_13_cpp2(ns_item *a) { NS_NET_BN_P_13(NS_CS_CPP2, a) }

#define NS_NET_BN_P_14(CS, A) \
    CS(A, 1, 2) \
    CS(A, 3, 4) \
    CS(A, 5, 6) \
    CS(A, 8, 9) \
    CS(A, 10, 11) \
    CS(A, 12, 13) \
    CS(A, 0, 2) \
    CS(A, 3, 5) \
    CS(A, 4, 6) \
    CS(A, 7, 9) \
    CS(A, 10, 12) \
    CS(A, 11, 13) \
    CS(A, 0, 1) \
    CS(A, 4, 5) \
    CS(A, 2, 6) \
    CS(A, 7, 8) \
    CS(A, 11, 12) \
    CS(A, 9, 13) \
    CS(A, 0, 4) \
    CS(A, 1, 5) \
    CS(A, 7, 11) \
    CS(A, 8, 12) \
    CS(A, 6, 13) \
    CS(A, 0, 3) \
    CS(A, 2, 5) \
    CS(A, 7, 10) \
    CS(A, 9, 12) \
    CS(A, 1, 3) \
    CS(A, 2, 4) \
    CS(A, 8, 10) \
    CS(A, 9, 11) \
    CS(A, 0, 7) \
    CS(A, 5, 12) \
    CS(A, 2, 3) \
    CS(A, 9, 10) \
    CS(A, 1, 8) \
    CS(A, 4, 11) \
    CS(A, 6, 12) \
    CS(A, 2, 9) \
    CS(A, 1, 7) \
    CS(A, 3, 10) \
    CS(A, 6, 11) \
    CS(A, 2, 8) \
    CS(A, 4, 10) \
    CS(A, 2, 7) \
    CS(A, 5, 10) \
    CS(A, 4, 8) \
    CS(A, 6, 10) \
    CS(A, 3, 7) \
    CS(A, 5, 9) \
    CS(A, 4, 7) \
    CS(A, 6, 9) \
    CS(A, 5, 7) \
    CS(A, 6, 8) \
    CS(A, 6, 7)

static void ns_sort_bn_p_14_iswp(ns_item *a) { NS_NET_BN_P_14(NS_CS_ISWP, a) }
static void ns_sort_bn_p_14_tcop(ns_item *a) { NS_NET_BN_P_14(NS_CS_TCOP, a) }
static void ns_sort_bn_p_14_tie(ns_item *a) { NS_NET_BN_P_14(NS_CS_TIE, a) }
static void ns_sort_bn_p_14_jxhg(ns_item *a) { NS_NET_BN_P_14(NS_CS_JXHG, a) }
static void ns_sort_bn_p_14_cm4(ns_item *a) { NS_NET_BN_P_14(NS_CS_CM4, a) }
static void ns_sort_bn_p_14_cm4s(ns_item *a) { NS_NET_BN_P_14(NS_CS_CM4S, a) }
static void ns_sort_bn_p_14_cm6(ns_item *a) { NS_NET_BN_P_14(NS_CS_CM6, a) }
static void ns_sort_bn_p_14_cpm2(ns_item *a) { NS_NET_BN_P_14(NS_CS_CPM2, a) }
static void ns_sort_bn_p_14_cpp2(ns_item *a) { NS_NET_BN_P_14(NS_CS_CPP2, a) }

#define NS_NET_BN_P_15(CS, A) \
    CS(A, 1, 2) \
    CS(A, 3, 4) \
    CS(A, 5, 6) \
    CS(A, 7, 8) \
    CS(A, 9, 10) \
    CS(A, 11, 12) \
    CS(A, 13, 14) \
    CS(A, 0, 2) \
    CS(A, 3, 5) \
    CS(A, 4, 6) \
    CS(A, 7, 9) \
    CS(A, 8, 10) \
    CS(A, 11, 13) \
    CS(A, 12, 14) \
    CS(A, 0, 1) \
    CS(A, 4, 5) \
    CS(A, 2, 6) \
    CS(A, 8, 9) \
    CS(A, 12, 13) \
    CS(A, 7, 11) \
    CS(A, 10, 14) \
    CS(A, 0, 4) \
    CS(A, 1, 5) \
    CS(A, 8, 12) \
    CS(A, 9, 13) \
    CS(A, 6, 14) \
    CS(A, 0, 3) \
    CS(A, 2, 5) \
    CS(A, 8, 11) \
    CS(A, 10, 13) \
    CS(A, 1, 3) \
    CS(A, 2, 4) \
    CS(A, 9, 11) \
    CS(A, 10, 12) \
    CS(A, 0, 8) \
    CS(A, 5, 13) \
    CS(A, 2, 3) \
    CS(A, 10, 11) \
    CS(A, 0, 7) \
    CS(A, 1, 9) \
    CS(A, 4, 12) \
    CS(A, 6, 13) \
    CS(A, 2, 10) \
    CS(A, 1, 7) \
    CS(A, 3, 11) \
    CS(A, 6, 12) \
    CS(A, 2, 9) \
    CS(A, 4, 11) \
    CS(A, 2, 8) \
    CS(A, 5, 11) \
    CS(A, 2, 7) \
    CS(A, 6, 11) \
    CS(A, 4, 8) \
    CS(A, 5, 9) \
    CS(A, 3, 7) \
    CS(A, 6, 10) \
    CS(A, 4, 7) \
    CS(A, 6, 9) \
    CS(A, 5, 7) \
    CS(A, 6, 8) \
    CS(A, 6, 7)

static void ns_sort_bn_p_15_iswp(ns_item *a) { NS_NET_BN_P_15(NS_CS_ISWP, a) }
static void ns_sort_bn_p_15_tcop(ns_item *a) { NS_NET_BN_P_15(NS_CS_TCOP, a) }
static void ns_sort_bn_p_15_tie(ns_item *a) { NS_NET_BN_P_15(NS_CS_TIE, a) }
static void ns_sort_bn_p_15_jxhg(ns_item *a) { NS_NET_BN_P_15(NS_CS_JXHG, a) }
static void ns_sort_bn_p_15_cm4(ns_item *a) { NS_NET_BN_P_15(NS_CS_CM4, a) }
static void ns_sort_bn_p_15_cm4s(ns_item *a) { NS_NET_BN_P_15(NS_CS_CM4S, a) }
static void ns_sort_bn_p_15_cm6(ns_item *a) { NS_NET_BN_P_15(NS_CS_CM6, a) }
static void ns_sort_bn_p_15_cpm2(ns_item *a) { NS_NET_BN_P_15(NS_CS_CPM2, a) }
static void ns_sort_bn_p_15_cpp2(ns_item *a) { NS_NET_BN_P_15(NS_CS_CPP2, a) }

#define NS_NET_BN_P_16(CS, A) \
    CS(A, 0, 1) \
    CS(A, 2, 3) \
    CS(A, 4, 5) \
    CS(A, 6, 7) \
    CS(A, 8, 9) \
    CS(A, 10, 11) \
    CS(A, 12, 13) \
    CS(A, 14, 15) \
    CS(A, 0, 2) \
    CS(A, 1, 3) \
    CS(A, 4, 6) \
    CS(A, 5, 7) \
    CS(A, 8, 10) \
    CS(A, 9, 11) \
    CS(A, 12, 14) \
    CS(A, 13, 15) \
    CS(A, 1, 2) \
    CS(A, 5, 6) \
    CS(A, 0, 4) \
    CS(A, 3, 7) \
    CS(A, 9, 10) \
    CS(A, 13, 14) \
    CS(A, 8, 12) \
    CS(A, 11, 15) \
    CS(A, 1, 5) \
    CS(A, 2, 6) \
    CS(A, 9, 13) \
    CS(A, 10, 14) \
    CS(A, 0, 8) \
    CS(A, 7, 15) \
    CS(A, 1, 4) \
    CS(A, 3, 6) \
    CS(A, 9, 12) \
    CS(A, 11, 14) \
    CS(A, 2, 4) \
    CS(A, 3, 5) \
    CS(A, 10, 12) \
    CS(A, 11, 13) \
    CS(A, 1, 9) \
    CS(A, 6, 14) \
    CS(A, 3, 4) \
    CS(A, 11, 12) \
    CS(A, 1, 8) \
    CS(A, 2, 10) \
    CS(A, 5, 13) \
    CS(A, 7, 14) \
    CS(A, 3, 11) \
    CS(A, 2, 8) \
    CS(A, 4, 12) \
    CS(A, 7, 13) \
    CS(A, 3, 10) \
    CS(A, 5, 12) \
    CS(A, 3, 9) \
    CS(A, 6, 12) \
    CS(A, 3, 8) \
    CS(A, 7, 12) \
    CS(A, 5, 9) \
    CS(A, 6, 10) \
    CS(A, 4, 8) \
    CS(A, 7, 11) \
    CS(A, 5, 8) \
    CS(A, 7, 10) \
    CS(A, 6, 8) \
    CS(A, 7, 9) \
    CS(A, 7, 8)

static void ns_sort_bn_p_16_iswp(ns_item *a) { NS_NET_BN_P_16(NS_CS_ISWP, a) }
static void ns_sort_bn_p_16_tcop(ns_item *a) { NS_NET_BN_P_16(NS_CS_TCOP, a) }
static void ns_sort_bn_p_16_tie(ns_item *a) { NS_NET_BN_P_16(NS_CS_TIE, a) }
static void ns_sort_bn_p_16_jxhg(ns_item *a) { NS_NET_BN_P_16(NS_CS_JXHG, a) }
static void ns_sort_bn_p_16_cm4(ns_item *a) { NS_NET_BN_P_16(NS_CS_CM4, a) }
static void ns_sort_bn_p_16_cm4s(ns_item *a) { NS_NET_BN_P_16(NS_CS_CM4S, a) }
static void ns_sort_bn_p_16_cm6(ns_item *a) { NS_NET_BN_P_16(NS_CS_CM6, a) }
static void ns_sort_bn_p_16_cpm2(ns_item *a) { NS_NET_BN_P_16(NS_CS_CPM2, a) }
static void ns_sort_bn_p_16_cpp2(ns_item *a) { NS_NET_BN_P_16(NS_CS_CPP2, a) }

const ns_net_fn ns_net_table_bn_p[17][9] = {
    [2] = {ns_sort_bn_p_2_iswp, ns_sort_bn_p_2_tcop, ns_sort_bn_p_2_tie, ns_sort_bn_p_2_jxhg, ns_sort_bn_p_2_cm4, ns_sort_bn_p_2_cm4s, ns_sort_bn_p_2_cm6, ns_sort_bn_p_2_cpm2, ns_sort_bn_p_2_cpp2},
    [3] = {ns_sort_bn_p_3_iswp, ns_sort_bn_p_3_tcop, ns_sort_bn_p_3_tie, ns_sort_bn_p_3_jxhg, ns_sort_bn_p_3_cm4, ns_sort_bn_p_3_cm4s, ns_sort_bn_p_3_cm6, ns_sort_bn_p_3_cpm2, ns_sort_bn_p_3_cpp2},
    [4] = {ns_sort_bn_p_4_iswp, ns_sort_bn_p_4_tcop, ns_sort_bn_p_4_tie, ns_sort_bn_p_4_jxhg, ns_sort_bn_p_4_cm4, ns_sort_bn_p_4_cm4s, ns_sort_bn_p_4_cm6, ns_sort_bn_p_4_cpm2, ns_sort_bn_p_4_cpp2},
    [5] = {ns_sort_bn_p_5_iswp, ns_sort_bn_p_5_tcop, ns_sort_bn_p_5_tie, ns_sort_bn_p_5_jxhg, ns_sort_bn_p_5_cm4, ns_sort_bn_p_5_cm4s, ns_sort_bn_p_5_cm6, ns_sort_bn_p_5_cpm2, ns_sort_bn_p_5_cpp2},
    [6] = {ns_sort_bn_p_6_iswp, ns_sort_bn_p_6_tcop, ns_sort_bn_p_6_tie, ns_sort_bn_p_6_jxhg, ns_sort_bn_p_6_cm4, ns_sort_bn_p_6_cm4s, ns_sort_bn_p_6_cm6, ns_sort_bn_p_6_cpm2, ns_sort_bn_p_6_cpp2},
    [7] = {ns_sort_bn_p_7_iswp, ns_sort_bn_p_7_tcop, ns_sort_bn_p_7_tie, ns_sort_bn_p_7_jxhg, ns_sort_bn_p_7_cm4, ns_sort_bn_p_7_cm4s, ns_sort_bn_p_7_cm6, ns_sort_bn_p_7_cpm2, ns_sort_bn_p_7_cpp2},
    [8] = {ns_sort_bn_p_8_iswp, ns_sort_bn_p_8_tcop, ns_sort_bn_p_8_tie, ns_sort_bn_p_8_jxhg, ns_sort_bn_p_8_cm4, ns_sort_bn_p_8_cm4s, ns_sort_bn_p_8_cm6, ns_sort_bn_p_8_cpm2, ns_sort_bn_p_8_cpp2},
    [9] = {ns_sort_bn_p_9_iswp, ns_sort_bn_p_9_tcop, ns_sort_bn_p_9_tie, ns_sort_bn_p_9_jxhg, ns_sort_bn_p_9_cm4, ns_sort_bn_p_9_cm4s, ns_sort_bn_p_9_cm6, ns_sort_bn_p_9_cpm2, ns_sort_bn_p_9_cpp2},
    [10] = {ns_sort_bn_p_10_iswp, ns_sort_bn_p_10_tcop, ns_sort_bn_p_10_tie, ns_sort_bn_p_10_jxhg, ns_sort_bn_p_10_cm4, ns_sort_bn_p_10_cm4s, ns_sort_bn_p_10_cm6, ns_sort_bn_p_10_cpm2, ns_sort_bn_p_10_cpp2},
    [11] = {ns_sort_bn_p_11_iswp, ns_sort_bn_p_11_tcop, ns_sort_bn_p_11_tie, ns_sort_bn_p_11_jxhg, ns_sort_bn_p_11_cm4, ns_sort_bn_p_11_cm4s, ns_sort_bn_p_11_cm6, ns_sort_bn_p_11_cpm2, ns_sort_bn_p_11_cpp2},
    [12] = {ns_sort_bn_p_12_iswp, ns_sort_bn_p_12_tcop, ns_sort_bn_p_12_tie, ns_sort_bn_p_12_jxhg, ns_sort_bn_p_12_cm4, ns_sort_bn_p_12_cm4s, ns_sort_bn_p_12_cm6, ns_sort_bn_p_12_cpm2, ns_sort_bn_p_12_cpp2},
    [13] = {ns_sort_bn_p_13_iswp, ns_sort_bn_p_13_tcop, ns_sort_bn_p_13_tie, ns_sort_bn_p_13_jxhg, ns_sort_bn_p_13_cm4, ns_sort_bn_p_13_cm4s, ns_sort_bn_p_13_cm6, ns_sort_bn_p_13_cpm2, ns_sort_bn_p_13_cpp2},
    [14] = {ns_sort_bn_p_14_iswp, ns_sort_bn_p_14_tcop, ns_sort_bn_p_14_tie, ns_sort_bn_p_14_jxhg, ns_sort_bn_p_14_cm4, ns_sort_bn_p_14_cm4s, ns_sort_bn_p_14_cm6, ns_sort_bn_p_14_cpm2, ns_sort_bn_p_14_cpp2},
    [15] = {ns_sort_bn_p_15_iswp, ns_sort_bn_p_15_tcop, ns_sort_bn_p_15_tie, ns_sort_bn_p_15_jxhg, ns_sort_bn_p_15_cm4, ns_sort_bn_p_15_cm4s, ns_sort_bn_p_15_cm6, ns_sort_bn_p_15_cpm2, ns_sort_bn_p_15_cpp2},
    [16] = {ns_sort_bn_p_16_iswp, ns_sort_bn_p_16_tcop, ns_sort_bn_p_16_tie, ns_sort_bn_p_16_jxhg, ns_sort_bn_p_16_cm4, ns_sort_bn_p_16_cm4s, ns_sort_bn_p_16_cm6, ns_sort_bn_p_16_cpm2, ns_sort_bn_p_16_cpp2},
};
