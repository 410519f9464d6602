"""Unrolled BN-L network sorters for 2..16 items.

Generated by tools/gen_sorters.py -- do not edit by hand.
"""

def sort_bn_l_2(keys, refs, base, cswap):
    cswap(keys, refs, base + 0, base + 1)

def sort_bn_l_3(keys, refs, base, cswap):
    cswap(keys, refs, base + 1, base + 2)
    cswap(keys, refs, base + 0, base + 2)
    cswap(keys, refs, base + 0, base + 1)

def sort_bn_l_4(keys, refs, base, cswap):
    cswap(keys, refs, base + 0, base + 1)
    cswap(keys, refs, base + 2, base + 3)
    cswap(keys, refs, base + 0, base + 2)
    cswap(keys, refs, base + 1, base + 3)
    cswap(keys, refs, base + 1, base + 2)

def sort_bn_l_5(keys, refs, base, cswap):
    cswap(keys, refs, base + 0, base + 1)
    cswap(keys, refs, base + 3, base + 4)
    cswap(keys, refs, base + 2, base + 4)
    cswap(keys, refs, base + 2, base + 3)
    cswap(keys, refs, base + 0, base + 3)
    cswap(keys, refs, base + 0, base + 2)
    cswap(keys, refs, base + 1, base + 4)
    cswap(keys, refs, base + 1, base + 3)
    cswap(keys, refs, base + 1, base + 2)

def sort_bn_l_6(keys, refs, base, cswap):
    cswap(keys, refs, base + 1, base + 2)
    cswap(keys, refs, base + 0, base + 2)
    cswap(keys, refs, base + 0, base + 1)
    cswap(keys, refs, base + 4, base + 5)
    cswap(keys, refs, base + 3, base + 5)
    cswap(keys, refs, base + 3, base + 4)
    cswap(keys, refs, base + 0, base + 3)
    cswap(keys, refs, base + 1, base + 4)
    cswap(keys, refs, base + 2, base + 5)
    cswap(keys, refs, base + 2, base + 4)
    cswap(keys, refs, base + 1, base + 3)
    cswap(keys, refs, base + 2, base + 3)

def sort_bn_l_7(keys, refs, base, cswap):
    cswap(keys, refs, base + 1, base + 2)
    cswap(keys, refs, base + 0, base + 2)
    cswap(keys, refs, base + 0, base + 1)
    cswap(keys, refs, base + 3, base + 4)
    cswap(keys, refs, base + 5, base + 6)
    cswap(keys, refs, base + 3, base + 5)
    cswap(keys, refs, base + 4, base + 6)
    cswap(keys, refs, base + 4, base + 5)
    cswap(keys, refs, base + 0, base + 4)
    cswap(keys, refs, base + 0, base + 3)
    cswap(keys, refs, base + 1, base + 5)
    cswap(keys, refs, base + 2, base + 6)
    cswap(keys, refs, base + 2, base + 5)
    cswap(keys, refs, base + 1, base + 3)
    cswap(keys, refs, base + 2, base + 4)
    cswap(keys, refs, base + 2, base + 3)

def sort_bn_l_8(keys, refs, base, cswap):
    cswap(keys, refs, base + 0, base + 1)
    cswap(keys, refs, base + 2, base + 3)
    cswap(keys, refs, base + 0, base + 2)
    cswap(keys, refs, base + 1, base + 3)
    cswap(keys, refs, base + 1, base + 2)
    cswap(keys, refs, base + 4, base + 5)
    cswap(keys, refs, base + 6, base + 7)
    cswap(keys, refs, base + 4, base + 6)
    cswap(keys, refs, base + 5, base + 7)
    cswap(keys, refs, base + 5, base + 6)
    cswap(keys, refs, base + 0, base + 4)
    cswap(keys, refs, base + 1, base + 5)
    cswap(keys, refs, base + 1, base + 4)
    cswap(keys, refs, base + 2, base + 6)
    cswap(keys, refs, base + 3, base + 7)
    cswap(keys, refs, base + 3, base + 6)
    cswap(keys, refs, base + 2, base + 4)
    cswap(keys, refs, base + 3, base + 5)
    cswap(keys, refs, base + 3, base + 4)

def sort_bn_l_9(keys, refs, base, cswap):
    cswap(keys, refs, base + 0, base + 1)
    cswap(keys, refs, base + 2, base + 3)
    cswap(keys, refs, base + 0, base + 2)
    cswap(keys, refs, base + 1, base + 3)
    cswap(keys, refs, base + 1, base + 2)
    cswap(keys, refs, base + 4, base + 5)
    cswap(keys, refs, base + 7, base + 8)
    cswap(keys, refs, base + 6, base + 8)
    cswap(keys, refs, base + 6, base + 7)
    cswap(keys, refs, base + 4, base + 7)
    cswap(keys, refs, base + 4, base + 6)
    cswap(keys, refs, base + 5, base + 8)
    cswap(keys, refs, base + 5, base + 7)
    cswap(keys, refs, base + 5, base + 6)
    cswap(keys, refs, base + 0, base + 5)
    cswap(keys, refs, base + 0, base + 4)
    cswap(keys, refs, base + 1, base + 6)
    cswap(keys, refs, base + 1, base + 5)
    cswap(keys, refs, base + 1, base + 4)
    cswap(keys, refs, base + 2, base + 7)
    cswap(keys, refs, base + 3, base + 8)
    cswap(keys, refs, base + 3, base + 7)
    cswap(keys, refs, base + 2, base + 5)
    cswap(keys, refs, base + 2, base + 4)
    cswap(keys, refs, base + 3, base + 6)
    cswap(keys, refs, base + 3, base + 5)
    cswap(keys, refs, base + 3, base + 4)

def sort_bn_l_10(keys, refs, base, cswap):
    cswap(keys, refs, base + 0, base + 1)
    cswap(keys, refs, base + 3, base + 4)
    cswap(keys, refs, base + 2, base + 4)
    cswap(keys, refs, base + 2, base + 3)
    cswap(keys, refs, base + 0, base + 3)
    cswap(keys, refs, base + 0, base + 2)
    cswap(keys, refs, base + 1, base + 4)
    cswap(keys, refs, base + 1, base + 3)
    cswap(keys, refs, base + 1, base + 2)
    cswap(keys, refs, base + 5, base + 6)
    cswap(keys, refs, base + 8, base + 9)
    cswap(keys, refs, base + 7, base + 9)
    cswap(keys, refs, base + 7, base + 8)
    cswap(keys, refs, base + 5, base + 8)
    cswap(keys, refs, base + 5, base + 7)
    cswap(keys, refs, base + 6, base + 9)
    cswap(keys, refs, base + 6, base + 8)
    cswap(keys, refs, base + 6, base + 7)
    cswap(keys, refs, base + 0, base + 5)
    cswap(keys, refs, base + 1, base + 6)
    cswap(keys, refs, base + 1, base + 5)
    cswap(keys, refs, base + 2, base + 7)
    cswap(keys, refs, base + 3, base + 8)
    cswap(keys, refs, base + 4, base + 9)
    cswap(keys, refs, base + 4, base + 8)
    cswap(keys, refs, base + 3, base + 7)
    cswap(keys, refs, base + 4, base + 7)
    cswap(keys, refs, base + 2, base + 5)
    cswap(keys, refs, base + 3, base + 6)
    cswap(keys, refs, base + 4, base + 6)
    cswap(keys, refs, base + 3, base + 5)
    cswap(keys, refs, base + 4, base + 5)

def sort_bn_l_11(keys, refs, base, cswap):
    cswap(keys, refs, base + 0, base + 1)
    cswap(keys, refs, base + 3, base + 4)
    cswap(keys, refs, base + 2, base + 4)
    cswap(keys, refs, base + 2, base + 3)
    cswap(keys, refs, base + 0, base + 3)
    cswap(keys, refs, base + 0, base + 2)
    cswap(keys, refs, base + 1, base + 4)
    cswap(keys, refs, base + 1, base + 3)
    cswap(keys, refs, base + 1, base + 2)
    cswap(keys, refs, base + 6, base + 7)
    cswap(keys, refs, base + 5, base + 7)
    cswap(keys, refs, base + 5, base + 6)
    cswap(keys, refs, base + 9, base + 10)
    cswap(keys, refs, base + 8, base + 10)
    cswap(keys, refs, base + 8, base + 9)
    cswap(keys, refs, base + 5, base + 8)
    cswap(keys, refs, base + 6, base + 9)
    cswap(keys, refs, base + 7, base + 10)
    cswap(keys, refs, base + 7, base + 9)
    cswap(keys, refs, base + 6, base + 8)
    cswap(keys, refs, base + 7, base + 8)
    cswap(keys, refs, base + 0, base + 6)
    cswap(keys, refs, base + 0, base + 5)
    cswap(keys, refs, base + 1, base + 7)
    cswap(keys, refs, base + 1, base + 6)
    cswap(keys, refs, base + 1, base + 5)
    cswap(keys, refs, base + 2, base + 8)
    cswap(keys, refs, base + 3, base + 9)
    cswap(keys, refs, base + 4, base + 10)
    cswap(keys, refs, base + 4, base + 9)
    cswap(keys, refs, base + 3, base + 8)
    cswap(keys, refs, base + 4, base + 8)
    cswap(keys, refs, base + 2, base + 5)
    cswap(keys, refs, base + 3, base + 6)
    cswap(keys, refs, base + 4, base + 7)
    cswap(keys, refs, base + 4, base + 6)
    cswap(keys, refs, base + 3, base + 5)
    cswap(keys, refs, base + 4, base + 5)

def sort_bn_l_12(keys, refs, base, cswap):
    cswap(keys, refs, base + 1, base + 2)
    cswap(keys, refs, base + 0, base + 2)
    cswap(keys, refs, base + 0, base + 1)
    cswap(keys, refs, base + 4, base + 5)
    cswap(keys, refs, base + 3, base + 5)
    cswap(keys, refs, base + 3, base + 4)
    cswap(keys, refs, base + 0, base + 3)
    cswap(keys, refs, base + 1, base + 4)
    cswap(keys, refs, base + 2, base + 5)
    cswap(keys, refs, base + 2, base + 4)
    cswap(keys, refs, base + 1, base + 3)
    cswap(keys, refs, base + 2, base + 3)
    cswap(keys, refs, base + 7, base + 8)
    cswap(keys, refs, base + 6, base + 8)
    cswap(keys, refs, base + 6, base + 7)
    cswap(keys, refs, base + 10, base + 11)
    cswap(keys, refs, base + 9, base + 11)
    cswap(keys, refs, base + 9, base + 10)
    cswap(keys, refs, base + 6, base + 9)
    cswap(keys, refs, base + 7, base + 10)
    cswap(keys, refs, base + 8, base + 11)
    cswap(keys, refs, base + 8, base + 10)
    cswap(keys, refs, base + 7, base + 9)
    cswap(keys, refs, base + 8, base + 9)
    cswap(keys, refs, base + 0, base + 6)
    cswap(keys, refs, base + 1, base + 7)
    cswap(keys, refs, base + 2, base + 8)
    cswap(keys, refs, base + 2, base + 7)
    cswap(keys, refs, base + 1, base + 6)
    cswap(keys, refs, base + 2, base + 6)
    cswap(keys, refs, base + 3, base + 9)
    cswap(keys, refs, base + 4, base + 10)
    cswap(keys, refs, base + 5, base + 11)
    cswap(keys, refs, base + 5, base + 10)
    cswap(keys, refs, base + 4, base + 9)
    cswap(keys, refs, base + 5, base + 9)
    cswap(keys, refs, base + 3, base + 6)
    cswap(keys, refs, base + 4, base + 7)
    cswap(keys, refs, base + 5, base + 8)
    cswap(keys, refs, base + 5, base + 7)
    cswap(keys, refs, base + 4, base + 6)
    cswap(keys, refs, base + 5, base + 6)

def sort_bn_l_13(keys, refs, base, cswap):
    cswap(keys, refs, base + 1, base + 2)
    cswap(keys, refs, base + 0, base + 2)
    cswap(keys, refs, base + 0, base + 1)
    cswap(keys, refs, base + 4, base + 5)
    cswap(keys, refs, base + 3, base + 5)
    cswap(keys, refs, base + 3, base + 4)
    cswap(keys, refs, base + 0, base + 3)
    cswap(keys, refs, base + 1, base + 4)
    cswap(keys, refs, base + 2, base + 5)
    cswap(keys, refs, base + 2, base + 4)
    cswap(keys, refs, base + 1, base + 3)
    cswap(keys, refs, base + 2, base + 3)
    cswap(keys, refs, base + 7, base + 8)
    cswap(keys, refs, base + 6, base + 8)
    cswap(keys, refs, base + 6, base + 7)
    cswap(keys, refs, base + 9, base + 10)
    cswap(keys, refs, base + 11, base + 12)
    cswap(keys, refs, base + 9, base + 11)
    cswap(keys, refs, base + 10, base + 12)
    cswap(keys, refs, base + 10, base + 11)
    cswap(keys, refs, base + 6, base + 10)
    cswap(keys, refs, base + 6, base + 9)
    cswap(keys, refs, base + 7, base + 11)
    cswap(keys, refs, base + 8, base + 12)
    cswap(keys, refs, base + 8, base + 11)
    cswap(keys, refs, base + 7, base + 9)
    cswap(keys, refs, base + 8, base + 10)
    cswap(keys, refs, base + 8, base + 9)
    cswap(keys, refs, base + 0, base + 7)
    cswap(keys, refs, base + 0, base + 6)
    cswap(keys, refs, base + 1, base + 8)
    cswap(keys, refs, base + 2, base + 9)
    cswap(keys, refs, base + 2, base + 8)
    cswap(keys, refs, base + 1, base + 6)
    cswap(keys, refs, base + 2, base + 7)
    cswap(keys, refs, base + 2, base + 6)
    cswap(keys, refs, base + 3, base + 10)
    cswap(keys, refs, base + 4, base + 11)
    cswap(keys, refs, base + 5, base + 12)
    cswap(keys, refs, base + 5, base + 11)
    cswap(keys, refs, base + 4, base + 10)
    cswap(keys, refs, base + 5, base + 10)
    cswap(keys, refs, base + 3, base + 7)
    cswap(keys, refs, base + 3, base + 6)
    cswap(keys, refs, base + 4, base + 8)
    cswap(keys, refs, base + 5, base + 9)
    cswap(keys, refs, base + 5, base + 8)
    cswap(keys, refs, base + 4, base + 6)
    cswap(keys, refs, base + 5, base + 7)
    cswap(keys, refs, base + 5, base + 6)

def sort_bn_l_14(keys, refs, base, cswap):
    cswap(keys, refs, base + 1, base + 2)
    cswap(keys, refs, base + 0, base + 2)
    cswap(keys, refs, base + 0, base + 1)
    cswap(keys, refs, base + 3, base + 4)
    cswap(keys, refs, base + 5, base + 6)
    cswap(keys, refs, base + 3, base + 5)
    cswap(keys, refs, base + 4, base + 6)
    cswap(keys, refs, base + 4, base + 5)
    cswap(keys, refs, base + 0, base + 4)
    cswap(keys, refs, base + 0, base + 3)
    cswap(keys, refs, base + 1, base + 5)
    cswap(keys, refs, base + 2, base + 6)
    cswap(keys, refs, base + 2, base + 5)
    cswap(keys, refs, base + 1, base + 3)
    cswap(keys, refs, base + 2, base + 4)
    cswap(keys, refs, base + 2, base + 3)
    cswap(keys, refs, base + 8, base + 9)
    cswap(keys, refs, base + 7, base + 9)
    cswap(keys, refs, base + 7, base + 8)
    cswap(keys, refs, base + 10, base + 11)
    cswap(keys, refs, base + 12, base + 13)
    cswap(keys, refs, base + 10, base + 12)
    cswap(keys, refs, base + 11, base + 13)
    cswap(keys, refs, base + 11, base + 12)
    cswap(keys, refs, base + 7, base + 11)
    cswap(keys, refs, base + 7, base + 10)
    cswap(keys, refs, base + 8, base + 12)
    cswap(keys, refs, base + 9, base + 13)
    cswap(keys, refs, base + 9, base + 12)
    cswap(keys, refs, base + 8, base + 10)
    cswap(keys, refs, base + 9, base + 11)
    cswap(keys, refs, base + 9, base + 10)
    cswap(keys, refs, base + 0, base + 7)
    cswap(keys, refs, base + 1, base + 8)
    cswap(keys, refs, base + 2, base + 9)
    cswap(keys, refs, base + 2, base + 8)
    cswap(keys, refs, base + 1, base + 7)
    cswap(keys, refs, base + 2, base + 7)
    cswap(keys, refs, base + 3, base + 10)
    cswap(keys, refs, base + 4, base + 11)
    cswap(keys, refs, base + 4, base + 10)
    cswap(keys, refs, base + 5, base + 12)
    cswap(keys, refs, base + 6, base + 13)
    cswap(keys, refs, base + 6, base + 12)
    cswap(keys, refs, base + 5, base + 10)
    cswap(keys, refs, base + 6, base + 11)
    cswap(keys, refs, base + 6, base + 10)
    cswap(keys, refs, base + 3, base + 7)
    cswap(keys, refs, base + 4, base + 8)
    cswap(keys, refs, base + 4, base + 7)
    cswap(keys, refs, base + 5, base + 9)
    cswap(keys, refs, base + 6, base + 9)
    cswap(keys, refs, base + 5, base + 7)
    cswap(keys, refs, base + 6, base + 8)
    cswap(keys, refs, base + 6, base + 7)

def sort_bn_l_15(keys, refs, base, cswap):
    cswap(keys, refs, base + 1, base + 2)
    cswap(keys, refs, base + 0, base + 2)
    cswap(keys, refs, base + 0, base + 1)
    cswap(keys, refs, base + 3, base + 4)
    cswap(keys, refs, base + 5, base + 6)
    cswap(keys, refs, base + 3, base + 5)
    cswap(keys, refs, base + 4, base + 6)
    cswap(keys, refs, base + 4, base + 5)
    cswap(keys, refs, base + 0, base + 4)
    cswap(keys, refs, base + 0, base + 3)
    cswap(keys, refs, base + 1, base + 5)
    cswap(keys, refs, base + 2, base + 6)
    cswap(keys, refs, base + 2, base + 5)
    cswap(keys, refs, base + 1, base + 3)
    cswap(keys, refs, base + 2, base + 4)
    cswap(keys, refs, base + 2, base + 3)
    cswap(keys, refs, base + 7, base + 8)
    cswap(keys, refs, base + 9, base + 10)
    cswap(keys, refs, base + 7, base + 9)
    cswap(keys, refs, base + 8, base + 10)
    cswap(keys, refs, base + 8, base + 9)
    cswap(keys, refs, base + 11, base + 12)
    cswap(keys, refs, base + 13, base + 14)
    cswap(keys, refs, base + 11, base + 13)
    cswap(keys, refs, base + 12, base + 14)
    cswap(keys, refs, base + 12, base + 13)
    cswap(keys, refs, base + 7, base + 11)
    cswap(keys, refs, base + 8, base + 12)
    cswap(keys, refs, base + 8, base + 11)
    cswap(keys, refs, base + 9, base + 13)
    cswap(keys, refs, base + 10, base + 14)
    cswap(keys, refs, base + 10, base + 13)
    cswap(keys, refs, base + 9, base + 11)
    cswap(keys, refs, base + 10, base + 12)
    cswap(keys, refs, base + 10, base + 11)
    cswap(keys, refs, base + 0, base + 8)
    cswap(keys, refs, base + 0, base + 7)
    cswap(keys, refs, base + 1, base + 9)
    cswap(keys, refs, base + 2, base + 10)
    cswap(keys, refs, base + 2, base + 9)
    cswap(keys, refs, base + 1, base + 7)
    cswap(keys, refs, base + 2, base + 8)
    cswap(keys, refs, base + 2, base + 7)
    cswap(keys, refs, base + 3, base + 11)
    cswap(keys, refs, base + 4, base + 12)
    cswap(keys, refs, base + 4, base + 11)
    cswap(keys, refs, base + 5, base + 13)
    cswap(keys, refs, base + 6, base + 14)
    cswap(keys, refs, base + 6, base + 13)
    cswap(keys, refs, base + 5, base + 11)
    cswap(keys, refs, base + 6, base + 12)
    cswap(keys, refs, base + 6, base + 11)
    cswap(keys, refs, base + 3, base + 7)
    cswap(keys, refs, base + 4, base + 8)
    cswap(keys, refs, base + 4, base + 7)
    cswap(keys, refs, base + 5, base + 9)
    cswap(keys, refs, base + 6, base + 10)
    cswap(keys, refs, base + 6, base + 9)
    cswap(keys, refs, base + 5, base + 7)
    cswap(keys, refs, base + 6, base + 8)
    cswap(keys, refs, base + 6, base + 7)

def sort_bn_l_16(keys, refs, base, cswap):
    cswap(keys, refs, base + 0, base + 1)
    cswap(keys, refs, base + 2, base + 3)
    cswap(keys, refs, base + 0, base + 2)
    cswap(keys, refs, base + 1, base + 3)
    cswap(keys, refs, base + 1, base + 2)
    cswap(keys, refs, base + 4, base + 5)
    cswap(keys, refs, base + 6, base + 7)
    cswap(keys, refs, base + 4, base + 6)
    cswap(keys, refs, base + 5, base + 7)
    cswap(keys, refs, base + 5, base + 6)
    cswap(keys, refs, base + 0, base + 4)
    cswap(keys, refs, base + 1, base + 5)
    cswap(keys, refs, base + 1, base + 4)
    cswap(keys, refs, base + 2, base + 6)
    cswap(keys, refs, base + 3, base + 7)
    cswap(keys, refs, base + 3, base + 6)
    cswap(keys, refs, base + 2, base + 4)
    cswap(keys, refs, base + 3, base + 5)
    cswap(keys, refs, base + 3, base + 4)
    cswap(keys, refs, base + 8, base + 9)
    cswap(keys, refs, base + 10, base + 11)
    cswap(keys, refs, base + 8, base + 10)
    cswap(keys, refs, base + 9, base + 11)
    cswap(keys, refs, base + 9, base + 10)
    cswap(keys, refs, base + 12, base + 13)
    cswap(keys, refs, base + 14, base + 15)
    cswap(keys, refs, base + 12, base + 14)
    cswap(keys, refs, base + 13, base + 15)
    cswap(keys, refs, base + 13, base + 14)
    cswap(keys, refs, base + 8, base + 12)
    cswap(keys, refs, base + 9, base + 13)
    cswap(keys, refs, base + 9, base + 12)
    cswap(keys, refs, base + 10, base + 14)
    cswap(keys, refs, base + 11, base + 15)
    cswap(keys, refs, base + 11, base + 14)
    cswap(keys, refs, base + 10, base + 12)
    cswap(keys, refs, base + 11, base + 13)
    cswap(keys, refs, base + 11, base + 12)
    cswap(keys, refs, base + 0, base + 8)
    cswap(keys, refs, base + 1, base + 9)
    cswap(keys, refs, base + 1, base + 8)
    cswap(keys, refs, base + 2, base + 10)
    cswap(keys, refs, base + 3, base + 11)
    cswap(keys, refs, base + 3, base + 10)
    cswap(keys, refs, base + 2, base + 8)
    cswap(keys, refs, base + 3, base + 9)
    cswap(keys, refs, base + 3, base + 8)
    cswap(keys, refs, base + 4, base + 12)
    cswap(keys, refs, base + 5, base + 13)
    cswap(keys, refs, base + 5, base + 12)
    cswap(keys, refs, base + 6, base + 14)
    cswap(keys, refs, base + 7, base + 15)
    cswap(keys, refs, base + 7, base + 14)
    cswap(keys, refs, base + 6, base + 12)
    cswap(keys, refs, base + 7, base + 13)
    cswap(keys, refs, base + 7, base + 12)
    cswap(keys, refs, base + 4, base + 8)
    cswap(keys, refs, base + 5, base + 9)
    cswap(keys, refs, base + 5, base + 8)
    cswap(keys, refs, base + 6, base + 10)
    cswap(keys, refs, base + 7, base + 11)
    cswap(keys, refs, base + 7, base + 10)
    cswap(keys, refs, base + 6, base + 8)
    cswap(keys, refs, base + 7, base + 9)
    cswap(keys, refs, base + 7, base + 8)

SORTERS = {2: sort_bn_l_2, 3: sort_bn_l_3, 4: sort_bn_l_4, 5: sort_bn_l_5, 6: sort_bn_l_6, 7: sort_bn_l_7, 8: sort_bn_l_8, 9: sort_bn_l_9, 10: sort_bn_l_10, 11: sort_bn_l_11, 12: sort_bn_l_12, 13: sort_bn_l_13, 14: sort_bn_l_14, 15: sort_bn_l_15, 16: sort_bn_l_16}
