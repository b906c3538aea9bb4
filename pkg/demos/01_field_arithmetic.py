"""
Arithmetic in GF(2^m)
=====================

Elements are plain integers whose bits are polynomial coefficients.
"""

from mdslab.field import GF

# GF(8) built on x^3 + x + 1
F = GF(3, 0xB)
print(F)

# addition is XOR, multiplication goes through log/antilog tables
print("2 + 6 =", F.add(2, 6))
print("2 * 4 =", F.mul(2, 4))
print("inverse of 2 =", F.inv(2))

# every element has exactly one square root in characteristic 2
print("sqrt(2) =", F.sqrt(2), "and", F.sqrt(2), "squared is", F.mul(F.sqrt(2), F.sqrt(2)))

# the dense tables are numpy arrays, so whole arrays multiply at once
import numpy as np

a = np.arange(8)
print("2 * [0..7] =", F.mul_table[2, a])

# any irreducible polynomial of the right degree works; reducible ones are refused
for poly in (0x13, 0x19, 0x15):
    try:
        print(GF(4, poly))
    except ValueError as exc:
        print("rejected:", exc)
