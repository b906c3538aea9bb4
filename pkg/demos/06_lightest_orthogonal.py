"""
The cheapest 4 x 4 orthogonal MDS matrices
==========================================

Cost is counted in XOR gates: each entry costs the ones in its binary
multiplication matrix minus m, and each output word needs three m-bit XORs.
"""

from mdslab.cost import dxor_matrix, dxor_table, free_block, search_lightest
from mdslab.field import GF
from mdslab.matrixfile import format_tuple

F = GF(3)
print("per-element cost over GF(8):", list(dxor_table(F)))

best, mats = search_lightest(F)
print(f"minimum {best} XORs, reached by {len(mats)} matrices")
print(mats[0])
print(dxor_matrix(mats[0]))
for M in mats[:5]:
    print(format_tuple(free_block(M.entries)))
