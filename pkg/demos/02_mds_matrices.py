"""
MDS matrices
============

A matrix is MDS when every square submatrix, of every size, is nonsingular.
"""

from mdslab.field import GF
from mdslab.matrix import SquareMatrix, determinant, identity, inverse, is_mds, is_mds_orthogonal_fast, minors

F = GF(3)

M = SquareMatrix(F, [[1, 2, 4, 6], [2, 1, 6, 4], [4, 6, 1, 2], [6, 4, 2, 1]])
print(M)
print("det =", determinant(M))
print("M @ inverse(M) is the identity:", M @ inverse(M) == identity(F, 4))

# count the minors of each order and confirm none vanish
for k in range(1, 5):
    dets = [d for _, _, d in minors(M, k)]
    print(f"order {k}: {len(dets)} minors, zero among them: {0 in dets}")
print("MDS:", is_mds(M))

# M is orthogonal, so its big minors are entries of M; the short test suffices
print("fast orthogonal check agrees:", is_mds_orthogonal_fast(M))

# the identity has zero entries, so it fails at order one
print("identity is MDS:", is_mds(identity(F, 4)))
