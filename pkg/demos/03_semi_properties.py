"""
Semi-involutory and semi-orthogonal matrices
============================================

M is semi-involutory when M^-1 = D M D' for nonsingular diagonal D, D', and
semi-orthogonal when the same holds for M^-T.  The checks return the witness.
"""

from mdslab.field import GF
from mdslab.matrix import SquareMatrix, diag, inverse
from mdslab.properties import check, is_symmetric

F = GF(4, 0x13)
a = lambda k: F.pow(2, k)

# a semi-involutory MDS matrix over GF(16) that is not symmetric
M = SquareMatrix(
    F,
    [
        [1, 1, 1, 1],
        [1, a(5), a(1), a(4)],
        [1, a(4), a(10), a(2)],
        [1, a(8), a(5), a(11)],
    ],
)
for prop in ("mds", "semi_involutory", "semi_orthogonal", "symmetric"):
    r = check(M, prop)
    print(f"{prop:16s} {r.holds}  {r.witness or ''}")

w = check(M, "semi_involutory").witness
print("witness reproduces the inverse:", w.apply(M) == inverse(M))
print("symmetric:", is_symmetric(M))

# scaling rows and columns never changes these properties
S = diag(F, [3, 7, 9, 2]) @ M @ diag(F, [5, 1, 14, 6])
print("sandwiched copy still semi-involutory:", check(S, "semi_involutory").holds)
