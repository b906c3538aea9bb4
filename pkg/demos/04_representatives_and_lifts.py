"""
Representative form and lifting
===============================

A matrix with no zero entries factors as D1 M1 D2, where M1 has a row and a
column of ones.  Going back the other way, a semi-involutory representative
lifts to a whole family of involutory matrices, and a semi-orthogonal one to
a single orthogonal matrix.
"""

from mdslab.canonical import decompose_phi, compose_phi, iter_involutory_family, lift_orthogonal, representative
from mdslab.field import GF
from mdslab.matrix import SquareMatrix
from mdslab.properties import is_involutory, is_orthogonal

F = GF(3)
M = SquareMatrix(F, [[1, 2, 4, 6], [2, 1, 6, 4], [4, 6, 1, 2], [6, 4, 2, 1]])

dec = decompose_phi(M)
print("D1 =", dec.d1)
print("D2 =", dec.d2)
print(dec.m1)
print("recomposes:", compose_phi(dec) == M)

# the orthogonal lift of the representative is unique, so it returns M
print("orthogonal lift gives back M:", lift_orthogonal(dec.m1) == M)

# a 3 x 3 semi-involutory representative over GF(8) and its involutory family
R = representative(F, [[2, 3], [3, 6]])
family = list(iter_involutory_family(R))
print(len(family), "involutory lifts, all involutory:", all(is_involutory(L) for L in family))
print(family[0])
