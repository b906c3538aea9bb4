"""Structural property tests, with diagonal witnesses for the semi-properties."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass

import numpy as np

from .matrix import SquareMatrix, identity, inverse, is_mds


class Property(str, enum.Enum):
    INVOLUTORY = "involutory"
    ORTHOGONAL = "orthogonal"
    SEMI_INVOLUTORY = "semi_involutory"
    SEMI_ORTHOGONAL = "semi_orthogonal"
    SYMMETRIC = "symmetric"
    MDS = "mds"


@dataclass(frozen=True)
class DiagonalPair:
    """Witness ``(D, D')`` stored as the two diagonals."""

    d: tuple[int, ...]
    d_prime: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.d) != len(self.d_prime):
            raise ValueError("diagonals differ in length")
        if 0 in self.d or 0 in self.d_prime:
            raise ValueError("witness diagonals must be nonsingular")

    def apply(self, M: SquareMatrix) -> SquareMatrix:
        """Return D @ M @ D'."""
        return M.scale_rows(self.d).scale_cols(self.d_prime)


@dataclass(frozen=True)
class PropertyReport:
    property: Property
    holds: bool
    witness: DiagonalPair | None = None


def is_involutory(M: SquareMatrix) -> bool:
    return M @ M == identity(M.ctx, M.n)


def is_orthogonal(M: SquareMatrix) -> bool:
    return M @ M.T == identity(M.ctx, M.n)


def is_symmetric(M: SquareMatrix) -> bool:
    return np.array_equal(M.entries, M.entries.T)


def diagonal_witness(M: SquareMatrix, N: SquareMatrix) -> DiagonalPair | None:
    """Find nonsingular diagonals with ``N = D M D'``, or None.

    Entrywise ``n_ij = a_i m_ij b_j``, so the ratios ``n_ij / m_ij`` on the
    support of ``M`` must factor as ``a_i b_j``.  The support is a bipartite
    graph (rows vs columns); each connected component is solved by BFS from
    its lowest column with ``b = 1``, and every edge is then checked.
    """
    F = M.ctx
    n = M.n
    a, b = M.entries, N.entries
    if not np.array_equal(a == 0, b == 0):
        return None
    ratio = [[F.div(int(b[i, j]), int(a[i, j])) if a[i, j] else 0 for j in range(n)] for i in range(n)]
    alpha: list[int | None] = [None] * n
    beta: list[int | None] = [None] * n
    for start in range(n):
        if beta[start] is not None:
            continue
        beta[start] = 1
        queue = deque([("c", start)])
        while queue:
            side, k = queue.popleft()
            for other in range(n):
                i, j = (other, k) if side == "c" else (k, other)
                if not a[i, j]:
                    continue
                if side == "c":
                    want = F.div(ratio[i][j], beta[j])
                    if alpha[i] is None:
                        alpha[i] = want
                        queue.append(("r", i))
                    elif alpha[i] != want:
                        return None
                else:
                    want = F.div(ratio[i][j], alpha[i])
                    if beta[j] is None:
                        beta[j] = want
                        queue.append(("c", j))
                    elif beta[j] != want:
                        return None
    # an all-zero row constrains nothing
    return DiagonalPair(tuple(1 if x is None else x for x in alpha), tuple(beta))


def semi_involutory_witness(M: SquareMatrix) -> DiagonalPair | None:
    """Witness ``(D, D')`` with ``M^-1 = D M D'``; raises on singular ``M``.

    The returned pair is normalized so the first entry of ``D'`` is 1; any
    other witness differs by one scalar per support component.
    """
    return diagonal_witness(M, inverse(M))


def semi_orthogonal_witness(M: SquareMatrix) -> DiagonalPair | None:
    """Witness ``(D, D')`` with ``M^-T = D M D'``; raises on singular ``M``."""
    return diagonal_witness(M, inverse(M).T)


def check(M: SquareMatrix, prop: Property | str) -> PropertyReport:
    prop = Property(prop)
    if prop is Property.SEMI_INVOLUTORY:
        w = semi_involutory_witness(M)
        return PropertyReport(prop, w is not None, w)
    if prop is Property.SEMI_ORTHOGONAL:
        w = semi_orthogonal_witness(M)
        return PropertyReport(prop, w is not None, w)
    test = {
        Property.INVOLUTORY: is_involutory,
        Property.ORTHOGONAL: is_orthogonal,
        Property.SYMMETRIC: is_symmetric,
        Property.MDS: is_mds,
    }[prop]
    return PropertyReport(prop, test(M))
