"""Representative form and the lifts back to involutory / orthogonal matrices.

Every matrix with no zero entries factors uniquely as ``D1 @ M1 @ D2`` where
``M1`` has an all-ones first row and first column and ``D2[0] == 1``.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from itertools import product

import numpy as np

from .field import GF
from .matrix import SquareMatrix, inverse


class DecompositionError(ValueError):
    pass


class NotLiftableError(ArithmeticError):
    """The representative does not satisfy the lifting condition."""

    def __init__(self, message: str, cell: tuple[int, int] | None = None) -> None:
        super().__init__(message)
        self.cell = cell


@dataclass(frozen=True)
class PhiDecomposition:
    d1: tuple[int, ...]
    d2: tuple[int, ...]
    m1: SquareMatrix


def is_representative(M: SquareMatrix) -> bool:
    a = M.entries
    return bool(np.all(a[0] == 1) and np.all(a[:, 0] == 1))


def decompose_phi(M: SquareMatrix) -> PhiDecomposition:
    F = M.ctx
    a = M.entries
    zeros = np.argwhere(a == 0)
    if len(zeros):
        i, j = (int(x) for x in zeros[0])
        raise DecompositionError(f"entry ({i + 1}, {j + 1}) is zero; decomposition needs all entries nonzero")
    m11 = int(a[0, 0])
    col = [int(x) for x in a[:, 0]]
    row = [int(x) for x in a[0]]
    d2 = tuple(F.div(x, m11) for x in row)
    # m1_ij = m_ij * m11 / (m_i1 * m_1j)
    r = F.inv_table[a[:, 0]]
    c = F.mul_table[F.inv_table[a[0]], m11]
    m1 = F.mul_table[F.mul_table[a, r[:, None]], c[None, :]]
    return PhiDecomposition(tuple(col), d2, SquareMatrix._wrap(F, m1))


def compose_phi(dec: PhiDecomposition) -> SquareMatrix:
    return dec.m1.scale_rows(dec.d1).scale_cols(dec.d2)


def _alphas(M1: SquareMatrix) -> tuple[list[int], SquareMatrix]:
    F = M1.ctx
    inv = inverse(M1)
    d = inv.entries
    if d[0, 0] == 0:
        raise NotLiftableError("inverse has a zero (1, 1) entry", (0, 0))
    a1 = F.sqrt(int(d[0, 0]))
    alphas = [a1] + [F.div(int(d[0, j]), a1) for j in range(1, M1.n)]
    for j, x in enumerate(alphas):
        if x == 0:
            raise NotLiftableError(f"alpha_{j + 1} is zero", (0, j))
    return alphas, inv


def involutory_alphas(M1: SquareMatrix) -> list[int]:
    """Recover ``alpha`` with ``inv(M1)_ij = alpha_i alpha_j M1_ij`` or raise."""
    if not is_representative(M1):
        raise NotLiftableError("matrix is not in representative form")
    F = M1.ctx
    alphas, inv = _alphas(M1)
    c, d = M1.entries, inv.entries
    for i in range(M1.n):
        for j in range(M1.n):
            if d[i, j] != F.mul(F.mul(alphas[i], alphas[j]), int(c[i, j])):
                raise NotLiftableError(f"alpha condition fails at ({i + 1}, {j + 1})", (i, j))
    return alphas


def _lift_with(M1: SquareMatrix, alphas: Sequence[int], lambdas: Sequence[int]) -> SquareMatrix:
    F = M1.ctx
    if len(lambdas) != M1.n - 1:
        raise ValueError(f"need {M1.n - 1} lambdas, got {len(lambdas)}")
    if 0 in lambdas:
        raise ValueError("lambdas must be nonzero")
    d1 = [alphas[0], *lambdas]
    d2 = [1, *(F.div(a, lam) for a, lam in zip(alphas[1:], lambdas))]
    return M1.scale_rows(d1).scale_cols(d2)


def lift_involutory(M1: SquareMatrix, lambdas: Sequence[int]) -> SquareMatrix:
    """The involutory matrix ``D1 M1 D2`` for one choice of ``lambda_2..lambda_n``."""
    return _lift_with(M1, involutory_alphas(M1), lambdas)


def iter_involutory_family(M1: SquareMatrix) -> Iterator[SquareMatrix]:
    """Stream all ``(2^m - 1)^(n-1)`` involutory lifts, lambdas in lexicographic order."""
    alphas = involutory_alphas(M1)
    for lambdas in product(M1.ctx.nonzero, repeat=M1.n - 1):
        yield _lift_with(M1, alphas, lambdas)


def lift_involutory_family(M1: SquareMatrix, lambdas: Sequence[int] | None = None):
    """Single lift when ``lambdas`` is given, otherwise the streaming family."""
    if lambdas is None:
        return iter_involutory_family(M1)
    return lift_involutory(M1, lambdas)


def orthogonal_lift_diagonals(M1: SquareMatrix) -> tuple[list[int], list[int]]:
    """The unique ``(D1, D2)`` making ``D1 M1 D2`` orthogonal, or raise."""
    if not is_representative(M1):
        raise NotLiftableError("matrix is not in representative form")
    F = M1.ctx
    inv = inverse(M1)
    d = inv.entries
    n = M1.n
    if d[0, 0] == 0:
        raise NotLiftableError("inverse has a zero (1, 1) entry", (0, 0))
    for k in range(n):
        if d[0, k] == 0 or d[k, 0] == 0:
            raise NotLiftableError("inverse has a zero in its first row or column", (0, k) if d[0, k] == 0 else (k, 0))
    d11 = int(d[0, 0])
    lam = [F.sqrt(int(d[0, j])) for j in range(n)]
    theta = [1] + [F.sqrt(F.div(int(d[i, 0]), d11)) for i in range(1, n)]
    # M1^-T = D1^2 M1 D2^2, i.e. d_ji = lam_i^2 c_ij theta_j^2
    c = M1.entries
    for i in range(n):
        for j in range(n):
            want = F.mul(F.mul(F.mul(lam[i], lam[i]), int(c[i, j])), F.mul(theta[j], theta[j]))
            if int(d[j, i]) != want:
                raise NotLiftableError(f"M1^-T != D1^2 M1 D2^2 at ({i + 1}, {j + 1})", (i, j))
    return lam, theta


def lift_orthogonal(M1: SquareMatrix) -> SquareMatrix:
    lam, theta = orthogonal_lift_diagonals(M1)
    return M1.scale_rows(lam).scale_cols(theta)


def representative(ctx: GF, block) -> SquareMatrix:
    """Border an (n-1) x (n-1) block with ones into representative form."""
    b = np.asarray(block, dtype=np.int64)
    k = b.shape[0]
    a = np.ones((k + 1, k + 1), dtype=np.int64)
    a[1:, 1:] = b
    return SquareMatrix(ctx, a)
