"""Dense square matrices over GF(2^m) with value semantics."""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from itertools import combinations

import numpy as np

from .field import GF


class SingularMatrixError(ArithmeticError):
    pass


class UnsupportedOrderError(ValueError):
    pass


class SquareMatrix:
    """An immutable n x n matrix over a field.

    Entries live in a read-only ``uint8`` array; every operation returns a
    fresh matrix.  Equality and hashing are by field and entries.
    """

    __slots__ = ("ctx", "_a")

    def __init__(self, ctx: GF, entries) -> None:
        a = np.array(entries, dtype=np.int64)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
            raise ValueError(f"expected a non-empty square array, got shape {a.shape}")
        if a.min() < 0 or a.max() >= ctx.order:
            raise ValueError(f"entries must lie in [0, {ctx.order})")
        a = a.astype(np.uint8)
        a.flags.writeable = False
        self.ctx = ctx
        self._a = a

    @classmethod
    def _wrap(cls, ctx: GF, a: np.ndarray) -> SquareMatrix:
        obj = object.__new__(cls)
        a = np.ascontiguousarray(a, dtype=np.uint8)
        a.flags.writeable = False
        obj.ctx = ctx
        obj._a = a
        return obj

    @property
    def n(self) -> int:
        return self._a.shape[0]

    @property
    def entries(self) -> np.ndarray:
        return self._a

    @property
    def T(self) -> SquareMatrix:
        return SquareMatrix._wrap(self.ctx, self._a.T)

    def rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(int(x) for x in row) for row in self._a)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return int(self._a[ij])

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.rows())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return self.ctx == other.ctx and np.array_equal(self._a, other._a)

    def __hash__(self) -> int:
        return hash((self.ctx, self._a.tobytes()))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(f"{x:x}" for x in row) for row in self.rows())
        return f"SquareMatrix({self.ctx!r}, [{body}])"

    def __add__(self, other: SquareMatrix) -> SquareMatrix:
        return SquareMatrix._wrap(self.ctx, self._a ^ other._a)

    def __matmul__(self, other: SquareMatrix) -> SquareMatrix:
        if self.n != other.n:
            raise ValueError("order mismatch")
        return SquareMatrix._wrap(self.ctx, matmul_array(self.ctx, self._a, other._a))

    def scale_rows(self, d: Sequence[int]) -> SquareMatrix:
        """Diag(d) @ self, without building the diagonal matrix."""
        mt = self.ctx.mul_table
        return SquareMatrix._wrap(self.ctx, mt[np.asarray(d, dtype=np.uint8)[:, None], self._a])

    def scale_cols(self, d: Sequence[int]) -> SquareMatrix:
        """self @ Diag(d)."""
        mt = self.ctx.mul_table
        return SquareMatrix._wrap(self.ctx, mt[self._a, np.asarray(d, dtype=np.uint8)[None, :]])

    def diagonal(self) -> tuple[int, ...]:
        return tuple(int(x) for x in np.diagonal(self._a))

    def is_diagonal(self) -> bool:
        return not np.any(self._a[~np.eye(self.n, dtype=bool)])

    def zero_pattern(self) -> np.ndarray:
        return self._a == 0


def matmul_array(ctx: GF, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Field matrix product on raw ``uint8`` arrays (leading axes broadcast)."""
    prods = ctx.mul_table[a[..., :, :, None], b[..., None, :, :]]
    return np.bitwise_xor.reduce(prods, axis=-2)


def identity(ctx: GF, n: int) -> SquareMatrix:
    return SquareMatrix._wrap(ctx, np.eye(n, dtype=np.uint8))


def diag(ctx: GF, values: Iterable[int]) -> SquareMatrix:
    v = [ctx.check(int(x)) for x in values]
    return SquareMatrix._wrap(ctx, np.diag(np.array(v, dtype=np.uint8)))


def determinant(M: SquareMatrix) -> int:
    """Determinant by Gaussian elimination; 0 iff ``M`` is singular."""
    F = M.ctx
    a = [list(row) for row in M.rows()]
    n = M.n
    det = 1
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c]), None)
        if p is None:
            return 0
        if p != c:
            a[c], a[p] = a[p], a[c]  # a row swap only flips the sign, and -1 = 1 here
        piv = a[c][c]
        det = F.mul(det, piv)
        pinv = F.inv(piv)
        for r in range(c + 1, n):
            f = a[r][c]
            if f:
                f = F.mul(f, pinv)
                a[r] = [x ^ F.mul(f, y) for x, y in zip(a[r], a[c])]
    return det


def inverse(M: SquareMatrix) -> SquareMatrix:
    """Gauss-Jordan inverse; raises :class:`SingularMatrixError`."""
    F = M.ctx
    n = M.n
    a = [list(row) + [int(i == r) for i in range(n)] for r, row in enumerate(M.rows())]
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c]), None)
        if p is None:
            raise SingularMatrixError("matrix is singular")
        a[c], a[p] = a[p], a[c]
        pinv = F.inv(a[c][c])
        a[c] = [F.mul(pinv, x) for x in a[c]]
        for r in range(n):
            f = a[r][c]
            if r != c and f:
                a[r] = [x ^ F.mul(f, y) for x, y in zip(a[r], a[c])]
    return SquareMatrix._wrap(F, np.array([row[n:] for row in a], dtype=np.uint8))


def minors(M: SquareMatrix, order: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...], int]]:
    """Yield ``(rows, cols, det)`` for every square sub-matrix of the given order."""
    a = M.entries
    for rows in combinations(range(M.n), order):
        for cols in combinations(range(M.n), order):
            sub = SquareMatrix._wrap(M.ctx, a[np.ix_(rows, cols)])
            yield rows, cols, determinant(sub)


def is_mds(M: SquareMatrix) -> bool:
    """True iff every square sub-matrix is nonsingular.

    Orders are visited smallest first so that zero entries and singular
    2 x 2 blocks, the usual failures, exit early.
    """
    if np.any(M.entries == 0):
        return False
    for k in range(2, M.n + 1):
        for _, _, d in minors(M, k):
            if d == 0:
                return False
    return True


def is_mds_orthogonal_fast(M: SquareMatrix) -> bool:
    """MDS test valid only for orthogonal ``M`` of order 3 or 4.

    For orthogonal M the inverse is the transpose, so the (n-1) x (n-1)
    minors are entries of M and the determinant is 1; only orders 1 and,
    for n = 4, 2 need inspecting.
    """
    if M.n not in (3, 4):
        raise UnsupportedOrderError(f"fast orthogonal MDS check needs n in (3, 4), got {M.n}")
    if np.any(M.entries == 0):
        return False
    if M.n == 3:
        return True
    return all(d for _, _, d in minors(M, 2))
