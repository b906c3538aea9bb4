"""d-XOR implementation cost and the search for the lightest orthogonal MDS matrices."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .enumerate import UnsupportedError, orthogonal_mds_4
from .field import GF
from .matrix import SquareMatrix


def multiplication_matrix(a: int, ctx: GF) -> np.ndarray:
    """Binary m x m matrix of ``b -> a*b``; column j holds the bits of ``a * x^j``."""
    m = ctx.m
    out = np.zeros((m, m), dtype=np.uint8)
    for j in range(m):
        v = ctx.mul(a, 1 << j)
        out[:, j] = [(v >> i) & 1 for i in range(m)]
    return out


def dxor_element(a: int, ctx: GF) -> int:
    """XOR gates to multiply by ``a``: ones in its multiplication matrix minus m."""
    if a == 0:
        return 0
    return int(multiplication_matrix(a, ctx).sum()) - ctx.m


def dxor_table(ctx: GF) -> np.ndarray:
    return np.array([dxor_element(a, ctx) for a in ctx.elements], dtype=np.int64)


def addition_cost(n: int, m: int) -> int:
    # n output words, each the sum of n products: n - 1 word XORs of m bits
    return n * (n - 1) * m


@dataclass(frozen=True)
class DxorReport:
    per_entry: tuple[tuple[int, ...], ...]
    addition_cost: int
    total: int


def dxor_matrix(M: SquareMatrix) -> DxorReport:
    table = dxor_table(M.ctx)
    per = table[M.entries]
    add = addition_cost(M.n, M.ctx.m)
    return DxorReport(tuple(tuple(int(x) for x in row) for row in per), add, int(per.sum()) + add)


def free_block(a: np.ndarray) -> tuple[int, ...]:
    """The 9-tuple (m11, m12, m13, m21, ..., m33) of a 4 x 4 matrix."""
    return tuple(int(x) for x in np.asarray(a)[:3, :3].ravel())


def search_lightest(ctx: GF, n: int = 4, threads: int | None = None) -> tuple[int, list[SquareMatrix]]:
    """Minimum d-XOR cost over all 4 x 4 orthogonal MDS matrices and its minimizers.

    Minimizers are sorted by their free 3 x 3 block.
    """
    if n != 4:
        raise UnsupportedError(f"lightest search is implemented for n = 4, got n = {n}")
    table = dxor_table(ctx)
    add = addition_cost(n, ctx.m)
    best: int | None = None
    found: list[np.ndarray] = []
    for batch in orthogonal_mds_4(ctx, threads):
        if not len(batch):
            continue
        cost = table[batch].sum(axis=(1, 2)) + add
        lo = int(cost.min())
        if best is None or lo < best:
            best, found = lo, []
        if lo == best:
            found.append(batch[cost == lo])
    if best is None:
        return 0, []
    mats = np.concatenate(found)
    mats = mats[sorted(range(len(mats)), key=lambda i: free_block(mats[i]))]
    return best, [SquareMatrix._wrap(ctx, a) for a in mats]
