"""Vectorized kernels over stacks of small matrices.

Arrays have shape ``(B, n, n)`` and dtype ``uint8``; all arithmetic is table
lookups into ``ctx.mul_table`` / ``ctx.inv_table``.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .field import GF

Minors = dict[tuple[tuple[int, ...], tuple[int, ...]], np.ndarray]


def matmul(ctx: GF, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    mt = ctx.mul_table
    n = a.shape[-1]
    out = np.zeros(np.broadcast_shapes(a.shape, b.shape), dtype=np.uint8)
    for k in range(n):
        out ^= mt[a[..., :, k, None], b[..., None, k, :]]
    return out


def transpose(a: np.ndarray) -> np.ndarray:
    return np.swapaxes(a, -1, -2)


def is_identity(a: np.ndarray) -> np.ndarray:
    n = a.shape[-1]
    return np.all(a == np.eye(n, dtype=np.uint8), axis=(-2, -1))


def _next_order(ctx: GF, a: np.ndarray, prev: Minors, k: int) -> Minors:
    """Order-k minors by Laplace expansion along the first chosen row."""
    mt = ctx.mul_table
    n = a.shape[-1]
    out: Minors = {}
    for rows in combinations(range(n), k):
        r0, rest = rows[0], rows[1:]
        for cols in combinations(range(n), k):
            acc = np.zeros(a.shape[0], dtype=np.uint8)
            for t, c in enumerate(cols):
                sub = cols[:t] + cols[t + 1:]
                acc ^= mt[a[:, r0, c], prev[rest, sub]]
            out[rows, cols] = acc
    return out


def mds_filter(ctx: GF, a: np.ndarray) -> tuple[np.ndarray, np.ndarray, list[Minors]]:
    """Keep only the MDS matrices of the stack.

    Returns ``(survivors, index, minors)`` where ``index`` locates the
    survivors in ``a`` and ``minors[k]`` holds every order-k minor of the
    survivors.  Each order is computed only for matrices that passed the
    lower ones.
    """
    n = a.shape[-1]
    idx = np.flatnonzero(np.all(a != 0, axis=(1, 2)))
    a = a[idx]
    order1: Minors = {((i,), (j,)): a[:, i, j] for i in range(n) for j in range(n)}
    levels: list[Minors] = [{}, order1]
    for k in range(2, n + 1):
        cur = _next_order(ctx, a, levels[-1], k)
        ok = np.ones(a.shape[0], dtype=bool)
        for v in cur.values():
            ok &= v != 0
        keep = np.flatnonzero(ok)
        a, idx = a[keep], idx[keep]
        levels = [{key: v[keep] for key, v in lv.items()} for lv in levels]
        levels.append({key: v[keep] for key, v in cur.items()})
    return a, idx, levels


def inverse_from_minors(ctx: GF, levels: list[Minors], n: int) -> np.ndarray:
    """Adjugate over determinant (no cofactor signs in characteristic 2)."""
    full = tuple(range(n))
    det = levels[n][full, full]
    dinv = ctx.inv_table[det]
    out = np.empty((det.shape[0], n, n), dtype=np.uint8)
    if n == 1:
        out[:, 0, 0] = dinv
        return out
    cof = levels[n - 1]
    for i in range(n):
        for j in range(n):
            rows = tuple(r for r in full if r != i)
            cols = tuple(c for c in full if c != j)
            out[:, j, i] = ctx.mul_table[cof[rows, cols], dinv]
    return out


def diagonal_equivalent(ctx: GF, m: np.ndarray, target: np.ndarray) -> np.ndarray:
    """Mask of rows where ``target = D m D'`` for some nonsingular diagonals.

    Valid when both stacks have no zero entries: the ratios
    ``target_ij / m_ij`` must then form a rank-one matrix ``a_i b_j``.
    """
    mt = ctx.mul_table
    r = mt[target, ctx.inv_table[m]]
    lhs = mt[r, r[:, :1, :1]]
    rhs = mt[r[:, :, :1], r[:, :1, :]]
    return np.all(lhs == rhs, axis=(1, 2))
