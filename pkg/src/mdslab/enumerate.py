"""Exhaustive enumeration and closed-form counts of structured MDS matrices.

Enumerators are generators of ``(k, n, n)`` uint8 batches, one batch per
shard of the outermost loop, in lexicographic order of the loop parameters.
Shards may be evaluated by a thread pool (``threads``); results are always
consumed in shard order, so counts and streams are deterministic.
"""

from __future__ import annotations

import enum
import os
from collections.abc import Callable, Iterable, Iterator
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import permutations, product

import numpy as np

from . import _batch
from .field import GF
from .matrix import SquareMatrix

DEFAULT_BUDGET = 10**10


class UnsupportedError(ValueError):
    pass


class BudgetExceededError(RuntimeError):
    def __init__(self, estimate: int, budget: int = DEFAULT_BUDGET) -> None:
        super().__init__(f"search space of {estimate} candidates exceeds budget {budget}; pass override to run anyway")
        self.estimate = estimate
        self.budget = budget


class MatrixClass(str, enum.Enum):
    MDS = "mds"
    INVOLUTORY_MDS = "involutory_mds"
    SEMI_INVOLUTORY_MDS = "semi_involutory_mds"
    ORTHOGONAL_MDS = "orthogonal_mds"
    SEMI_ORTHOGONAL_MDS = "semi_orthogonal_mds"
    SI_AND_SO_MDS = "si_and_so_mds"
    REPRESENTATIVE_SEMI_INVOLUTORY_MDS = "representative_semi_involutory_mds"
    REPRESENTATIVE_SEMI_ORTHOGONAL_MDS = "representative_semi_orthogonal_mds"


class Method(str, enum.Enum):
    EXHAUSTIVE = "exhaustive"
    PARAMETRIZED = "parametrized"
    DERIVED_BY_THEOREM = "derived_by_theorem"


@dataclass(frozen=True)
class CountReport:
    cls: MatrixClass
    n: int
    m: int
    enumerated: int | None
    closed_form: int | None
    method: Method

    @property
    def match(self) -> bool:
        return self.enumerated is not None and self.enumerated == self.closed_form


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("MDSLAB_THREADS", "1")))
    except ValueError:
        return 1


def _run_shards(fn: Callable, shards: Iterable, threads: int | None) -> Iterator:
    threads = default_threads() if threads is None else max(1, threads)
    if threads == 1:
        for s in shards:
            yield fn(s)
        return
    with ThreadPoolExecutor(max_workers=threads) as pool:
        yield from pool.map(fn, shards)


def as_matrices(ctx: GF, batches: Iterable[np.ndarray]) -> Iterator[SquareMatrix]:
    for batch in batches:
        for a in batch:
            yield SquareMatrix._wrap(ctx, a)


def count_batches(batches: Iterable[np.ndarray]) -> int:
    return sum(len(b) for b in batches)


# --- closed forms -----------------------------------------------------------

_NEEDS_REPRESENTATIVE_COUNT = {
    MatrixClass.INVOLUTORY_MDS: lambda q, n: (q - 1) ** (n - 1),
    MatrixClass.SEMI_INVOLUTORY_MDS: lambda q, n: (q - 1) ** (2 * n - 1),
    MatrixClass.ORTHOGONAL_MDS: lambda q, n: 1,
    MatrixClass.SEMI_ORTHOGONAL_MDS: lambda q, n: (q - 1) ** (2 * n - 1),
    MatrixClass.SI_AND_SO_MDS: lambda q, n: (q - 1) ** (2 * n - 1),
    MatrixClass.REPRESENTATIVE_SEMI_INVOLUTORY_MDS: lambda q, n: 1,
    MatrixClass.REPRESENTATIVE_SEMI_ORTHOGONAL_MDS: lambda q, n: 1,
}


def scaling_factor(cls: MatrixClass | str, n: int, m: int) -> int:
    """Multiplier taking the representative count to the full class count.

    Involutory: (2^m-1)^(n-1) * N2.  Semi-involutory, semi-orthogonal and
    their intersection: (2^m-1)^(2n-1) * N.  Orthogonal: N4 itself.
    """
    cls = MatrixClass(cls)
    if cls not in _NEEDS_REPRESENTATIVE_COUNT:
        raise UnsupportedError(f"no scaling law for class {cls.value}")
    return _NEEDS_REPRESENTATIVE_COUNT[cls](1 << m, n)


def count_closed_form(cls: MatrixClass | str, n: int, m: int, representative_count: int | None = None) -> int:
    """Exact count from the known formulas.

    Order 3 has explicit polynomials in q = 2^m (m >= 3).  Other orders apply
    the scaling laws to a caller-supplied representative count.
    """
    cls = MatrixClass(cls)
    q = 1 << m
    if n == 3 and representative_count is None:
        if m < 3:
            raise UnsupportedError("order-3 closed forms require m >= 3")
        si_rep = (q - 2) * (q - 4)
        o = (q - 2) * (q - 3) * (q - 4)
        table = {
            MatrixClass.INVOLUTORY_MDS: (q - 1) ** 2 * si_rep,
            MatrixClass.SEMI_INVOLUTORY_MDS: (q - 1) ** 5 * si_rep,
            MatrixClass.ORTHOGONAL_MDS: o,
            MatrixClass.SEMI_ORTHOGONAL_MDS: (q - 1) ** 5 * o,
            MatrixClass.SI_AND_SO_MDS: (q - 1) ** 5 * si_rep,
            MatrixClass.REPRESENTATIVE_SEMI_INVOLUTORY_MDS: si_rep,
            MatrixClass.REPRESENTATIVE_SEMI_ORTHOGONAL_MDS: o,
        }
        if cls not in table:
            raise UnsupportedError(f"no closed form for {cls.value} at n=3")
        return table[cls]
    if representative_count is None:
        raise UnsupportedError(f"no closed form for {cls.value} at n={n} without a representative count")
    return scaling_factor(cls, n, m) * int(representative_count)


# --- 3 x 3 orthogonal -------------------------------------------------------


def _orth3_shard(ctx: GF, m11: int) -> np.ndarray:
    q = ctx.order
    mt = ctx.mul_table
    vals = np.arange(q, dtype=np.uint8)
    if m11 != 1:
        m12, m21 = (g.ravel() for g in np.meshgrid(vals, vals, indexing="ij"))
        s = mt[m12, m21] ^ np.uint8(m11) ^ m12 ^ m21 ^ np.uint8(1)
        m22 = mt[ctx.inv_table[m11 ^ 1], s]
    else:
        m12, m21 = (g.ravel() for g in np.meshgrid(vals, vals, indexing="ij"))
        ok = (mt[m12, m21] ^ m12 ^ m21) == 0
        m12, m21 = m12[ok], m21[ok]
        k = m12.size
        m12, m21 = np.repeat(m12, q), np.repeat(m21, q)
        m22 = np.tile(vals, k)
    a = np.empty((m12.size, 3, 3), dtype=np.uint8)
    a[:, 0, 0] = m11
    a[:, 0, 1] = m12
    a[:, 1, 0] = m21
    a[:, 1, 1] = m22
    a[:, 0, 2] = m11 ^ m12 ^ 1
    a[:, 1, 2] = m21 ^ m22 ^ 1
    a[:, 2, 0] = m11 ^ m21 ^ 1
    a[:, 2, 1] = m12 ^ m22 ^ 1
    a[:, 2, 2] = m11 ^ m12 ^ m21 ^ m22 ^ 1
    # an orthogonal 3 x 3 matrix is MDS iff it has no zero entry
    return a[np.all(a != 0, axis=(1, 2))]


def orthogonal_mds_3(ctx: GF, threads: int | None = None) -> Iterator[np.ndarray]:
    """All 3 x 3 orthogonal MDS matrices, one batch per value of m11.

    Solves m11 m22 + m12 m21 + m11 + m12 + m21 + m22 = 1 for m22 when
    m11 != 1; when m11 = 1 the equation constrains (m12, m21) and m22 is free.
    """
    return _run_shards(lambda v: _orth3_shard(ctx, v), range(1, ctx.order), threads)


def count_orthogonal_mds_3(ctx: GF, threads: int | None = None) -> int:
    return count_batches(orthogonal_mds_3(ctx, threads))


def enumerate_orthogonal_mds_3(ctx: GF, threads: int | None = None) -> tuple[Iterator[SquareMatrix], Callable[[], int]]:
    return as_matrices(ctx, orthogonal_mds_3(ctx, threads)), lambda: count_orthogonal_mds_3(ctx, threads)


# --- 4 x 4 orthogonal -------------------------------------------------------


def _solve_batch(ctx: GF, aug: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Solve many small linear systems ``[A | b]`` over the field.

    Returns ``(index, solutions)``: one row per solution, index pointing at
    the system.  Rank-deficient systems contribute every solution.
    """
    mt, it = ctx.mul_table, ctx.inv_table
    aug = aug.copy()
    K, R, C1 = aug.shape
    C = C1 - 1
    ar = np.arange(K)
    rows = np.arange(R)
    rank = np.zeros(K, dtype=np.intp)
    pivrow = np.full((K, C), -1, dtype=np.intp)
    for c in range(C):
        cand = (aug[:, :, c] != 0) & (rows[None, :] >= rank[:, None])
        b = ar[cand.any(axis=1)]
        if b.size == 0:
            continue
        p = cand[b].argmax(axis=1)
        r = rank[b]
        prow = aug[b, p]
        aug[b, p] = aug[b, r]
        prow = mt[it[prow[:, c]][:, None], prow]
        aug[b, r] = prow
        f = aug[b, :, c]
        f[np.arange(b.size), r] = 0
        aug[b] ^= mt[f[:, :, None], prow[:, None, :]]
        pivrow[b, c] = r
        rank[b] += 1
    consistent = ~np.any((aug[:, :, C] != 0) & (rows[None, :] >= rank[:, None]), axis=1)

    full = np.flatnonzero(consistent & (rank == C))
    sol_idx = [full]
    sols = [aug[full[:, None], pivrow[full], C]]
    for k in np.flatnonzero(consistent & (rank < C)):
        free = [c for c in range(C) if pivrow[k, c] < 0]
        for vals in product(range(ctx.order), repeat=len(free)):
            y = [0] * C
            for c, v in zip(free, vals):
                y[c] = v
            for c in range(C):
                pr = pivrow[k, c]
                if pr >= 0:
                    acc = int(aug[k, pr, C])
                    for fc in free:
                        acc ^= ctx.mul(int(aug[k, pr, fc]), y[fc])
                    y[c] = acc
            sol_idx.append(np.array([k]))
            sols.append(np.array([y], dtype=np.uint8))
    idx = np.concatenate(sol_idx)
    out = np.concatenate(sols).reshape(-1, C)
    order = np.lexsort(tuple(out[:, c] for c in reversed(range(C))) + (idx,))
    return idx[order], out[order]


def _bordered_rows(ctx: GF) -> np.ndarray:
    g = np.array(list(product(range(1, ctx.order), repeat=3)), dtype=np.uint8)
    return g[(g[:, 0] ^ g[:, 1] ^ g[:, 2]) != 1]


def _two_row_minors_ok(ctx: GF, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    mt = ctx.mul_table
    ok = np.ones(np.broadcast_shapes(u.shape, v.shape)[:-1], dtype=bool)
    w = u.shape[-1]
    for j in range(w):
        for k in range(j + 1, w):
            ok &= (mt[u[..., j], v[..., k]] ^ mt[u[..., k], v[..., j]]) != 0
    return ok


def _orth4_shard(ctx: GF, rows: np.ndarray, i: int) -> np.ndarray:
    mt = ctx.mul_table
    x1 = rows[i]
    x2 = rows
    one = np.uint8(1)
    b1 = np.uint8(x1[0] ^ x1[1] ^ x1[2])
    b2 = x2[:, 0] ^ x2[:, 1] ^ x2[:, 2]
    dot = mt[x1[None, :], x2]
    dot = dot[:, 0] ^ dot[:, 1] ^ dot[:, 2]
    keep = (dot ^ mt[b1 ^ one, b2 ^ one]) == 0
    full1 = np.append(x1, b1 ^ one)
    full2 = np.concatenate([x2, (b2 ^ one)[:, None]], axis=1)
    keep &= _two_row_minors_ok(ctx, full1[None, :], full2)
    x2, b2 = x2[keep], b2[keep]
    K = x2.shape[0]
    if K == 0:
        return np.empty((0, 4, 4), dtype=np.uint8)

    x1b = np.broadcast_to(x1, x2.shape)
    P = x1b ^ x2 ^ one
    aug = np.zeros((K, 5, 4), dtype=np.uint8)
    aug[:, 0, :3] = x1b ^ (b1 ^ one)
    aug[:, 0, 3] = b1 ^ one
    aug[:, 1, :3] = x2 ^ (b2 ^ one)[:, None]
    aug[:, 1, 3] = b2 ^ one
    for r, (k, l) in enumerate(((0, 1), (0, 2), (1, 2)), start=2):
        aug[:, r, k] = P[:, l]
        aug[:, r, l] = P[:, k]
        s = mt[x1b[:, k], x1b[:, l]] ^ mt[x2[:, k], x2[:, l]]
        aug[:, r, 3] = s ^ mt[P[:, k], P[:, l]]
    idx, y = _solve_batch(ctx, aug)

    a = np.empty((idx.size, 4, 4), dtype=np.uint8)
    a[:, 0, :3] = x1
    a[:, 1, :3] = x2[idx]
    a[:, 2, :3] = y
    a[:, :3, 3] = np.bitwise_xor.reduce(a[:, :3, :3], axis=2) ^ one
    a[:, 3, :3] = np.bitwise_xor.reduce(a[:, :3, :3], axis=1) ^ one
    a[:, 3, 3] = np.bitwise_xor.reduce(a[:, :3, :3], axis=(1, 2))
    ok = np.all(a != 0, axis=(1, 2))
    a = a[ok]
    order1 = {((r,), (c,)): a[:, r, c] for r in range(4) for c in range(4)}
    ok = np.ones(a.shape[0], dtype=bool)
    for v in _batch._next_order(ctx, a, order1, 2).values():
        ok &= v != 0
    return a[ok]


def orthogonal_mds_4(ctx: GF, threads: int | None = None) -> Iterator[np.ndarray]:
    """All 4 x 4 orthogonal MDS matrices over GF(8) or GF(16).

    The free 3 x 3 block is built row by row: row 1 and row 2 range over
    nonzero triples whose border entry is nonzero and are filtered by their
    mutual orthogonality; the remaining five constraints are linear in row
    3 and are solved directly.  Batches are sharded by row 1.
    """
    if ctx.m not in (3, 4):
        raise UnsupportedError(f"4 x 4 orthogonal enumeration supports m in (3, 4), got m={ctx.m}")
    rows = _bordered_rows(ctx)
    return _run_shards(lambda i: _orth4_shard(ctx, rows, i), range(len(rows)), threads)


def count_orthogonal_mds_4(ctx: GF, threads: int | None = None) -> int:
    return count_batches(orthogonal_mds_4(ctx, threads))


def enumerate_orthogonal_mds_4(ctx: GF, threads: int | None = None) -> tuple[Iterator[SquareMatrix], Callable[[], int]]:
    return as_matrices(ctx, orthogonal_mds_4(ctx, threads)), lambda: count_orthogonal_mds_4(ctx, threads)


# --- representatives --------------------------------------------------------


@dataclass
class RepresentativeBatch:
    """MDS representatives of one shard plus their property masks."""

    matrices: np.ndarray
    semi_involutory: np.ndarray
    semi_orthogonal: np.ndarray

    @property
    def symmetric(self) -> np.ndarray:
        return np.all(self.matrices == _batch.transpose(self.matrices), axis=(1, 2))


def representative_search_space(n: int, m: int) -> int:
    return ((1 << m) - 1) ** ((n - 1) ** 2)


def _check_budget(n: int, m: int, override: bool, budget: int) -> None:
    est = representative_search_space(n, m)
    if est > budget and not override:
        raise BudgetExceededError(est, budget)


def _valid_rows(ctx: GF, width: int) -> np.ndarray:
    # rows of R must avoid 0 and 1 and be pairwise distinct (order-2 minors
    # against the all-ones border row and column)
    return np.array(list(permutations(range(2, ctx.order), width)), dtype=np.uint8).reshape(-1, width)


def _compatible(ctx: GF, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    # two rows of R: distinct per column and nonsingular 2 x 2 blocks
    return np.all(u != v, axis=-1) & _two_row_minors_ok(ctx, u, v)


def _classify(ctx: GF, blocks: np.ndarray) -> RepresentativeBatch:
    k, w = blocks.shape[0], blocks.shape[1]
    n = w + 1
    a = np.ones((k, n, n), dtype=np.uint8)
    a[:, 1:, 1:] = blocks
    a, _, levels = _batch.mds_filter(ctx, a)
    inv = _batch.inverse_from_minors(ctx, levels, n)
    si = _batch.diagonal_equivalent(ctx, a, inv)
    so = _batch.diagonal_equivalent(ctx, a, _batch.transpose(inv))
    return RepresentativeBatch(a, si, so)


def _rep_shard(ctx: GF, V: np.ndarray, compat: np.ndarray | None, i: int) -> RepresentativeBatch:
    w = V.shape[1]
    r1 = V[i]
    if w == 2:
        ok = np.flatnonzero(_compatible(ctx, r1[None, :], V))
        blocks = np.stack([np.broadcast_to(r1, (ok.size, 2)), V[ok]], axis=1)
    else:
        cand = np.flatnonzero(compat[i])
        j, k = np.nonzero(compat[np.ix_(cand, cand)])
        j, k = cand[j], cand[k]
        blocks = np.stack([np.broadcast_to(r1, (j.size, w)), V[j], V[k]], axis=1)
    return _classify(ctx, blocks)


def scan_representatives(
    ctx: GF, n: int, *, override: bool = False, budget: int = DEFAULT_BUDGET, threads: int | None = None
) -> Iterator[RepresentativeBatch]:
    """Every MDS matrix in representative form, tagged with semi-properties.

    The search space is all (n-1) x (n-1) blocks over the nonzero elements;
    blocks violating an order-2 minor against the unit border are skipped
    without evaluation.  Sharded by the first row of the block.
    """
    if n not in (3, 4):
        raise UnsupportedError(f"representative search supports n in (3, 4), got n={n}")
    _check_budget(n, ctx.m, override, budget)
    V = _valid_rows(ctx, n - 1)
    compat = None
    if n == 4:
        compat = _compatible(ctx, V[:, None, :], V[None, :, :])
    return _run_shards(lambda i: _rep_shard(ctx, V, compat, i), range(len(V)), threads)


_REP_MASK = {
    MatrixClass.REPRESENTATIVE_SEMI_INVOLUTORY_MDS: lambda b: b.semi_involutory,
    MatrixClass.REPRESENTATIVE_SEMI_ORTHOGONAL_MDS: lambda b: b.semi_orthogonal,
}


def enumerate_representative_class(
    ctx: GF,
    n: int,
    cls: MatrixClass | str,
    *,
    override: bool = False,
    budget: int = DEFAULT_BUDGET,
    threads: int | None = None,
) -> Iterator[np.ndarray]:
    """Batches of representative MDS matrices with the requested semi-property."""
    cls = MatrixClass(cls)
    if cls not in _REP_MASK:
        raise UnsupportedError(f"not a representative class: {cls.value}")
    pick = _REP_MASK[cls]
    for b in scan_representatives(ctx, n, override=override, budget=budget, threads=threads):
        yield b.matrices[pick(b)]


def count_representatives(
    ctx: GF, n: int, *, override: bool = False, budget: int = DEFAULT_BUDGET, threads: int | None = None
) -> dict[str, int]:
    """Counts of MDS representatives split by semi-properties and symmetry."""
    out = dict.fromkeys(
        ["mds", "semi_involutory", "semi_orthogonal", "both", "semi_involutory_symmetric"], 0
    )
    for b in scan_representatives(ctx, n, override=override, budget=budget, threads=threads):
        out["mds"] += len(b.matrices)
        out["semi_involutory"] += int(b.semi_involutory.sum())
        out["semi_orthogonal"] += int(b.semi_orthogonal.sum())
        out["both"] += int((b.semi_involutory & b.semi_orthogonal).sum())
        out["semi_involutory_symmetric"] += int((b.semi_involutory & b.symmetric).sum())
    return out


def count_symmetric_representatives(
    ctx: GF, n: int = 4, *, override: bool = False, threads: int | None = None
) -> tuple[int, int]:
    """(symmetric, non-symmetric) split of semi-involutory MDS representatives."""
    if n != 4 or ctx.m not in (3, 4):
        raise UnsupportedError("symmetric split is supported for n = 4, m in (3, 4)")
    c = count_representatives(ctx, n, override=override, threads=threads)
    sym = c["semi_involutory_symmetric"]
    return sym, c["semi_involutory"] - sym


# --- brute-force oracle -----------------------------------------------------


def _brute_shard(ctx: GF, first_row: tuple[int, int, int]) -> dict[str, int]:
    q = ctx.order
    rest = np.array(list(product(range(1, q), repeat=6)), dtype=np.uint8)
    a = np.empty((rest.shape[0], 3, 3), dtype=np.uint8)
    a[:, 0] = first_row
    a[:, 1:] = rest.reshape(-1, 2, 3)
    a, _, levels = _batch.mds_filter(ctx, a)
    inv = _batch.inverse_from_minors(ctx, levels, 3)
    invol = _batch.is_identity(_batch.matmul(ctx, a, a))
    orth = _batch.is_identity(_batch.matmul(ctx, a, _batch.transpose(a)))
    si = _batch.diagonal_equivalent(ctx, a, inv)
    so = _batch.diagonal_equivalent(ctx, a, _batch.transpose(inv))
    return {
        "mds": len(a),
        MatrixClass.INVOLUTORY_MDS.value: int(invol.sum()),
        MatrixClass.SEMI_INVOLUTORY_MDS.value: int(si.sum()),
        MatrixClass.ORTHOGONAL_MDS.value: int(orth.sum()),
        MatrixClass.SEMI_ORTHOGONAL_MDS.value: int(so.sum()),
        MatrixClass.SI_AND_SO_MDS.value: int((si & so).sum()),
    }


def brute_force_counts_3x3(ctx: GF, threads: int | None = None) -> dict[str, int]:
    """Classify every 3 x 3 matrix over GF(8)* directly from the definitions.

    Independent of representatives and closed forms: each matrix is tested
    for MDS by its minors, then for M^2 = I, M M^T = I, and for M^-1 (resp.
    M^-T) being a diagonal rescaling of M.
    """
    if ctx.m != 3:
        raise UnsupportedError(f"brute force is limited to m = 3 (got m = {ctx.m})")
    totals: dict[str, int] = {}
    shards = list(product(range(1, ctx.order), repeat=3))
    for part in _run_shards(lambda r: _brute_shard(ctx, r), shards, threads):
        for k, v in part.items():
            totals[k] = totals.get(k, 0) + v
    return totals


# --- count dispatch ---------------------------------------------------------


def count_enumerated(
    ctx: GF, cls: MatrixClass | str, n: int, *, override: bool = False, threads: int | None = None
) -> tuple[int, Method]:
    """Count a class by enumeration, scaling representative counts where needed."""
    cls = MatrixClass(cls)
    m = ctx.m
    if cls is MatrixClass.ORTHOGONAL_MDS:
        if n == 3:
            return count_orthogonal_mds_3(ctx, threads), Method.PARAMETRIZED
        if n == 4:
            return count_orthogonal_mds_4(ctx, threads), Method.PARAMETRIZED
        raise UnsupportedError(f"orthogonal enumeration supports n in (3, 4), got {n}")
    if cls is MatrixClass.MDS:
        raise UnsupportedError("plain MDS counts are not enumerated")
    c = count_representatives(ctx, n, override=override, threads=threads)
    if cls is MatrixClass.REPRESENTATIVE_SEMI_INVOLUTORY_MDS:
        return c["semi_involutory"], Method.EXHAUSTIVE
    if cls is MatrixClass.REPRESENTATIVE_SEMI_ORTHOGONAL_MDS:
        return c["semi_orthogonal"], Method.EXHAUSTIVE
    base = {
        MatrixClass.INVOLUTORY_MDS: c["semi_involutory"],
        MatrixClass.SEMI_INVOLUTORY_MDS: c["semi_involutory"],
        MatrixClass.SEMI_ORTHOGONAL_MDS: c["semi_orthogonal"],
        MatrixClass.SI_AND_SO_MDS: c["both"],
    }[cls]
    return scaling_factor(cls, n, m) * base, Method.DERIVED_BY_THEOREM


def count_report(
    ctx: GF,
    cls: MatrixClass | str,
    n: int,
    *,
    enumerate: bool = True,
    closed_form: bool = True,
    representative_count: int | None = None,
    override: bool = False,
    threads: int | None = None,
) -> CountReport:
    cls = MatrixClass(cls)
    enumerated = None
    method = Method.DERIVED_BY_THEOREM
    if enumerate:
        enumerated, method = count_enumerated(ctx, cls, n, override=override, threads=threads)
    cf = None
    if closed_form:
        cf = count_closed_form(cls, n, ctx.m, representative_count)
    return CountReport(cls, n, ctx.m, enumerated, cf, method)
