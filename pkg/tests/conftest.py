from pathlib import Path

import numpy as np
import pytest

from mdslab.field import GF
from mdslab.matrix import SquareMatrix
from mdslab.matrixfile import parse_tuple

FIXTURES = Path(__file__).parent / "fixtures"


def load_tuples(name: str) -> list[tuple[int, ...]]:
    lines = (FIXTURES / name).read_text().splitlines()
    return [parse_tuple(line) for line in lines if line.strip()]


def complete_orthogonal_4(ctx: GF, block: tuple[int, ...]) -> SquareMatrix:
    """Rebuild a 4 x 4 orthogonal matrix from its free 3 x 3 block.

    Every row and column of an orthogonal matrix over GF(2^m) sums to 1
    (the sum of squares is the square of the sum), which fixes the border.
    """
    a = np.zeros((4, 4), dtype=np.uint8)
    a[:3, :3] = np.array(block, dtype=np.uint8).reshape(3, 3)
    for i in range(3):
        a[i, 3] = 1 ^ a[i, 0] ^ a[i, 1] ^ a[i, 2]
        a[3, i] = 1 ^ a[0, i] ^ a[1, i] ^ a[2, i]
    a[3, 3] = 1 ^ a[3, 0] ^ a[3, 1] ^ a[3, 2]
    return SquareMatrix(ctx, a)


def random_nonzero(rng: np.random.Generator, ctx: GF, n: int) -> SquareMatrix:
    return SquareMatrix(ctx, rng.integers(1, ctx.order, size=(n, n)))


@pytest.fixture
def f8() -> GF:
    return GF(3)


@pytest.fixture
def f16() -> GF:
    return GF(4)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240917)


def nonsymmetric_semi_involutory() -> tuple[SquareMatrix, tuple[int, ...], tuple[int, ...]]:
    """Semi-involutory, non-symmetric 4 x 4 matrix over x^4 + x + 1 with its witness."""
    F = GF(4, 0x13)
    def e(k: int) -> int:
        return F.pow(2, k)

    rows = [
        [1, 1, 1, 1],
        [1, e(5), e(1), e(4)],
        [1, e(4), e(10), e(2)],
        [1, e(8), e(5), e(11)],
    ]
    d = (1, e(12), e(1), e(11))
    d_prime = (e(14), e(11), 1, e(10))
    return SquareMatrix(F, rows), d, d_prime


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
