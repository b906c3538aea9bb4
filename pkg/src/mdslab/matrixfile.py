"""Plain-text matrix files.

::

    # optional comments
    gf m=3 poly=0xb n=3
    1 2 3
    2 3 1
    3 1 2

Entries are lowercase hex field elements.  A file may hold several blocks
back to back; each starts with its own ``gf`` header.
"""

from __future__ import annotations

import re

from .field import FieldError, GF
from .matrix import SquareMatrix

_HEADER = re.compile(r"^gf\s+m=(\d+)\s+poly=0x([0-9a-fA-F]+)\s+n=(\d+)\s*$")


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def format_matrix(M: SquareMatrix) -> str:
    lines = [f"gf m={M.ctx.m} poly={M.ctx.poly:#x} n={M.n}"]
    lines += [" ".join(f"{x:x}" for x in row) for row in M.rows()]
    return "\n".join(lines) + "\n"


def parse_matrices(text: str) -> list[SquareMatrix]:
    lines = [
        (no, raw) for no, raw in enumerate(text.splitlines(), start=1)
        if raw.strip() and not raw.lstrip().startswith("#")
    ]
    out: list[SquareMatrix] = []
    pos = 0
    while pos < len(lines):
        no, raw = lines[pos]
        hdr = _HEADER.match(raw.strip())
        if not hdr:
            raise ParseError("expected header 'gf m=<int> poly=0x<hex> n=<int>'", no)
        m, poly, n = int(hdr.group(1)), int(hdr.group(2), 16), int(hdr.group(3))
        try:
            ctx = GF(m, poly)
        except FieldError as exc:
            raise ParseError(str(exc), no) from None
        if n < 1:
            raise ParseError("matrix order must be positive", no)
        rows = []
        for r in range(n):
            pos += 1
            if pos >= len(lines):
                raise ParseError(f"expected {n} rows, found {r}", no + r + 1)
            rno, rraw = lines[pos]
            row = []
            for tok in re.finditer(r"\S+", rraw):
                col = tok.start() + 1
                try:
                    v = int(tok.group(), 16)
                except ValueError:
                    raise ParseError(f"{tok.group()!r} is not a hex element", rno, col) from None
                if v >= ctx.order:
                    raise ParseError(f"element {tok.group()} out of range for m={m}", rno, col)
                row.append(v)
            if len(row) != n:
                raise ParseError(f"expected {n} entries, found {len(row)}", rno, len(rraw) + 1)
            rows.append(row)
        out.append(SquareMatrix(ctx, rows))
        pos += 1
    if not out:
        raise ParseError("no matrix found", 1)
    return out


def parse_matrix(text: str) -> SquareMatrix:
    ms = parse_matrices(text)
    if len(ms) != 1:
        raise ParseError(f"expected one matrix, found {len(ms)}", 1)
    return ms[0]


def read_matrices(path: str) -> list[SquareMatrix]:
    with open(path, encoding="utf-8") as fh:
        return parse_matrices(fh.read())


def format_tuple(values) -> str:
    """Free-block tuple notation: ``(1, 2, 4, 2, 1, 6, 4, 6, 1)``."""
    return "(" + ", ".join(f"{int(v):x}" for v in values) + ")"


def parse_tuple(line: str) -> tuple[int, ...]:
    body = line.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ValueError(f"not a tuple: {line!r}")
    return tuple(int(t, 16) for t in body[1:-1].split(","))
