"""Command-line interface.

Exit codes: 0 success / property holds, 1 property fails, 2 usage or parse
error, 3 math-domain error (singular input, failed lift), 4 budget refusal.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from . import canonical, cost, properties
from . import enumerate as enum_
from .field import FieldError, GF
from .matrix import SingularMatrixError, SquareMatrix, diag
from .matrixfile import ParseError, format_matrix, format_tuple, parse_matrices

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN, EXIT_BUDGET = 0, 1, 2, 3, 4

CHECKABLE = ["mds", "involutory", "orthogonal", "semi-involutory", "semi-orthogonal", "symmetric"]

CLASS_NAMES = {
    "involutory-mds": enum_.MatrixClass.INVOLUTORY_MDS,
    "semi-involutory-mds": enum_.MatrixClass.SEMI_INVOLUTORY_MDS,
    "orthogonal-mds": enum_.MatrixClass.ORTHOGONAL_MDS,
    "semi-orthogonal-mds": enum_.MatrixClass.SEMI_ORTHOGONAL_MDS,
    "si-and-so-mds": enum_.MatrixClass.SI_AND_SO_MDS,
    "representative-semi-involutory": enum_.MatrixClass.REPRESENTATIVE_SEMI_INVOLUTORY_MDS,
    "representative-semi-orthogonal": enum_.MatrixClass.REPRESENTATIVE_SEMI_ORTHOGONAL_MDS,
}


class CliError(Exception):
    def __init__(self, message: str, code: int) -> None:
        super().__init__(message)
        self.code = code


def _hex(values) -> list[str]:
    return [f"{int(v):x}" for v in values]


def _rows_hex(M: SquareMatrix) -> list[list[str]]:
    return [_hex(r) for r in M.rows()]


def _emit(args, payload: dict, human: str) -> None:
    if args.json:
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write(human)


def _table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    cols = [header, *rows]
    widths = [max(len(r[i]) for r in cols) for i in range(len(header))]
    return "".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n" for r in cols)


def _load(path: str, poly: int | None = None) -> list[SquareMatrix]:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        ms = parse_matrices(text)
    except OSError as exc:
        raise CliError(str(exc), EXIT_USAGE) from None
    except ParseError as exc:
        raise CliError(f"{path}: {exc}", EXIT_USAGE) from None
    if poly is not None and any(M.ctx.poly != poly for M in ms):
        raise CliError(f"{path}: header polynomial differs from --poly {poly:#x}", EXIT_USAGE)
    return ms


def _load_one(path: str, poly: int | None = None) -> SquareMatrix:
    ms = _load(path, poly)
    if len(ms) != 1:
        raise CliError(f"{path}: expected one matrix, found {len(ms)}", EXIT_USAGE)
    return ms[0]


def _field(m: int, poly: int | None) -> GF:
    try:
        return GF(m, poly)
    except FieldError as exc:
        raise CliError(str(exc), EXIT_USAGE) from None


# --- commands ---------------------------------------------------------------


def cmd_check(args) -> int:
    M = _load_one(args.file, args.poly)
    wanted = CHECKABLE if args.property == "all" else [args.property]
    reports = []
    for name in wanted:
        try:
            reports.append(properties.check(M, name.replace("-", "_")))
        except SingularMatrixError:
            raise CliError(f"{name}: matrix is singular", EXIT_DOMAIN) from None
    results = []
    for r in reports:
        item = {"property": r.property.value.replace("_", "-"), "holds": r.holds}
        if r.witness is not None:
            item["witness"] = {"d": _hex(r.witness.d), "d_prime": _hex(r.witness.d_prime)}
        results.append(item)
    payload = {
        "command": "check",
        "params": {"file": args.file, "property": args.property, "m": M.ctx.m, "poly": f"{M.ctx.poly:#x}", "n": M.n},
        "results": results,
    }
    rows = []
    for it in results:
        w = it.get("witness")
        wtxt = f"D=({' '.join(w['d'])}) D'=({' '.join(w['d_prime'])})" if w else "-"
        rows.append([it["property"], "yes" if it["holds"] else "no", wtxt])
    _emit(args, payload, _table(["property", "holds", "witness"], rows))
    return EXIT_OK if all(r.holds for r in reports) else EXIT_FAIL


def cmd_decompose(args) -> int:
    M = _load_one(args.file, args.poly)
    try:
        dec = canonical.decompose_phi(M)
    except canonical.DecompositionError as exc:
        raise CliError(str(exc), EXIT_DOMAIN) from None
    D1, D2 = diag(M.ctx, dec.d1), diag(M.ctx, dec.d2)
    payload = {
        "command": "decompose",
        "params": {"file": args.file, "m": M.ctx.m, "poly": f"{M.ctx.poly:#x}", "n": M.n},
        "results": {"d1": _hex(dec.d1), "d2": _hex(dec.d2), "m1": _rows_hex(dec.m1)},
    }
    human = "# D1\n" + format_matrix(D1) + "# M1\n" + format_matrix(dec.m1) + "# D2\n" + format_matrix(D2)
    _emit(args, payload, human)
    return EXIT_OK


def cmd_compose(args) -> int:
    ms = _load(args.file, args.poly)
    if len(ms) != 3:
        raise CliError(f"{args.file}: compose expects three blocks (D1, M1, D2), found {len(ms)}", EXIT_USAGE)
    D1, M1, D2 = ms
    if not (D1.is_diagonal() and D2.is_diagonal()):
        raise CliError("first and last blocks must be diagonal", EXIT_DOMAIN)
    if len({D1.ctx, M1.ctx, D2.ctx}) != 1 or len({D1.n, M1.n, D2.n}) != 1:
        raise CliError("blocks disagree on field or order", EXIT_USAGE)
    M = D1 @ M1 @ D2
    payload = {
        "command": "compose",
        "params": {"file": args.file, "m": M.ctx.m, "poly": f"{M.ctx.poly:#x}", "n": M.n},
        "results": {"matrix": _rows_hex(M)},
    }
    _emit(args, payload, format_matrix(M))
    return EXIT_OK


def cmd_count(args) -> int:
    ctx = _field(args.m, args.poly)
    cls = CLASS_NAMES[args.cls]
    mode = args.mode or "both"
    try:
        rep = enum_.count_report(
            ctx,
            cls,
            args.n,
            enumerate=mode in ("enumerate", "both"),
            closed_form=mode in ("closed-form", "both"),
            representative_count=args.representative_count,
            override=args.override_budget,
            threads=args.threads,
        )
    except enum_.BudgetExceededError as exc:
        raise CliError(f"{exc} (estimate {exc.estimate})", EXIT_BUDGET) from None
    except enum_.UnsupportedError as exc:
        raise CliError(str(exc), EXIT_USAGE) from None
    results = {
        "class": args.cls,
        "enumerated": None if rep.enumerated is None else str(rep.enumerated),
        "closed_form": None if rep.closed_form is None else str(rep.closed_form),
        "method": rep.method.value if rep.enumerated is not None else None,
    }
    if mode == "both":
        results["match"] = rep.match
    payload = {
        "command": "count",
        "params": {"n": args.n, "m": args.m, "poly": f"{ctx.poly:#x}", "class": args.cls, "mode": mode},
        "results": results,
    }
    rows = [[k, "-" if v is None else str(v)] for k, v in results.items()]
    _emit(args, payload, _table(["field", "value"], rows))
    if mode == "both" and not rep.match:
        return EXIT_FAIL
    return EXIT_OK


def cmd_search_light(args) -> int:
    if (args.n, args.m) not in ((4, 3), (4, 4)):
        raise CliError(f"search-light supports (n, m) in {{(4, 3), (4, 4)}}, got ({args.n}, {args.m})", EXIT_USAGE)
    ctx = _field(args.m, args.poly)
    best, mats = cost.search_lightest(ctx, args.n, threads=args.threads)
    tuples = [format_tuple(cost.free_block(M.entries)) for M in mats]
    if args.emit:
        with open(args.emit, "w", encoding="utf-8") as fh:
            fh.write("".join(t + "\n" for t in tuples))
    payload = {
        "command": "search-light",
        "params": {"n": args.n, "m": args.m, "poly": f"{ctx.poly:#x}"},
        "results": {"min_cost": str(best), "count": str(len(mats)), "matrices": tuples},
    }
    human = _table(["field", "value"], [["min d-XOR", str(best)], ["minimizers", str(len(mats))]])
    _emit(args, payload, human)
    return EXIT_OK


def cmd_lift(args) -> int:
    M1 = _load_one(args.file, args.poly)
    ctx = M1.ctx
    try:
        if args.kind == "orthogonal":
            out = [canonical.lift_orthogonal(M1)]
        elif args.lambdas:
            lams = [int(t, 16) for t in args.lambdas]
            if any(not 0 < x < ctx.order for x in lams):
                raise CliError("lambdas must be nonzero field elements", EXIT_USAGE)
            out = [canonical.lift_involutory(M1, lams)]
        elif args.all:
            out = list(canonical.iter_involutory_family(M1))
        else:
            raise CliError("involutory lift needs --lambdas or --all", EXIT_USAGE)
    except canonical.NotLiftableError as exc:
        raise CliError(f"not liftable: {exc}", EXIT_DOMAIN) from None
    except SingularMatrixError:
        raise CliError("not liftable: representative is singular", EXIT_DOMAIN) from None
    except ValueError as exc:
        raise CliError(str(exc), EXIT_USAGE) from None
    payload = {
        "command": "lift",
        "params": {"file": args.file, "kind": args.kind, "m": ctx.m, "poly": f"{ctx.poly:#x}", "n": M1.n},
        "results": {"count": str(len(out)), "matrices": [_rows_hex(M) for M in out]},
    }
    _emit(args, payload, "".join(format_matrix(M) for M in out))
    return EXIT_OK


# --- parser -----------------------------------------------------------------


def _poly(text: str) -> int:
    return int(text, 16) if text.lower().startswith("0x") else int(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--poly", type=_poly, default=None, help="irreducible polynomial, e.g. 0x13")
    common.add_argument(
        "--threads", type=int, default=None, help="worker threads for enumeration (default: $MDSLAB_THREADS or 1)"
    )

    p = argparse.ArgumentParser(prog="mdslab", description="Structured MDS matrices over GF(2^m).")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", parents=[common], help="test structural properties of a matrix file")
    s.add_argument("file")
    s.add_argument("--property", default="all", choices=[*CHECKABLE, "all"])
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("decompose", parents=[common], help="write M as D1 M1 D2")
    s.add_argument("file")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("compose", parents=[common], help="multiply the D1, M1, D2 blocks of a file")
    s.add_argument("file")
    s.set_defaults(func=cmd_compose)

    s = sub.add_parser("count", parents=[common], help="count a class of MDS matrices")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--class", dest="cls", required=True, choices=sorted(CLASS_NAMES))
    g = s.add_mutually_exclusive_group()
    g.add_argument("--enumerate", dest="mode", action="store_const", const="enumerate")
    g.add_argument("--closed-form", dest="mode", action="store_const", const="closed-form")
    g.add_argument("--both", dest="mode", action="store_const", const="both")
    s.add_argument("--representative-count", type=int, default=None, help="N for the scaling laws at n >= 4")
    s.add_argument("--override-budget", action="store_true", help="allow searches above 1e10 candidates")
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("search-light", parents=[common], help="lightest 4x4 orthogonal MDS matrices by d-XOR")
    s.add_argument("--n", type=int, default=4)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--emit", metavar="PATH", help="write the minimizers as 9-tuples, one per line")
    s.set_defaults(func=cmd_search_light)

    s = sub.add_parser("lift", parents=[common], help="lift a representative to involutory/orthogonal matrices")
    s.add_argument("file")
    s.add_argument("--kind", required=True, choices=["involutory", "orthogonal"])
    g = s.add_mutually_exclusive_group()
    g.add_argument("--lambdas", nargs="+", metavar="HEX")
    g.add_argument("--all", action="store_true")
    s.set_defaults(func=cmd_lift)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"mdslab: error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
