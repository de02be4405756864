"""Command-line interface.

Exit codes: 0 success, 1 a check failed, 2 usage or precondition error.
Every number in JSON and CSV output is a decimal string.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import identity_suite, series_engine
from .euler_seidel import build_matrix
from .exact_core import IntPolynomial, format_polynomial
from .sequences import SeqKind, terms

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

KIND_CHOICES = [k.value for k in SeqKind]
POLY_KIND_CHOICES = [k.value for k in SeqKind if k.is_polynomial]


class UsageError(Exception):
    pass


def _json_value(v):
    return v.to_json() if isinstance(v, IntPolynomial) else str(v)


def _csv_value(v) -> str:
    return ";".join(v.to_json()) if isinstance(v, IntPolynomial) else str(v)


def _human_value(v) -> str:
    return format_polynomial(v) if isinstance(v, IntPolynomial) else str(v)


def _dump_json(doc) -> str:
    return json.dumps(doc, separators=(",", ":")) + "\n"


def _dump_csv(header: list[str], rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _output_format(args) -> str:
    if args.json and args.csv:
        raise UsageError("--json and --csv are mutually exclusive")
    return "json" if args.json else "csv" if args.csv else "table"


def _kind(args) -> SeqKind:
    kind = SeqKind(args.kind)
    if kind is SeqKind.STIRLING2 and args.m is None:
        raise UsageError("stirling2 needs --m")
    if args.m is not None and args.m < 0:
        raise UsageError("--m must be nonnegative")
    return kind


def cmd_seq(args) -> tuple[str, int]:
    fmt = _output_format(args)
    kind = _kind(args)
    if args.count < 1:
        raise UsageError("--count must be at least 1")
    values = terms(kind, args.count, args.m)
    if fmt == "json":
        return _dump_json([_json_value(v) for v in values]), EXIT_OK
    if fmt == "csv":
        return _dump_csv(["n", "value"], ([n, _csv_value(v)] for n, v in enumerate(values))), EXIT_OK
    if kind.is_polynomial:
        name = "phi" if kind is SeqKind.BELL_POLY else "F"
        lines = [f"{name}_{n}(x) = {_human_value(v)}" for n, v in enumerate(values)]
        return "\n".join(lines) + "\n", EXIT_OK
    return " ".join(str(v) for v in values) + "\n", EXIT_OK


def cmd_esmatrix(args) -> tuple[str, int]:
    fmt = _output_format(args)
    kind = _kind(args)
    if args.size < 1:
        raise UsageError("--size must be at least 1")
    matrix = build_matrix(terms(kind, args.size, args.m))
    if fmt == "json":
        doc = {
            "kind": kind.value,
            "size": args.size,
            "rows": [[_json_value(v) for v in row] for row in matrix.rows],
        }
        if args.m is not None:
            doc["m"] = args.m
        return _dump_json(doc), EXIT_OK
    if fmt == "csv":
        return _dump_csv(["k", "n", "value"], ([k, n, _csv_value(v)] for k, n, v in matrix.entries())), EXIT_OK
    cells = [[_human_value(v) for v in row] for row in matrix.rows]
    width = max(len(c) for row in cells for c in row)
    sep = " | " if kind.is_polynomial else " "
    lines = [sep.join(c.rjust(width) for c in row).rstrip() for row in cells]
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_check(args) -> tuple[str, int]:
    fmt = _output_format(args)
    if args.max_n < 1:
        raise UsageError("--max-n must be at least 1")
    poly_max_n = args.poly_max_n if args.poly_max_n is not None else args.max_n
    if poly_max_n < 1:
        raise UsageError("--poly-max-n must be at least 1")
    if args.target == "all":
        results = identity_suite.check_all(args.max_n, poly_max_n)
    elif args.target in identity_suite.REGISTRY:
        kind = identity_suite.REGISTRY[args.target].kind
        results = [identity_suite.check(args.target, poly_max_n if kind == "polynomial" else args.max_n)]
    else:
        raise UsageError(
            f"unknown identity {args.target!r}; registered: all, " + ", ".join(identity_suite.registered_names())
        )
    code = EXIT_OK if all(r.passed for r in results) else EXIT_FAIL
    if fmt == "json":
        return _dump_json({"results": [r.to_json() for r in results]}), code
    if fmt == "csv":
        rows = []
        for r in results:
            cx = r.counterexample
            rows.append([
                r.name, r.eq_label, r.max_n, r.status,
                "" if cx is None else cx.n,
                "" if cx is None or cx.m is None else cx.m,
                "" if cx is None else _csv_value(cx.lhs),
                "" if cx is None else _csv_value(cx.rhs),
            ])
        return _dump_csv(["name", "eq", "max_n", "status", "n", "m", "lhs", "rhs"], rows), code
    lines = []
    for r in results:
        line = f"{r.status.upper():4}  {r.name:<26} ({r.eq_label})  max_n={r.max_n}"
        cx = r.counterexample
        if cx is not None:
            where = f"n={cx.n}" + ("" if cx.m is None else f", m={cx.m}")
            line += f"  counterexample {where}: {_human_value(cx.lhs)} != {_human_value(cx.rhs)}"
        lines.append(line)
    return "\n".join(lines) + "\n", code


def cmd_series(args) -> tuple[str, int]:
    fmt = _output_format(args)
    if args.order < series_engine.MIN_ORDER:
        raise UsageError(f"--order must be at least {series_engine.MIN_ORDER}")
    results = series_engine.run_series_checks(args.order)
    code = EXIT_OK if all(r.passed for r in results) else EXIT_FAIL
    if fmt == "json":
        return _dump_json({"order": args.order, "results": [r.to_json() for r in results]}), code
    if fmt == "csv":
        rows = [[r.name, r.order, r.status, "" if r.passed else r.first_mismatch] for r in results]
        return _dump_csv(["name", "order", "status", "first_mismatch"], rows), code
    lines = []
    for r in results:
        line = f"{r.status.upper():4}  {r.name:<8} order={r.order}"
        if not r.passed:
            line += f"  first mismatch at t^{r.first_mismatch}"
        lines.append(line)
    return "\n".join(lines) + "\n", code


def _add_format_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="emit a single JSON document")
    p.add_argument("--csv", action="store_true", help="emit CSV")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulerseidel",
        description="Euler-Seidel matrices for Stirling, Bell and Fubini numbers and polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, choices, help_text in [
        ("seq", KIND_CHOICES, "print the first terms of a sequence"),
        ("poly", POLY_KIND_CHOICES, "alias of seq for the polynomial kinds"),
    ]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("kind", choices=choices)
        p.add_argument("--count", type=int, default=10, help="number of terms, indices 0..count-1")
        p.add_argument("--m", type=int, help="column for stirling2")
        _add_format_flags(p)
        p.set_defaults(func=cmd_seq)

    p = sub.add_parser("esmatrix", help="build and print an Euler-Seidel triangle")
    p.add_argument("kind", choices=KIND_CHOICES)
    p.add_argument("--size", type=int, default=6, help="length of the initial sequence")
    p.add_argument("--m", type=int, help="column for stirling2")
    _add_format_flags(p)
    p.set_defaults(func=cmd_esmatrix)

    p = sub.add_parser("check", help="verify registered identities")
    p.add_argument("target", help="identity name or 'all'")
    p.add_argument("--max-n", type=int, default=identity_suite.NUMBER_MAX_N)
    p.add_argument("--poly-max-n", type=int, default=None,
                   help="range for polynomial identities (default: --max-n)")
    _add_format_flags(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("series", help="verify the generating-function checks")
    p.add_argument("--order", type=int, default=series_engine.DEFAULT_ORDER)
    _add_format_flags(p)
    p.set_defaults(func=cmd_series)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
