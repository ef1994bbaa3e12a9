"""Command line front end.

Two top-level commands: `triangle` prints a built coefficient triangle in
table, json, or csv form; `check` runs one of the named verification or
scan routines and exits 0 on pass, 1 when failures were found, 2 on usage
or input errors.  All output goes to stdout unless --out FILE is given.

Machine formats encode every rational as a "p/q" (or plain integer)
string, never as a float.  The triangle cache directory comes from
--cache, with the LCLAB_CACHE environment variable taking precedence when
set.  --jobs is accepted on every command for interface stability, but
execution is sequential regardless; results do not depend on it.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import arith
from .arith import ArithFn, from_table, _exactify
from .cache import ENV_VAR, CacheError, entry_name, load_triangle, save_triangle
from .concavity import (
    ConcavityReport,
    c_vertical_check,
    first_failure_table,
    hong_zhang_scan,
    horizontal_check,
    vertical_check,
    window_top,
    MAX_WINDOW,
)
from .partitions import check_no_identity
from .triangles import (
    CheckResult,
    DEFAULT_EVAL_POINTS,
    Triangle,
    build_triangle,
    check_conversion,
    closed_forms_check,
    euler_product_crosscheck,
    genfun_crosscheck,
)

G_CHOICES = "one|id|square|sigma|sigma_k=K|custom=PATH"


def parse_g(token: str) -> ArithFn:
    """Turn a --g token into an arithmetic function."""
    if token == "one":
        return arith.one()
    if token == "id":
        return arith.identity()
    if token == "square":
        return arith.square()
    if token == "sigma":
        return arith.sigma()
    if token.startswith("sigma_k="):
        raw = token.split("=", 1)[1]
        try:
            power = int(raw)
        except ValueError:
            raise ValueError(f"sigma_k wants an integer power, got {raw!r}") from None
        return arith.sigma_k(power)
    if token.startswith("custom="):
        return ingest_custom_g(token.split("=", 1)[1])
    raise ValueError(f"unknown family {token!r}; expected {G_CHOICES}")


def ingest_custom_g(path: str) -> ArithFn:
    """Read a finite table of values, one per line.

    The k-th value line is g(k).  Blank lines and '#' comments (whole-line
    or trailing) are skipped.  Values are integers or p/q fractions.
    g(1) must equal 1, otherwise the table is rejected.
    """
    import hashlib

    values = []
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise ValueError(f"cannot read custom table: {exc}") from exc
    for lineno, raw in enumerate(lines, 1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        try:
            values.append(_exactify(Fraction(text)))
        except (ValueError, ZeroDivisionError):
            raise ValueError(
                f"{path}:{lineno}: cannot parse {text!r} as an integer or p/q"
            ) from None
    if not values:
        raise ValueError(f"{path}: no values found")
    if values[0] != 1:
        raise ValueError(f"{path}: g(1) must be 1, got {values[0]}")
    digest = hashlib.sha256(
        "\n".join(str(v) for v in values).encode()
    ).hexdigest()[:12]
    return from_table(
        values, label=f"custom:{Path(path).name}", key=f"custom-{digest}"
    )


def parse_rational(token: str) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"cannot parse {token!r} as an integer or p/q") from None


def parse_xs(token: str) -> list[Fraction]:
    return [parse_rational(part) for part in token.split(",") if part.strip()]


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


# ---------------------------------------------------------------- triangle


def format_triangle(tri: Triangle, fmt: str, scaled: bool = False) -> str:
    """Render a triangle.  Rows are printed for n = 0..n_max with entries
    in ascending m; --scaled swaps in the integer-scaled entries and adds
    the per-row scale."""
    if scaled:
        rows = [[str(v) for v in tri.row_scaled(n)] for n in range(tri.n_max + 1)]
        scales = [str(tri.scale(n)) for n in range(tri.n_max + 1)]
    else:
        rows = [
            ["1"] if n == 0 else [str(v) for v in tri.row_values(n)]
            for n in range(tri.n_max + 1)
        ]
        scales = None
    if fmt == "table":
        lines = [f"# g={tri.g.label} h={tri.h} n_max={tri.n_max}"
                 + (" (integer-scaled)" if scaled else "")]
        for n, row in enumerate(rows):
            prefix = f"{n}:"
            if scales:
                prefix += f" [x{scales[n]}]" if tri.h == "id" else ""
            lines.append(f"{prefix} " + " ".join(row))
        return "\n".join(lines)
    if fmt == "json":
        body = {
            "schema": 1,
            "g": tri.g.label,
            "h": tri.h,
            "n_max": tri.n_max,
            "scaled": scaled,
            "rows": rows,
        }
        if scales:
            body["scales"] = scales
        return json.dumps(body, indent=2)
    if fmt == "csv":
        lines = []
        for n, row in enumerate(rows):
            cells = [str(n)]
            if scales:
                cells.append(scales[n])
            cells.extend(row)
            lines.append(",".join(cells))
        return "\n".join(lines)
    raise ValueError(f"unknown format {fmt!r}")


def cmd_triangle(args) -> int:
    g = parse_g(args.g)
    cache_dir = os.environ.get(ENV_VAR) or args.cache
    tri = None
    if cache_dir:
        try:
            tri = load_triangle(cache_dir, g, args.h, args.n)
        except CacheError as exc:
            print(f"lclab: warning: rebuilding, cache entry unusable: {exc}", file=sys.stderr)
    built = tri is None
    if tri is None:
        tri = build_triangle(g, args.h, args.n)
    if cache_dir and built:
        target = Path(cache_dir) / entry_name(g.key, args.h, args.n)
        if not target.exists():
            save_triangle(cache_dir, tri)
    _emit(format_triangle(tri, args.format, args.scaled), args.out)
    return 0


# ------------------------------------------------------------------ checks


def _render_result(res: CheckResult, fmt: str) -> tuple[str, int]:
    if fmt == "json":
        return json.dumps(res.to_dict(), indent=2), 0 if res.passed else 1
    if res.passed:
        text = f"PASS {res.name}: {res.checked} comparisons"
        if res.note:
            text += f" ({res.note})"
        return text, 0
    lines = [f"FAIL {res.name}: mismatch at {res.first_mismatch} after {res.checked} comparisons"]
    if res.note:
        lines.append(f"  {res.note}")
    return "\n".join(lines), 1


_LIST_CAP = 50


def _render_report(report: ConcavityReport, fmt: str) -> tuple[str, int]:
    if fmt == "json":
        return json.dumps(report.to_dict(), indent=2), 0 if report.passed else 1
    status = "PASS" if report.passed else "FAIL"
    if report.mode == "horizontal":
        head = (
            f"{status} {report.mode}: g={report.g} h={report.h} "
            f"rows {report.n_range[0]}..{report.n_range[1]}"
        )
    else:
        head = (
            f"{status} {report.mode}: g={report.g} h={report.h} "
            f"m={report.m_range[0]}..{report.m_range[1]} centers n<={report.n_range[1]}"
        )
    lines = [head]
    if report.params:
        lines.append("  " + " ".join(f"{k}={v}" for k, v in report.params.items()))
    if report.clipped:
        lines.append("  note: scan clipped at the built triangle edge")
    if not report.passed:
        lines.append(f"  {len(report.failures)} failing center(s):")
        for n, m in report.failures[:_LIST_CAP]:
            tag = "  (window boundary)" if (n, m) in report.boundary else ""
            lines.append(f"    n={n} m={m}{tag}")
        if len(report.failures) > _LIST_CAP:
            lines.append(f"    ... and {len(report.failures) - _LIST_CAP} more")
    if report.equalities:
        shown = ", ".join(f"(n={n},m={m})" for n, m in report.equalities[:8])
        more = " ..." if len(report.equalities) > 8 else ""
        lines.append(f"  equality holds at: {shown}{more}")
    return "\n".join(lines), 0 if report.passed else 1


def _m_selection(args, default_to) -> tuple[int, int]:
    if args.m is not None and (args.m_from is not None or args.m_to is not None):
        raise ValueError("--m and --m-from/--m-to are mutually exclusive")
    if args.m is not None:
        return args.m, args.m
    lo = args.m_from if args.m_from is not None else 1
    hi = args.m_to if args.m_to is not None else default_to
    if lo < 1 or hi < lo:
        raise ValueError(f"bad column range {lo}..{hi}")
    return lo, hi


def cmd_check_horizontal(args) -> int:
    if args.m is not None or args.m_from is not None or args.m_to is not None:
        raise ValueError("column selection applies to vertical checks only")
    tri = build_triangle(parse_g(args.g), args.h, args.n_max)
    text, code = _render_report(horizontal_check(tri), args.format)
    _emit(text, args.out)
    return code


def cmd_check_vertical(args) -> int:
    g = parse_g(args.g)
    m_from, m_to = _m_selection(args, default_to=args.n_max)
    limited = m_to if (args.m is not None or args.m_to is not None) else None
    tri = build_triangle(g, args.h, args.n_max, m_max=limited)
    report = vertical_check(tri, m_from, m_to)
    text, code = _render_report(report, args.format)
    _emit(text, args.out)
    return code


def cmd_check_cscan(args) -> int:
    g = parse_g(args.g)
    C = parse_rational(args.C)
    top = window_top(C, args.m_max)
    if top > MAX_WINDOW:
        raise ValueError(
            f"window floor(C^m_max) = {top} exceeds {MAX_WINDOW}; "
            "scan fewer columns or a smaller C"
        )
    tri = build_triangle(g, args.h, top + 1, m_max=args.m_max)
    report = c_vertical_check(tri, C, args.m_max, include_m1=args.include_m1)
    text, code = _render_report(report, args.format)
    _emit(text, args.out)
    return code


def cmd_check_conversion(args) -> int:
    text, code = _render_result(check_conversion(parse_g(args.g), args.n_max), args.format)
    _emit(text, args.out)
    return code


def cmd_check_genfun(args) -> int:
    xs = parse_xs(args.xs) if args.xs else list(DEFAULT_EVAL_POINTS)
    res = genfun_crosscheck(parse_g(args.g), args.h, args.n_max, xs)
    text, code = _render_result(res, args.format)
    _emit(text, args.out)
    return code


def cmd_check_euler(args) -> int:
    res = euler_product_crosscheck(parse_g(args.g), args.n_max, parse_rational(args.x))
    text, code = _render_result(res, args.format)
    _emit(text, args.out)
    return code


def cmd_check_no_identity(args) -> int:
    text, code = _render_result(check_no_identity(args.n_max), args.format)
    _emit(text, args.out)
    return code


def cmd_check_hz(args) -> int:
    report = hong_zhang_scan(parse_rational(args.C), args.m_max)
    text, code = _render_report(report, args.format)
    _emit(text, args.out)
    return code


def cmd_check_table1(args) -> int:
    firsts = first_failure_table(args.m_max, args.n_limit)
    if args.format == "json":
        body = {
            "check": "first-failure-table",
            "n_limit": args.n_limit,
            "first_failures": firsts,
        }
        text = json.dumps(body, indent=2)
    else:
        text = " ".join("none" if v is None else str(v) for v in firsts)
    _emit(text, args.out)
    return 0 if all(v is not None for v in firsts) else 1


def cmd_check_closed_forms(args) -> int:
    text, code = _render_result(closed_forms_check(args.n_max), args.format)
    _emit(text, args.out)
    return code


# ------------------------------------------------------------------ parser


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
    p.add_argument(
        "--jobs", type=int, metavar="N",
        help="accepted for compatibility; execution is sequential either way",
    )


def _add_g(p: argparse.ArgumentParser) -> None:
    p.add_argument("--g", required=True, metavar=G_CHOICES, help="arithmetic function")


def _add_h(p: argparse.ArgumentParser) -> None:
    p.add_argument("--h", required=True, choices=["one", "id"], help="weight family")


def _add_check_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["text", "json"], default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lclab",
        description="Exact coefficient triangles of arithmetic polynomial "
        "families, their generating-series oracles, and log-concavity scans.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    tri = sub.add_parser("triangle", help="build and print a coefficient triangle")
    _add_g(tri)
    _add_h(tri)
    tri.add_argument("--n", type=int, required=True, help="last row to build")
    tri.add_argument("--format", choices=["table", "json", "csv"], default="table")
    tri.add_argument("--cache", metavar="DIR", help=f"cache directory (env {ENV_VAR} wins)")
    tri.add_argument("--scaled", action="store_true",
                     help="print integer-scaled entries and the per-row scale")
    _add_common(tri)
    tri.set_defaults(func=cmd_triangle)

    check = sub.add_parser("check", help="run a verification or scan")
    what = check.add_subparsers(dest="what", required=True)

    def check_parser(name, func, help_text):
        p = what.add_parser(name, help=help_text)
        _add_check_format(p)
        _add_common(p)
        p.set_defaults(func=func)
        return p

    p = check_parser("horizontal", cmd_check_horizontal, "row log-concavity")
    _add_g(p)
    _add_h(p)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--m-from", type=int)
    p.add_argument("--m-to", type=int)

    p = check_parser("vertical", cmd_check_vertical, "column log-concavity")
    _add_g(p)
    _add_h(p)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--m", type=int, help="single column")
    p.add_argument("--m-from", type=int)
    p.add_argument("--m-to", type=int)

    p = check_parser("cscan", cmd_check_cscan,
                     "column log-concavity restricted to windows n <= C^m")
    _add_g(p)
    _add_h(p)
    p.add_argument("--C", required=True, metavar="P/Q")
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--include-m1", action="store_true")

    p = check_parser("conversion", cmd_check_conversion,
                     "exponential vs geometric family bridge")
    _add_g(p)
    p.add_argument("--n-max", type=int, required=True)

    p = check_parser("genfun", cmd_check_genfun,
                     "triangle rows vs generating series at sample points")
    _add_g(p)
    _add_h(p)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--xs", metavar="LIST", help="comma-separated rationals")

    p = check_parser("euler", cmd_check_euler, "triangle rows vs Euler product")
    _add_g(p)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--x", required=True, metavar="P/Q")

    p = check_parser("no-identity", cmd_check_no_identity,
                     "hook-length polynomials vs shifted divisor-sum rows")
    p.add_argument("--n-max", type=int, required=True)

    p = check_parser("hz", cmd_check_hz,
                     "windowed scan of divisor-sum series power coefficients")
    p.add_argument("--C", required=True, metavar="P/Q")
    p.add_argument("--m-max", type=int, required=True)

    p = check_parser("table1", cmd_check_table1,
                     "first failing center per column of the (one, id) family")
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--n-limit", type=int, default=1500)

    p = check_parser("closed-forms", cmd_check_closed_forms,
                     "six classic families vs their closed forms")
    p.add_argument("--n-max", type=int, required=True)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, IndexError) as exc:
        print(f"lclab: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
