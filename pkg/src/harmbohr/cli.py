"""Command line front end: ``radius``, ``scan`` and ``suite``.

Exit status: 0 success, 2 invalid input, 3 bracket failure, 4 truncation
failure, 5 unexpected regression flag. ``HARMBOHR_TOL`` overrides the
default series tolerance.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Any

from .classmodel import ClassParams
from .functionals import (FUNCTIONAL_KINDS, BohrFunctional, BracketError, ClosedForm,
                          evaluate, evaluate_closed_form)
from .rootfind import find_radius
from .series import DEFAULT_TOL
from .sharpness import verify_sharpness
from .suite import format_number, run_suite, unexpected_flags
from .summation import TruncationError

EXIT_OK, EXIT_INVALID, EXIT_BRACKET, EXIT_TRUNCATION, EXIT_FLAG = 0, 2, 3, 4, 5

TOL_ENV = "HARMBOHR_TOL"


def _default_tol() -> float:
    raw = os.environ.get(TOL_ENV)
    if raw is None:
        return DEFAULT_TOL
    try:
        tol = float(raw)
    except ValueError:
        raise ValueError(f"{TOL_ENV}={raw!r} is not a number") from None
    if not tol > 0.0:
        raise ValueError(f"{TOL_ENV} must be > 0")
    return tol


def build_functional(args: argparse.Namespace) -> BohrFunctional:
    kind = args.variant
    if kind == "improved":
        return FUNCTIONAL_KINDS[kind](p=args.p)
    if kind == "rogosinski":
        return FUNCTIONAL_KINDS[kind](n=args.n, N=args.N)
    if kind == "rogosinski-squared":
        return FUNCTIONAL_KINDS[kind](N=args.N)
    if kind == "refined":
        return FUNCTIONAL_KINDS[kind](n=args.n, N=args.N, mu=args.mu, beta=args.beta)
    return FUNCTIONAL_KINDS[kind]()


def _params(args) -> ClassParams:
    return ClassParams(args.gamma, args.delta, args.lam)


def _render(records: list[dict[str, Any]], fmt: str, meta: dict[str, Any] | None = None) -> str:
    def cell(v):
        return format_number(v) if isinstance(v, float) else str(v)

    if fmt == "json":
        def jval(v):
            return float(format_number(v)) if isinstance(v, float) else v
        rows = [{k: jval(v) for k, v in rec.items()} for rec in records]
        payload: Any = rows if meta is None else {"meta": meta, "rows": rows}
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        if meta:
            for k, v in meta.items():
                buf.write(f"# {k}={cell(v)}\r\n")
        if records:
            writer = csv.writer(buf, lineterminator="\r\n")
            writer.writerow(list(records[0]))
            for rec in records:
                writer.writerow([cell(v) for v in rec.values()])
        return buf.getvalue()
    lines = [f"# {k}={cell(v)}" for k, v in (meta or {}).items()]
    if len(records) == 1 and meta is None:
        lines += [f"{k}: {cell(v)}" for k, v in records[0].items()]
    elif records:
        keys = list(records[0])
        lines.append("  ".join(keys))
        lines += ["  ".join(cell(rec[k]) for k in keys) for rec in records]
    return "\n".join(lines) + "\n"


def cmd_radius(args) -> int:
    params = _params(args)
    f = build_functional(args)
    root = find_radius(f, params, args.xtol, args.ftol)
    rec: dict[str, Any] = {
        "variant": f.label(), "gamma": params.gamma, "delta": params.delta,
        "lambda": params.lam, "radius": root.radius, "residual": root.residual,
        "bracket_width": root.bracket_width, "tail_at_root": root.tail_at_root,
        "evaluations": root.evaluations,
    }
    if args.verify:
        rep = verify_sharpness(f, params, root, args.tol)
        rec["verdict"] = rep.verdict.value
        rec["gap"] = rep.gap
    _emit(args, _render([rec], args.format))
    return EXIT_OK


def _scan_points(rmin: float, rmax: float, step: float) -> list[float]:
    if not step > 0.0:
        raise ValueError("grid step must be > 0")
    if not 0.0 <= rmin <= rmax < 1.0:
        raise ValueError("need 0 <= rmin <= rmax < 1")
    count = int((rmax - rmin) / step + 1e-9) + 1
    return [round(rmin + i * step, 12) for i in range(count)]


def cmd_scan(args) -> int:
    points = _scan_points(args.rmin, args.rmax, args.step)
    if args.closed_form:
        cf = ClosedForm.from_tag(args.closed_form)
        meta = {"closed_form": cf.tag, "gamma": cf.params.gamma, "delta": cf.params.delta,
                "lambda": cf.params.lam}
        records = [{"r": r, "value": evaluate_closed_form(cf, r), "tail_bound": 0.0}
                   for r in points]
    else:
        params = _params(args)
        f = build_functional(args)
        meta = {"variant": f.label(), "gamma": params.gamma, "delta": params.delta,
                "lambda": params.lam, "tol": args.tol}
        records = []
        for r in points:
            k = evaluate(f, params, r, args.tol)
            records.append({"r": r, "value": k.value, "tail_bound": k.tail_bound})
    _emit(args, _render(records, args.format, meta))
    return EXIT_OK


def cmd_suite(args) -> int:
    rows = run_suite(args.jobs, args.xtol, args.ftol)
    records = [{"group": r.group, "name": r.name, "computed": r.computed,
                "published": r.reference, "abs_diff": r.diff, "tol": r.tol,
                "status": r.status, "expected_flag": r.expect_flag} for r in rows]
    _emit(args, _render(records, args.format, {"rows": len(rows)}))
    return EXIT_FLAG if unexpected_flags(rows) else EXIT_OK


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _add_common(p: argparse.ArgumentParser, tol: float) -> None:
    p.add_argument("--gamma", type=float, default=1.0)
    p.add_argument("--delta", type=float, default=1.0)
    p.add_argument("--lambda", dest="lam", type=float, default=0.5)
    p.add_argument("--variant", choices=sorted(FUNCTIONAL_KINDS), default="improved")
    p.add_argument("--p", type=float, default=2.0)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--N", type=int, default=2)
    p.add_argument("--mu", type=float, default=1.0)
    p.add_argument("--beta", type=float, default=1.0)
    p.add_argument("--xtol", type=float, default=1e-10)
    p.add_argument("--ftol", type=float, default=1e-10)
    p.add_argument("--tol", type=float, default=tol, help="series tolerance")
    p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    p.add_argument("--out", default=None, help="output path (default stdout)")


def make_parser(tol: float = DEFAULT_TOL) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="harmbohr", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("radius", help="locate one radius")
    _add_common(p, tol)
    p.add_argument("--verify", action="store_true", help="run the sharpness check")
    p.set_defaults(func=cmd_radius)

    p = sub.add_parser("scan", help="tabulate k(r) on a grid")
    _add_common(p, tol)
    p.add_argument("--rmin", type=float, default=0.0)
    p.add_argument("--rmax", type=float, default=0.9)
    p.add_argument("--step", type=float, default=0.01)
    p.add_argument("--closed-form", default=None,
                   help="scan a printed equation instead (" +
                        ", ".join(cf.tag for cf in ClosedForm) + ")")
    p.set_defaults(func=cmd_scan, format="csv")

    p = sub.add_parser("suite", help="regression table of published constants")
    _add_common(p, tol)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        parser = make_parser(_default_tol())
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except BracketError as exc:
        print(f"bracket failure: {exc}", file=sys.stderr)
        return EXIT_BRACKET
    except TruncationError as exc:
        print(f"truncation failure: {exc}", file=sys.stderr)
        return EXIT_TRUNCATION


if __name__ == "__main__":
    sys.exit(main())
