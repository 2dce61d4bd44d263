"""Command-line front end.

Exit codes: 0 when every check passed, 1 for a confirmed violation (an
infeasible 6-tuple, a scan witness, a failed identity), 2 for usage or domain
errors.  Human output prints 12 significant digits; ``--json`` output keeps
full ``repr`` precision so that values round-trip.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import replace

from . import __version__
from .appendix import appendix_family
from .geometry import DiagParams, GeometryError, QuadLengths, classify, lengths_from_params
from .identities import SUITES, verify_all
from .scan import ScanConfig, roots_scan, scan_system_34, scan_system_51, theorem_scan

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2

CHECK_TOL = 1e-6


class UsageError(Exception):
    pass


def _g(v) -> str:
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def _positive(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not math.isfinite(v) or v <= 0:
        raise argparse.ArgumentTypeError(f"must be a positive finite number: {text!r}")
    return v


def _emit(payload: dict, as_json: bool, lines: list[str], out) -> None:
    if as_json:
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        out.write("\n".join(lines) + "\n")


# ---------------------------------------------------------------------------
# check / params


def _lengths_payload(ql: QuadLengths) -> dict:
    return dict(zip("abcdpq", ql.as_tuple()))


def c3_relative(ql: QuadLengths) -> float:
    """``|C3|`` divided by the sum of its four products: the cancellation left over.

    Lengths rounded to ``k`` digits perturb this by about ``10^-k``, so it is
    the quantity to compare with ``--tol`` when deciding whether C3 vanishes.
    """
    a, b, c, d, p, q = ql.as_tuple()
    terms = a * b * p + b * c * q + c * d * p + d * a * q
    return abs(a * b * p - b * c * q + c * d * p - d * a * q) / terms


def _assess(ql: QuadLengths, tol: float) -> tuple[dict, list[str]]:
    rep = classify(ql, tol=tol)
    warnings = []
    c3_zero = c3_relative(ql) < tol
    if not rep.feasible:
        warnings.append("lengths violate the triangle inequalities; no quadrilateral exists")
    elif not rep.planar:
        warnings.append("planarity residual exceeds the tolerance; convexity judged from the rounded lengths")
    if c3_zero and not rep.convex and rep.feasible:
        warnings.append("C3 vanishes but the quadrilateral is not convex, so this does not imply cyclicity")
    payload = {
        "lengths": _lengths_payload(ql),
        "tol": tol,
        "report": rep.to_dict(),
        "c3_relative": c3_relative(ql),
        "c3_zero": c3_zero,
        "warnings": warnings,
    }
    return payload, warnings


def _report_lines(payload: dict) -> list[str]:
    rep = payload["report"]
    lines = ["lengths: " + " ".join(f"{k}={_g(v)}" for k, v in payload["lengths"].items())]
    lines += [f"{k}: {_g(v)}" for k, v in rep.items()]
    lines.append(f"c3_relative: {_g(payload['c3_relative'])}")
    lines.append(f"c3_zero: {payload['c3_zero']}")
    lines += [f"warning: {w}" for w in payload["warnings"]]
    return lines


def _lengths_from_json(text: str) -> QuadLengths:
    data = json.loads(text)
    if "lengths" in data:
        data = data["lengths"]
    try:
        vals = [float(data[k]) for k in "abcdpq"]
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"JSON input lacks the six lengths a..q: {exc}")
    if not all(math.isfinite(v) and v > 0 for v in vals):
        raise UsageError("lengths must be positive")
    return QuadLengths(*vals)


def cmd_check(args, out=None) -> int:
    out = out or sys.stdout
    if args.from_json is not None:
        stream = sys.stdin if args.from_json == "-" else open(args.from_json)
        with stream:
            ql = _lengths_from_json(stream.read())
    else:
        if args.sides is None or args.diagonals is None:
            raise UsageError("check needs --sides and --diagonals (or --from-json)")
        ql = QuadLengths(*args.sides, *args.diagonals)
    payload, _ = _assess(ql, args.tol)
    _emit(payload, args.json, _report_lines(payload), out)
    return EXIT_OK if payload["report"]["feasible"] else EXIT_VIOLATION


def cmd_params(args, out=None) -> int:
    out = out or sys.stdout
    try:
        dp = DiagParams(args.x, args.y, args.z, args.u, args.t)
    except GeometryError as exc:
        raise UsageError(str(exc))
    ql = lengths_from_params(dp)
    payload, _ = _assess(ql, args.tol)
    payload["params"] = {"x": dp.x, "y": dp.y, "z": dp.z, "u": dp.u, "t": dp.t, "cycl": dp.cycl()}
    lines = ["params: " + " ".join(f"{k}={_g(v)}" for k, v in payload["params"].items())]
    _emit(payload, args.json, lines + _report_lines(payload), out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args, out=None) -> int:
    out = out or sys.stdout
    ledger = verify_all(tag=SUITES[args.suite])
    if args.json:
        out.write(ledger.to_json(timing=not args.no_timing) + "\n")
    else:
        for r in ledger.records:
            line = f"{r.id:<20} {r.status:<10} {r.seconds:7.3f}s  {r.description}"
            out.write(line + "\n")
            for c in r.failures():
                out.write(f"    {c.label}: {c.witness}\n")
        t = ledger.totals
        out.write(f"suite {args.suite}: {t['verified']} verified, {t['corrected']} corrected, "
                  f"{t['failed']} failed ({ledger.seconds:.2f}s)\n")
    return EXIT_OK if ledger.ok else EXIT_VIOLATION


# ---------------------------------------------------------------------------
# scan

_SCANS = {
    "theorems": (theorem_scan, {"samples": 100_000}),
    "roots": (roots_scan, {"samples": 10_000}),
    "sys51": (scan_system_51, {"grid": 40}),
    "sys34": (scan_system_34, {"grid": 20}),
}


def cmd_scan(args, out=None) -> int:
    out = out or sys.stdout
    fn, defaults = _SCANS[args.what]
    cfg = replace(ScanConfig(), seed=args.seed, **defaults)
    if args.samples is not None:
        cfg = replace(cfg, samples=args.samples)
    if args.grid is not None:
        cfg = replace(cfg, grid=args.grid)
    report = fn(cfg)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            fh.write(report.violations_csv())
    if args.json:
        out.write(report.to_json() + "\n")
    else:
        out.write(f"scan {report.kind} seed={cfg.seed} checked={report.checked}\n")
        out.write(f"violations: {len(report.violations)}\n")
        for k, v in sorted(report.extremes.items()):
            out.write(f"{k}: {_g(v)}\n")
        if report.min_residual is not None:
            out.write(f"residual floor: {_g(report.min_residual)}\n")
            out.write(f"at: {report.argmin}\n")
        for k, v in sorted(report.notes.items()):
            out.write(f"{k}: {_g(v)}\n")
    return EXIT_OK if report.ok else EXIT_VIOLATION


# ---------------------------------------------------------------------------
# counterexample


def cmd_counterexample(args, out=None) -> int:
    out = out or sys.stdout
    fam = appendix_family()
    ext = fam.extremal
    payload = {
        "x": ext.x,
        "y": ext.y,
        "lengths": _lengths_payload(ext.printed_labels),
        "c3": ext.c3,
        "convex": ext.convex,
        "convexity_margins": list(ext.convexity_margins),
        "planar_residual": ext.planar_residual,
        "samples": [{"x": s.x, "y": s.y, "c3": s.c3, "convex": s.convex} for s in fam.samples],
        "max_abs_c3": fam.max_abs_c3,
    }
    lines = [
        "non-convex quadrilateral with C3 = 0 (vertices A=(-x,0), B=(0,y), C=(x,0), D=(0,-1))",
        f"x = {_g(ext.x)}  y = {_g(ext.y)}",
        "lengths: " + " ".join(f"{k}={_g(v)}" for k, v in payload["lengths"].items()),
        f"c3 = {_g(ext.c3)}  convex = {ext.convex}",
        "family samples (y, x, c3):",
    ]
    lines += [f"  {_g(s.y)}  {_g(s.x)}  {_g(s.c3)}" for s in fam.samples]
    _emit(payload, args.json, lines, out)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cyclicquad", description="Cyclicity tests for quadrilaterals.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="classify six lengths")
    p.add_argument("--sides", nargs=4, type=_positive, metavar=("A", "B", "C", "D"))
    p.add_argument("--diagonals", nargs=2, type=_positive, metavar=("P", "Q"))
    p.add_argument("--from-json", metavar="FILE", help="read lengths from a JSON record ('-' for stdin)")
    p.add_argument("--tol", type=_positive, default=CHECK_TOL)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("params", help="build a quadrilateral from diagonal-chart parameters")
    for name in "xyzu":
        p.add_argument(name, type=float)
    p.add_argument("t", type=float)
    p.add_argument("--tol", type=_positive, default=CHECK_TOL)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("verify", help="replay the exact identities")
    p.add_argument("--suite", choices=sorted(SUITES), default="all")
    p.add_argument("--json", action="store_true")
    p.add_argument("--no-timing", action="store_true", help="omit timings from JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="run a seeded numeric scan")
    p.add_argument("--what", choices=sorted(_SCANS), default="theorems")
    p.add_argument("--seed", type=int, default=ScanConfig().seed)
    p.add_argument("--samples", type=int)
    p.add_argument("--grid", type=int)
    p.add_argument("--csv", metavar="FILE", help="write violation witnesses as CSV")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("counterexample", help="the non-convex family with C3 = 0")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_counterexample)
    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        sys.stderr.write(f"cyclicquad: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
