"""Command-line front end.

Subcommands: density sampling (CSV/SVG), exact plateau reports (JSON),
closed-form predictions (JSON), the conjecture scan, Gauss-sum inspection,
and regeneration of the nine reference figure panels.  All rationals are
printed as "num/den" strings and floats with 12 significant digits, so
identical invocations produce byte-identical output.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

from . import figures
from .gauss import factorization_residual, gauss_abs_sq, gauss_sum_direct
from .plateau import PlateauReport, detect_plateaux
from .predictors import (
    ScanRecord,
    conjecture_scan,
    fragmentation_layout,
    has_fragmentation,
    is_critical,
    doubled_drift_is_odd,
    nonfrag_prediction,
    peak_count,
)
from .rationals import format_rational, parse_rational
from .wavefield import WellParams


def _round12(v: float) -> float:
    return float(f"{v:.12g}")


def _dump(obj, compact: bool = False) -> str:
    if compact:
        return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _params_from(args) -> WellParams:
    return WellParams(parse_rational(args.lam), args.n_state, parse_rational(args.tau))


def _params_json(params: WellParams) -> dict:
    return {
        "lambda": format_rational(params.lam),
        "n_state": params.n_state,
        "tau": format_rational(params.tau),
    }


def _interval_json(interval) -> dict:
    return {
        "interval": [format_rational(interval.lo), format_rational(interval.hi)],
        "center": format_rational((interval.lo + interval.hi) / 2),
        "level": _round12(interval.level),
        "kind": interval.kind,
        "vanishing_side": interval.vanishing_side,
    }


def _report_json(report: PlateauReport) -> dict:
    out = _params_json(report.params)
    out["fragmentation"] = report.fragmentation
    out["intervals"] = [_interval_json(iv) for iv in report.intervals]
    out["zero_checks"] = report.zero_checks
    return out


def _write_text(path: str | None, content: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(content)
    else:
        Path(path).write_text(content, encoding="utf-8")


def _cmd_density(args) -> int:
    params = _params_from(args)
    rows = figures.density_samples(params, args.samples)
    if args.out == "csv":
        _write_text(args.output, figures.render_csv(rows))
    else:
        report = detect_plateaux(params)
        _write_text(args.output, figures.render_svg(rows, report))
    return 0


def _cmd_plateaux(args) -> int:
    report = detect_plateaux(_params_from(args))
    _write_text(args.output, _dump(_report_json(report)))
    return 0


def _cmd_predict(args) -> int:
    params = _params_from(args)
    out = _params_json(params)
    if has_fragmentation(params):
        layout = fragmentation_layout(params)
        out.update(
            {
                "regime": "fragmentation",
                "case": layout.case,
                "radius": format_rational(layout.radius),
                "centers": [format_rational(c) for c in layout.centers],
                "intervals": [
                    [format_rational(lo), format_rational(hi)]
                    for lo, hi in layout.intervals
                ],
                "clipped": list(layout.clipped),
                "peaks": peak_count(params),
            }
        )
    elif is_critical(params):
        out.update({"regime": "critical", "exists": False})
    elif doubled_drift_is_odd(params):
        pred = nonfrag_prediction(params)
        out.update(
            {
                "regime": "uniform",
                "exists": True,
                "center": format_rational(pred.center),
                "radius": format_rational(pred.radius),
                "interval": [format_rational(pred.lo), format_rational(pred.hi)],
                "zero_level": pred.zero_level,
            }
        )
    else:
        out.update({"regime": "uniform", "exists": False})
    _write_text(args.output, _dump(out))
    return 0


def _record_json(record: ScanRecord) -> dict:
    out = _params_json(record.params)
    out["predicted_exists"] = record.predicted_exists
    out["consistent"] = record.consistent
    out["intervals"] = [_interval_json(iv) for iv in record.detected.intervals]
    out["zero_checks"] = record.detected.zero_checks
    if record.note:
        out["note"] = record.note
    return out


def _cmd_scan(args) -> int:
    records = conjecture_scan(
        lambda_dens=args.lambda_den,
        lambda_max=parse_rational(args.lambda_max),
        q_max=args.qmax,
        n_max=args.nmax,
    )
    bad = [r for r in records if not r.consistent]
    payload = {
        "grid": {
            "lambda_den": args.lambda_den,
            "lambda_max": format_rational(parse_rational(args.lambda_max)),
            "q_max": args.qmax,
            "n_max": args.nmax,
        },
        "total": len(records),
        "inconsistent": len(bad),
        "zero_checks": sum(r.detected.zero_checks for r in records),
        "records": [_record_json(r) for r in records],
    }
    _write_text(args.out, _dump(payload, compact=True))
    summary = f"{len(records)} configurations scanned, {len(bad)} inconsistent\n"
    sys.stderr.write(summary)
    if bad and args.strict:
        return 1
    return 0


def _cmd_gauss(args) -> int:
    value = gauss_sum_direct(args.a, args.k, args.q)
    abs_sq = gauss_abs_sq(args.a, args.k, args.q)
    re = 0.0 if abs(value.real) < 1e-12 else _round12(value.real)
    im = 0.0 if abs(value.imag) < 1e-12 else _round12(value.imag)
    out = {
        "a": args.a,
        "k": args.k,
        "q": args.q,
        "value": [re, im],
        "abs_squared": abs_sq,
        "abs": _round12(math.sqrt(abs_sq)),
        "factorization_residual": _round12(factorization_residual(args.a, args.q, args.k)),
    }
    _write_text(args.output, _dump(out))
    return 0


def _cmd_figures(args) -> int:
    panels = list(figures.PANELS) if args.panel == "all" else [args.panel]
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for panel in panels:
        csv_text, svg_text = figures.render_panel(panel, args.samples)
        (outdir / f"{panel}.csv").write_text(csv_text, encoding="utf-8")
        (outdir / f"{panel}.svg").write_text(svg_text, encoding="utf-8")
        sys.stderr.write(f"wrote {outdir / panel}.csv and .svg\n")
    return 0


def _add_params_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--lambda", dest="lam", required=True,
                     help='expansion factor, e.g. "5/2" or "10.7"')
    sub.add_argument("--N", dest="n_state", type=int, required=True,
                     help="initial eigenstate index")
    sub.add_argument("--tau", required=True, help='fractional time t/T, e.g. "1/3"')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qwell",
        description="Exact plateau analysis of the suddenly expanded infinite well",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("density", help="sample the density over [0, 1/2]")
    _add_params_args(p)
    p.add_argument("--samples", type=int, default=4000)
    p.add_argument("--out", choices=["csv", "svg"], default="csv", help="output format")
    p.add_argument("--output", default=None, help="output path (default stdout)")
    p.set_defaults(func=_cmd_density)

    p = subs.add_parser("plateaux", help="exact plateau report as JSON")
    _add_params_args(p)
    p.add_argument("--format", choices=["json"], default="json")
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_plateaux)

    p = subs.add_parser("predict", help="closed-form plateau prediction as JSON")
    _add_params_args(p)
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_predict)

    p = subs.add_parser("scan", help="conjecture scan over a parameter grid")
    p.add_argument("--lambda-den", type=int, default=8)
    p.add_argument("--lambda-max", default="6")
    p.add_argument("--qmax", type=int, default=20)
    p.add_argument("--nmax", type=int, default=3)
    p.add_argument("--out", default="scan.json", help="output JSON path")
    p.add_argument("--strict", action="store_true",
                   help="exit nonzero when inconsistencies are found")
    p.set_defaults(func=_cmd_scan)

    p = subs.add_parser("gauss", help="inspect one quadratic Gauss sum")
    p.add_argument("a", type=int)
    p.add_argument("k", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_gauss)

    p = subs.add_parser("figures", help="regenerate the reference panels")
    p.add_argument("--panel", choices=list(figures.PANELS) + ["all"], default="all")
    p.add_argument("--outdir", default="figures")
    p.add_argument("--samples", type=int, default=2000)
    p.set_defaults(func=_cmd_figures)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
