"""Command-line front end with reproducible file outputs.

Subcommands: profile, classify, thresholds, critical, roots, wf, star.
Exit codes: 0 success, 2 invalid arguments, 3 numerical failure.  The
environment variable VR_ELLIPSE_THREADS caps the number of worker threads
used for profile sampling; outputs are byte-identical for any setting.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from pathlib import Path


from . import __version__
from .algebraic import (
    EAST_STAR_POLY,
    NORTH_STAR_POLY,
    bisect_sign_change,
    isolate_star_roots,
    pole_gap_algebraic,
    triangle_bounds,
)
from .classifier import classification_report, classify, thresholds
from .cyclic import build_vr_graph, standard_cnk, winding_fraction
from .errors import NumericalError
from .extrema import profile
from .geometry import TWO_PI, embed
from .stars import WindingTarget, pole_gap, star_points
from .svg import barcode_svg, profile_svg

_POLYS = {"PN": NORTH_STAR_POLY, "PE": EAST_STAR_POLY}


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _target(text: str) -> WindingTarget:
    try:
        return WindingTarget.from_fraction(Fraction(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad winding target {text!r}: {exc}") from exc


def _json_dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cmd_profile(args) -> None:
    prof = profile(args.a, _target(args.target), n=args.samples, r_tol=args.r_tol)
    if args.format == "csv":
        _write(prof.to_csv(), args.output)
    else:
        _write(profile_svg(prof, quadrant=not args.full_circle), args.output)


def cmd_thresholds(args) -> None:
    rep = classification_report(args.a, samples=args.samples, r_tol=args.r_tol)
    if args.format == "svg":
        _write(barcode_svg(rep), args.output)
    else:
        _write(rep.to_json() + "\n", args.output)


def cmd_classify(args) -> None:
    th = thresholds(args.a, samples=args.samples, r_tol=args.r_tol)
    kind = classify(args.a, args.r, th=th)
    out = {
        "schema_version": 1,
        "a": args.a,
        "r": args.r,
        "type": kind.label,
        "conjecture_conditional": args.r > th.r2,
        "situation": th.situation.value,
        "regime": th.regime.value,
        "thresholds": {
            "r1": th.r1, "r2": th.r2, "r3": th.r3,
            "r4": th.r4, "r5": th.r5, "r7half": th.r7half,
        },
    }
    _write(_json_dump(out), args.output)


def cmd_critical(args) -> None:
    lo, hi = args.bracket
    if args.gap == "algebraic":
        fn = pole_gap_algebraic
    else:
        fn = pole_gap
    root, trace = bisect_sign_change(fn, lo, hi, args.tol)
    out = {
        "schema_version": 1,
        "bracket": [lo, hi],
        "gap": args.gap,
        "critical_eccentricity": root,
        "trace": [{"lo": t[0], "hi": t[1], "gap_mid": t[2]} for t in trace],
    }
    _write(_json_dump(out), args.output)


def cmd_roots(args) -> None:
    poly = _POLYS[args.poly]
    if args.export_terms:
        _write(poly.to_json() + "\n", args.output)
        return
    _, r2 = triangle_bounds(args.a)
    lo = r2 + 1e-6 if args.r_min is None else args.r_min
    roots = isolate_star_roots(poly, args.a, lo, args.ceiling, tol=args.tol)
    out = {
        "schema_version": 1,
        "poly": args.poly,
        "a": args.a,
        "scan": [lo, args.ceiling],
        "roots": [
            {
                "value": ri.midpoint,
                "lo": ri.lo,
                "hi": ri.hi,
                "sign_lo": ri.sign_lo,
                "sign_hi": ri.sign_hi,
            }
            for ri in roots
        ],
    }
    _write(_json_dump(out), args.output)


def cmd_wf(args) -> None:
    if args.cnk is not None:
        n, k = args.cnk
        g = standard_cnk(n, k)
        source = {"kind": "standard", "n": n, "k": k}
    else:
        if args.a is None or args.r is None:
            raise ValueError("sampled graphs need --a and --r")
        n = args.sample
        pts = [TWO_PI * i / n for i in range(n)]
        g = build_vr_graph(pts, args.a, args.r)
        source = {"kind": "sampled", "n": n, "a": args.a, "r": args.r}
    wf = winding_fraction(g)
    out = {
        "schema_version": 1,
        "source": source,
        "numerator": wf.numerator,
        "denominator": wf.denominator,
        "attained": wf.attained,
    }
    if args.graph:
        out["graph"] = json.loads(g.to_json())
    _write(_json_dump(out), args.output)


def cmd_star(args) -> None:
    star = star_points(math.radians(args.theta_deg), args.a, _target(args.target))
    out = {
        "schema_version": 1,
        "a": args.a,
        "target": str(star.target),
        "base_theta": star.base,
        "diameter": star.diameter,
        "winding": star.winding,
        "closure_error": star.closure_error,
        "vertices_theta": list(star.vertices),
        "vertices_xy": [list(embed(t, args.a)) for t in star.vertices],
    }
    _write(_json_dump(out), args.output)


def _add_common(p: argparse.ArgumentParser, with_samples: bool = False) -> None:
    p.add_argument("--output", "-o", default=None, help="output file (default stdout)")
    if with_samples:
        p.add_argument("--samples", type=int, default=2000, help="profile sample count")
        p.add_argument("--r-tol", type=float, default=1e-12, help="radius bisection tolerance")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="vr-ellipse",
        description="Scale thresholds and homotopy types of Rips complexes of ellipses",
    )
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("profile", help="sample the star side-length function")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--target", default="2/5", help="winding target, e.g. 2/5 or 3/7")
    p.add_argument("--format", choices=("csv", "svg"), default="csv")
    p.add_argument("--full-circle", action="store_true", help="plot all of [0, 2pi)")
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--r-tol", type=float, default=1e-12)
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(fn=cmd_profile)

    p = sub.add_parser("thresholds", help="critical scale radii for an eccentricity")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--format", choices=("json", "svg"), default="json")
    _add_common(p, with_samples=True)
    p.set_defaults(fn=cmd_thresholds)

    p = sub.add_parser("classify", help="homotopy type at one scale")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--r", type=float, required=True)
    _add_common(p, with_samples=True)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("critical", help="bisect a critical eccentricity")
    p.add_argument("--bracket", type=float, nargs=2, required=True, metavar=("LO", "HI"))
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--gap", choices=("algebraic", "dynamical"), default="algebraic")
    _add_common(p)
    p.set_defaults(fn=cmd_critical)

    p = sub.add_parser("roots", help="isolate pole-star polynomial roots")
    p.add_argument("--poly", choices=sorted(_POLYS), required=True)
    p.add_argument("--a", type=float, default=1.32)
    p.add_argument("--ceiling", type=float, default=2.2)
    p.add_argument("--r-min", type=float, default=None)
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--export-terms", action="store_true", help="dump the term list as JSON")
    _add_common(p)
    p.set_defaults(fn=cmd_roots)

    p = sub.add_parser("wf", help="winding fraction of a cyclic graph")
    p.add_argument("--cnk", type=int, nargs=2, default=None, metavar=("N", "K"))
    p.add_argument("--sample", type=int, default=500, help="evenly spaced sample size")
    p.add_argument("--a", type=float, default=None)
    p.add_argument("--r", type=float, default=None)
    p.add_argument("--graph", action="store_true", help="include the graph JSON")
    _add_common(p)
    p.set_defaults(fn=cmd_wf)

    p = sub.add_parser("star", help="inscribed star vertex coordinates")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--theta-deg", type=float, default=0.0, help="base point angle in degrees")
    p.add_argument("--target", default="2/5")
    _add_common(p)
    p.set_defaults(fn=cmd_star)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
