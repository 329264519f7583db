"""Command-line front end.

Subcommands: lct, segre, estimate, verify, diagram. Exact results are
serialized as "p/q" strings, never floats; estimator and identity outputs
are CSV with 17 significant digits. Errors exit nonzero with a one-line
JSON object on stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from fractions import Fraction

from .errors import NewtonSegreError
from .ideals import parse_ideal, serialize_ideal
from .lattice import (EXACT, FLOAT64, LCT_BASED, MEMBERSHIP, EstimatorConfig,
                      convergence_report, estimate)
from .lct import diagonal_exit, lct
from .polygamma import (verify_diagonal_identity, verify_power_identity,
                        verify_two_variable_identity)
from .polyhedron import newton_polyhedron, polyhedron_to_json
from .segre import evaluate, segre_class


def _default_threads() -> int:
    env = os.environ.get("NEWTON_SEGRE_THREADS")
    try:
        return max(1, int(env)) if env else 1
    except ValueError:
        return 1


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _parse_x(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(part) for part in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise NewtonSegreError(f"bad parameter list {text!r}: {exc}") from None


def _parse_m_list(text: str) -> list[int]:
    return [int(part) for part in text.split(",")]


def _ideal_from_args(args) -> "MonomialIdeal":  # noqa: F821
    return parse_ideal(args.ideal, n=args.n)


def _cmd_lct(args) -> int:
    ideal = _ideal_from_args(args)
    sigma = diagonal_exit(newton_polyhedron(ideal))
    print(json.dumps({"lct": str(lct(ideal)), "sigma": str(sigma)}))
    return 0


def _cmd_segre(args) -> int:
    ideal = _ideal_from_args(args)
    result = segre_class(ideal, ambient_dim=args.ambient, threads=args.threads)
    payload = {
        "pushforward": [str(c) for c in result.pushforward],
        "multivariate": [
            {"exp": list(exp), "coeff": str(c)}
            for exp, c in result.multivariate.terms()
        ],
        "pieces": len(result.pieces),
        "ambient_dim": result.ambient_dim,
    }
    print(json.dumps(payload))
    return 0


def _cmd_estimate(args) -> int:
    ideal = _ideal_from_args(args)
    X = _parse_x(args.X)
    mode = LCT_BASED if args.mode == "lct" else MEMBERSHIP
    arith = EXACT if args.arith == "exact" else FLOAT64
    if args.m_list:
        rows = convergence_report(
            ideal, X, _parse_m_list(args.m_list), condition_mode=mode,
            arithmetic=arith,
            ray_cutoff=(lambda m: args.cutoff) if args.cutoff else None,
            threads=args.threads)
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\r\n")  # RFC 4180
        writer.writerow(["m", "estimate", "exact", "abs_error", "seconds"])
        for row in rows:
            writer.writerow([row.m, _fmt(row.estimate), _fmt(row.exact_value),
                             _fmt(row.abs_error), _fmt(row.elapsed_time)])
        sys.stdout.write(out.getvalue())
        return 0
    cfg = EstimatorConfig(m=args.m, X=X, condition_mode=mode,
                          ray_cutoff=args.cutoff, arithmetic=arith,
                          threads=args.threads)
    start = time.perf_counter()
    value = estimate(ideal, cfg)
    elapsed = time.perf_counter() - start
    exact = evaluate(segre_class(ideal, ambient_dim=max(ideal.n, 1)), list(X))
    payload = {
        "m": args.m,
        "estimate": _fmt(float(value)),
        "exact": _fmt(float(exact)),
        "abs_error": _fmt(abs(float(value) - float(exact))),
        "seconds": _fmt(elapsed),
    }
    if arith == EXACT:
        payload["estimate_rational"] = str(value)
    print(json.dumps(payload))
    return 0


def _identity_params(text: str) -> dict[str, float]:
    params = {}
    for part in text.split(","):
        key, _, value = part.partition("=")
        if not value:
            raise NewtonSegreError(f"bad --params entry {part!r}, expected key=value")
        params[key.strip()] = float(Fraction(value.strip()))
    return params


def _cmd_verify(args) -> int:
    params = _identity_params(args.params)
    m_values = _parse_m_list(args.m_list)
    rows = []
    if args.identity == "power":
        ell, X = int(params["l"]), params["X"]
        # the power check returns the limit argument, whose target is 1/(1+lX)
        target = 1 / (1 + ell * X)
        for m in m_values:
            rows.append((m, verify_power_identity(ell, X, m), target))
    elif args.identity == "two-var":
        ell, X1, X2 = int(params["l"]), params["X1"], params["X2"]
        target = ell * X1 / (1 + ell * X1)
        for m in m_values:
            rows.append((m, verify_two_variable_identity(
                ell, X1, X2, m, tail_cutoff=args.cutoff), target))
    else:
        l1, l2 = int(params["l1"]), int(params["l2"])
        X1, X2 = params["X1"], params["X2"]
        target = l1 * l2 * X1 * X2 / ((1 + l1 * X1) * (1 + l2 * X2))
        for m in m_values:
            rows.append((m, verify_diagonal_identity(
                l1, l2, X1, X2, m, tail_cutoff=args.cutoff), target))
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\r\n")  # RFC 4180
    writer.writerow(["m", "value", "target"])
    for m, value, target in rows:
        writer.writerow([m, _fmt(value), _fmt(target)])
    sys.stdout.write(out.getvalue())
    return 0


def _staircase_svg(poly) -> str:
    """Minimal SVG of the n=2 staircase: extreme points and diagram facets."""
    pts = poly.extreme_points
    top = max(max(p) for p in pts) + 1
    scale = 60
    size = (top + 1) * scale

    def sx(v) -> float:
        return float(v) * scale + scale / 2

    def sy(v) -> float:
        return size - float(v) * scale - scale / 2

    lines = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}">']
    lines.append(f'<line x1="{sx(0)}" y1="{sy(0)}" x2="{sx(top)}" y2="{sy(0)}" '
                 'stroke="black"/>')
    lines.append(f'<line x1="{sx(0)}" y1="{sy(0)}" x2="{sx(0)}" y2="{sy(top)}" '
                 'stroke="black"/>')
    for f in poly.diagram_facets:
        w1, w2, c = f.normal[0], f.normal[1], f.offset
        ends = []
        if w1 > 0:
            x_at = c / w1  # where a2 = 0
            if 0 <= x_at <= top:
                ends.append((x_at, Fraction(0)))
        if w2 > 0:
            y_at = c / w2
            if 0 <= y_at <= top:
                ends.append((Fraction(0), y_at))
        if w1 == 0:
            ends = [(Fraction(0), c / w2), (Fraction(top), c / w2)]
        if w2 == 0:
            ends = [(c / w1, Fraction(0)), (c / w1, Fraction(top))]
        # intersections with the other facets bound the drawn segment; for a
        # sketch, clip to the bounding box through the two computed ends
        if len(ends) >= 2:
            (x1, y1), (x2, y2) = ends[0], ends[1]
            lines.append(f'<line x1="{sx(x1)}" y1="{sy(y1)}" x2="{sx(x2)}" '
                         f'y2="{sy(y2)}" stroke="steelblue" stroke-width="2"/>')
    for p in pts:
        lines.append(f'<circle cx="{sx(p[0])}" cy="{sy(p[1])}" r="5" fill="crimson"/>')
    lines.append("</svg>")
    return "\n".join(lines)


def _cmd_diagram(args) -> int:
    ideal = _ideal_from_args(args)
    poly = newton_polyhedron(ideal)
    payload = polyhedron_to_json(poly)
    payload["ideal"] = serialize_ideal(ideal)
    print(json.dumps(payload))
    if args.svg:
        if poly.n != 2:
            raise NewtonSegreError("staircase SVG is only drawn for n = 2")
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(_staircase_svg(poly))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="newton-segre",
        description="Newton polyhedra, log canonical thresholds and Segre "
                    "classes of monomial ideals")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_ideal(p):
        p.add_argument("ideal", help='ideal text like "x1^2, x1*x2" or JSON')
        p.add_argument("--n", type=int, default=None,
                       help="number of variables (default: inferred)")

    p = sub.add_parser("lct", help="log canonical threshold")
    add_ideal(p)
    p.set_defaults(func=_cmd_lct)

    p = sub.add_parser("segre", help="exact Segre class")
    add_ideal(p)
    p.add_argument("--ambient", type=int, required=True,
                   help="dimension of the ambient projective space")
    p.add_argument("--threads", type=int, default=_default_threads())
    p.set_defaults(func=_cmd_segre)

    p = sub.add_parser("estimate", help="lattice-sum estimator")
    add_ideal(p)
    p.add_argument("--m", type=int, default=None, help="refinement parameter")
    p.add_argument("--m-list", default=None,
                   help="comma-separated m values; prints a convergence CSV")
    p.add_argument("--X", required=True, help="comma-separated positive rationals")
    p.add_argument("--mode", choices=["membership", "lct"], default="membership")
    p.add_argument("--cutoff", type=int, default=None,
                   help="truncation along unbounded axes (default 10*m^2)")
    p.add_argument("--threads", type=int, default=_default_threads())
    p.add_argument("--arith", choices=["float", "exact"], default="float")
    p.set_defaults(func=_cmd_estimate)

    p = sub.add_parser("verify", help="polygamma identity checks")
    p.add_argument("--identity", choices=["power", "two-var", "diagonal"],
                   required=True)
    p.add_argument("--params", required=True,
                   help='e.g. "l=2,X=1/2" or "l1=2,l2=3,X1=1/3,X2=1/2"')
    p.add_argument("--m-list", required=True)
    p.add_argument("--cutoff", type=int, default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("diagram", help="extreme points and facets")
    add_ideal(p)
    p.add_argument("--svg", default=None, help="write an n=2 staircase SVG here")
    p.set_defaults(func=_cmd_diagram)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "estimate" and args.m is None and args.m_list is None:
        parser.error("estimate needs --m or --m-list")
    try:
        return args.func(args)
    except NewtonSegreError as exc:
        sys.stderr.write(json.dumps(
            {"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
