"""Command-line interface.

Exit codes: 0 success, 1 malformed input (expressions, points, ranges,
usage), 2 degenerate or non-proper profile, 3 internal failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
import time
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Sequence

from revcrit.coverage import (
    Kind,
    RealCriticalSet,
    circle_eval,
    component_of,
    corollary_shortcut,
    critical_set_from,
    surface_eval,
)
from revcrit.exactpoly import NumericError, Poly, numeric_roots, rational_roots
from revcrit.exactpoly.poly import format_scalar
from revcrit.oracle import axis_levels, implicitize_profile, on_surface, reachable, surface_from_profile
from revcrit.profile import ProfileError, eval_profile, is_symmetric, make_profile, normality
from revcrit.ratexpr import ExpressionError, PoleError, format_ratfunc, parse_ratfunc

EXIT_OK, EXIT_INPUT, EXIT_PROFILE, EXIT_INTERNAL = 0, 1, 2, 3
CIRCLE_SAMPLES = 64


class InputError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def rat(x: Fraction) -> str:
    return format_scalar(Fraction(x))


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a rational number: {text!r}") from exc


def parse_point(text: str) -> tuple[Fraction, Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 3:
        raise InputError(f"point must be 'x,y,z', got {text!r}")
    x, y, z = (parse_rational(p) for p in parts)
    return x, y, z


def parse_range(text: str) -> tuple[Fraction, Fraction]:
    parts = text.split(":")
    if len(parts) != 2:
        raise InputError(f"range must be 'a:b', got {text!r}")
    return parse_rational(parts[0]), parse_rational(parts[1])


def decimal_str(x: Fraction) -> str:
    with localcontext() as ctx:
        ctx.prec = 15
        return format(Decimal(x.numerator) / Decimal(x.denominator), ".15g")


def _profile(args):
    p, q = parse_ratfunc(args.p), parse_ratfunc(args.q)
    return make_profile(p, q, check_proper_=not getattr(args, "skip_proper_check", False))


def _point_json(P) -> dict:
    return {"x": rat(P[0]), "y": rat(P[1]), "z": rat(P[2])}


def critical_set_json(rcs: RealCriticalSet) -> dict:
    out: dict = {"kind": rcs.kind.value}
    if rcs.point is not None:
        out["point"] = _point_json(rcs.point)
    if rcs.mirror is not None:
        out["mirror"] = {"p": format_ratfunc(rcs.mirror.p), "q": format_ratfunc(rcs.mirror.q)}
    if rcs.circle is not None:
        out["circle"] = {"alpha": rat(rcs.circle.alpha), "c": rat(rcs.circle.c)}
    return out


def _approx(z: complex) -> dict:
    return {"re": f"{z.real:.12g}", "im": f"{z.imag:.12g}", "exact": False}


def axis_levels_json(J: Poly) -> dict:
    exact = sorted(set(rational_roots(J))) if J.degree > 0 else []
    try:
        approx = [_approx(z) for z in numeric_roots(J)] if J.degree > 0 else []
    except NumericError as exc:
        approx = {"error": str(exc)}
    return {
        "axis_levels": J.to_str("z"),
        "rational_levels": [rat(r) for r in exact],
        "approximate_levels": approx,
    }


def build_report(pc, *, complex_levels: bool, proper_checked: bool) -> dict:
    symmetric = is_symmetric(pc)
    crit = normality(pc)
    rcs = critical_set_from(pc, symmetric, crit)
    report: dict = {
        "input": {"p": format_ratfunc(pc.p), "q": format_ratfunc(pc.q)},
        "proper": True if proper_checked else "assumed",
        "symmetric": symmetric,
        "normal": crit.normal,
        "critical_point": None if crit.point is None else _point_json(crit.point),
        "corollary": corollary_shortcut(pc),
        "critical_set": critical_set_json(rcs),
    }
    if complex_levels:
        report["complex"] = axis_levels_json(axis_levels(implicitize_profile(pc)))
    return report


_KIND_TEXT = {
    Kind.EMPTY.value: "empty (the parametrization covers the real surface)",
    Kind.SINGLE_POINT.value: "the critical point",
    Kind.MIRROR_CURVE.value: "the mirror curve",
    Kind.MIRROR_CURVE_AND_CIRCLE.value: "the mirror curve and the cross-section circle",
}


def report_text(report: dict) -> str:
    pt = report["critical_point"]
    cs = report["critical_set"]
    lines = [
        f"profile: (0, {report['input']['p']}, {report['input']['q']})",
        f"proper: {str(report['proper']).lower()}",
        f"symmetric: {str(report['symmetric']).lower()}",
        f"normal: {str(report['normal']).lower()}",
        "critical point: " + ("none" if pt is None else f"({pt['x']}, {pt['y']}, {pt['z']})"),
        f"real critical set: {_KIND_TEXT[cs['kind']]}",
    ]
    if "point" in cs:
        lines.append(f"  point: ({cs['point']['x']}, {cs['point']['y']}, {cs['point']['z']})")
    if "mirror" in cs:
        lines.append(f"  mirror: (0, {cs['mirror']['p']}, {cs['mirror']['q']})")
    if "circle" in cs:
        lines.append(f"  circle: radius |{cs['circle']['alpha']}| in plane z = {cs['circle']['c']}")
    if "complex" in report:
        cx = report["complex"]
        lines.append(f"complex line pairs x = +-i*y at roots of: {cx['axis_levels']}")
        if cx["rational_levels"]:
            lines.append("  rational levels: " + ", ".join(cx["rational_levels"]))
        approx = cx["approximate_levels"]
        if isinstance(approx, list) and approx:
            lines.append("  approximate levels: " + ", ".join(f"{a['re']}{'+' if not a['im'].startswith('-') else ''}{a['im']}i" for a in approx))
    if "timing_ms" in report:
        lines.append(f"time: {report['timing_ms']} ms")
    return "\n".join(lines)


def _emit(obj, fmt: str, text: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(obj, indent=2) + "\n")
    else:
        sys.stdout.write(text + "\n")


def cmd_analyze(args) -> int:
    start = time.perf_counter()
    pc = _profile(args)
    report = build_report(pc, complex_levels=args.complex, proper_checked=not args.skip_proper_check)
    if args.timing:
        report["timing_ms"] = round((time.perf_counter() - start) * 1000, 3)
    _emit(report, args.format, report_text(report))
    return EXIT_OK


def cmd_reachable(args) -> int:
    P = parse_point(args.point)
    pc = _profile(args)
    hit = reachable(pc, P)
    surface = surface_from_profile(implicitize_profile(pc))
    on = on_surface(surface, P)
    component = None
    if not hit and on:
        rcs = critical_set_from(pc, is_symmetric(pc), normality(pc))
        component = component_of(pc, rcs, P) or "outside reported set"
    out = {"point": _point_json(P), "reachable": hit, "on_surface": on, "component": component}
    lines = [f"reachable: {str(hit).lower()}", f"on_surface: {str(on).lower()}"]
    if component is not None:
        lines.append(f"component: {component}")
    _emit(out, args.format, "\n".join(lines))
    return EXIT_OK


def cmd_implicitize(args) -> int:
    pc = _profile(args)
    S = surface_from_profile(implicitize_profile(pc))
    out = {"f": S.f.to_str(), "A": S.A.to_str(), "B": S.B.to_str(), "F": S.F.to_str(), "symmetric": S.symmetric}
    if args.what == "profile":
        text = out["f"]
    elif args.what == "surface":
        text = out["F"]
    else:
        text = f"A = {out['A']}\nB = {out['B']}"
    _emit(out, args.format, text)
    return EXIT_OK


def _grid(lo: Fraction, hi: Fraction, n: int) -> list[Fraction]:
    if n <= 0:
        return []
    if n == 1:
        return [lo]
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


def _circle_params() -> list[Fraction]:
    # tan of half the angle, at angles offset from pi so every sample is finite
    return [
        Fraction(math.tan(math.pi * (k + 0.5) / CIRCLE_SAMPLES - math.pi / 2)).limit_denominator(10**6)
        for k in range(CIRCLE_SAMPLES)
    ]


def cmd_sample(args) -> int:
    if args.n < 0:
        raise InputError("--n must be nonnegative")
    s_lo, s_hi = parse_range(args.s_range)
    t_lo, t_hi = parse_range(args.t_range)
    pc = _profile(args)
    rows: list[tuple[Fraction, Fraction, Fraction, str]] = []
    skipped = 0
    ss, ts = _grid(s_lo, s_hi, args.n), _grid(t_lo, t_hi, args.n)
    for s0 in ss:
        for t0 in ts:
            try:
                rows.append((*surface_eval(pc, s0, t0), "surface"))
            except PoleError:
                skipped += 1
    if args.include_critical:
        rcs = critical_set_from(pc, is_symmetric(pc), normality(pc))
        if rcs.mirror is not None:
            for t0 in ts:
                try:
                    y, z = eval_profile(rcs.mirror, t0)
                except PoleError:
                    skipped += 1
                    continue
                rows.append((Fraction(0), y, z, "mirror"))
        if rcs.circle is not None:
            for s0 in _circle_params():
                rows.append((*circle_eval(rcs.circle, s0), "circle"))
        if rcs.point is not None:
            rows.append((*rcs.point, "point"))
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["x", "y", "z", "source"])
        for x, y, z, src in rows:
            writer.writerow([decimal_str(x), decimal_str(y), decimal_str(z), src])
    finally:
        if args.out:
            out.close()
    if skipped:
        print(f"skipped {skipped} samples at poles", file=sys.stderr)
    return EXIT_OK


def _add_profile_args(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--p", required=True, help="y-component of the profile, e.g. '2*t/(t^2+1)'")
    sp.add_argument("--q", required=True, help="z-component of the profile")
    sp.add_argument("--skip-proper-check", action="store_true",
                    help="assume the parametrization is proper instead of checking it")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="revcrit", description="Critical sets of surface-of-revolution parametrizations.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="report the real (and optionally complex) critical set")
    _add_profile_args(a)
    a.add_argument("--complex", action="store_true", help="include the axis levels of the complex line pairs")
    a.add_argument("--format", choices=("text", "json"), default="text")
    a.add_argument("--timing", action="store_true", help="add elapsed milliseconds to the report")
    a.set_defaults(func=cmd_analyze)

    r = sub.add_parser("reachable", help="decide whether a rational point is hit by the parametrization")
    _add_profile_args(r)
    r.add_argument("--point", required=True, help="'x,y,z' with rational components such as 1/2")
    r.add_argument("--format", choices=("text", "json"), default="text")
    r.set_defaults(func=cmd_reachable)

    i = sub.add_parser("implicitize", help="print implicit equations")
    _add_profile_args(i)
    i.add_argument("--what", choices=("profile", "surface", "ab"), default="surface")
    i.add_argument("--format", choices=("text", "json"), default="text")
    i.set_defaults(func=cmd_implicitize)

    s = sub.add_parser("sample", help="write surface and critical-set samples as CSV")
    _add_profile_args(s)
    s.add_argument("--n", type=int, required=True, help="grid size per parameter")
    s.add_argument("--s-range", required=True, help="a:b")
    s.add_argument("--t-range", required=True, help="a:b")
    s.add_argument("--include-critical", action="store_true")
    s.add_argument("--out", help="output path (default: standard output)")
    s.set_defaults(func=cmd_sample)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ExpressionError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ProfileError as exc:
        print(f"error: {exc.check}: {exc}", file=sys.stderr)
        return EXIT_PROFILE
    except Exception as exc:  # noqa: BLE001 - exit-code contract
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
