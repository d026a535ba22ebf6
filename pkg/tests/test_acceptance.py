"""Acceptance criteria, one test each, each printing a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v`` or ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import contextlib
import io
import random
import subprocess
import sys
import time
from pathlib import Path

import pytest
import sympy

sys.path.insert(0, str(Path(__file__).parent))

from profiles import (  # noqa: E402
    CIRCLE,
    EXAMPLE_1,
    EXAMPLE_2,
    EXAMPLE_3,
    EXAMPLE_4,
    NAMED,
    random_profile_mix,
    random_profile_of_degree,
    random_rational,
    random_symmetric,
    random_symmetric_of_degree,
)

from revcrit import parse_profile  # noqa: E402
from revcrit.cli import main  # noqa: E402
from revcrit.coverage import Circle, Kind, component_of, real_critical_set, surface_eval  # noqa: E402
from revcrit.exactpoly import X  # noqa: E402
from revcrit.oracle import ab_split, axis_levels, implicit_surface, implicitize_profile, on_surface, reachable  # noqa: E402
from revcrit.profile import eval_profile, is_symmetric, mirror, normality  # noqa: E402
from revcrit.ratexpr import PoleError, format_ratfunc  # noqa: E402

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def report(request):
    capman = request.config.pluginmanager.getplugin("capturemanager")

    def emit(number: int, title: str, ok: bool, detail: str = "") -> None:
        line = f"[criterion {number}] {'PASS' if ok else 'FAIL'}: {title}" + (f" ({detail})" if detail else "")
        ctx = capman.global_and_fixture_disabled() if capman else contextlib.nullcontext()
        with ctx:
            print("\n" + line, flush=True)
        assert ok, line

    return emit


def test_criterion_1_examples(report):
    start = time.perf_counter()
    got = [real_critical_set(parse_profile(*ex)) for ex in (EXAMPLE_1, EXAMPLE_2, EXAMPLE_3, EXAMPLE_4)]
    elapsed = time.perf_counter() - start
    ok = (
        got[0].kind is Kind.EMPTY
        and got[1].kind is Kind.SINGLE_POINT and got[1].point == (0, 0, 0)
        and got[2].kind is Kind.MIRROR_CURVE
        and got[3].kind is Kind.MIRROR_CURVE_AND_CIRCLE and got[3].circle == Circle(1, 1)
        and elapsed < 1.0
    )
    report(1, "the four reference examples give their expected critical sets", ok, f"{elapsed * 1000:.0f} ms")


def test_criterion_2_intro_circle(report):
    pc = parse_profile(*CIRCLE)
    crit = normality(pc)
    rcs = real_critical_set(pc)
    S = implicit_surface(pc)
    north = (0, 0, 1)
    ok = (
        is_symmetric(pc)
        and not crit.normal and crit.point == north
        and rcs.kind is Kind.SINGLE_POINT and rcs.point == north
        and not reachable(pc, north) and on_surface(S, north)
    )
    report(2, "unit circle profile misses exactly the north pole", ok)


def test_criterion_3_growth_component_covers(report):
    rng = random.Random(2024)
    kinds = []
    for _ in range(20):
        pc = random_symmetric(rng, polynomial_component=True)
        has_poly_part = any(rf.num.degree > rf.den.degree for rf in (pc.p, pc.q))
        kinds.append(has_poly_part and real_critical_set(pc).kind is Kind.EMPTY)
    report(3, "symmetric profiles with a polynomial-growth component are fully covered", all(kinds),
           f"{sum(kinds)}/20 empty")


def _params(rng, pc, n):
    out = []
    while len(out) < n:
        t0 = random_rational(rng)
        try:
            eval_profile(pc, t0)
        except PoleError:
            continue
        out.append(t0)
    return out


def test_criterion_4_containment(report):
    start = time.perf_counter()
    profiles = random_profile_mix(4, 25)
    rng = random.Random(4)
    unreachable = failures = 0
    classes = set()
    for pc in profiles:
        rcs = real_critical_set(pc)
        S = implicit_surface(pc)
        classes.add((is_symmetric(pc), normality(pc).normal))
        mir = mirror(pc)
        for t0 in _params(rng, pc, 100):
            M = (0, *eval_profile(mir, t0))
            if not reachable(pc, M):
                unreachable += 1
                if component_of(pc, rcs, M) is None:
                    failures += 1
            s0 = random_rational(rng)
            if S.F(*surface_eval(pc, s0, t0)) != 0:
                failures += 1
    elapsed = time.perf_counter() - start
    ok = failures == 0 and len(classes) == 4 and elapsed < 60
    report(4, "unreachable mirror samples lie in the reported set and F vanishes on P(s,t)", ok,
           f"25 profiles, 2500 mirror + 2500 surface samples, {unreachable} unreachable, {elapsed:.1f} s")


def test_criterion_5_symmetry_cross_oracle(report):
    pcs = [parse_profile(*pq) for pq in NAMED.values()] + random_profile_mix(5, 40)
    agree = [is_symmetric(pc) == ab_split(implicitize_profile(pc)).B.is_zero() for pc in pcs]
    report(5, "symmetry test agrees with B == 0", all(agree), f"{sum(agree)}/{len(agree)} profiles")


def test_criterion_6_axis_line_pairs(report):
    pc = parse_profile(*CIRCLE)
    J = axis_levels(implicitize_profile(pc))
    F = implicit_surface(pc).F
    x, y, z, t = sympy.symbols("x y z t")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * x**a * y**b * z**e for (a, b, e), c in F.terms.items())
    identities = [
        sympy.expand(expr.subs({x: t, y: sgn * sympy.I * t, z: lam})) == 0
        for sgn in (1, -1) for lam in (1, -1)
    ]
    ok = J == X**2 - 1 and all(identities)
    report(6, "sphere axis levels are z^2-1 and the four lines x = +-i*y, z = +-1 lie on F", ok)


def _timed_analyze(pc) -> float:
    """Wall time of the analyze command from text input, properness check included."""
    argv = ["analyze", "--p", format_ratfunc(pc.p), "--q", format_ratfunc(pc.q), "--format", "json"]
    start = time.perf_counter()
    with contextlib.redirect_stdout(io.StringIO()):
        code = main(argv)
    assert code == 0
    return time.perf_counter() - start


def test_criterion_7_growth(report):
    rng = random.Random(7)
    limits = {10: 1.0, 20: 10.0, 30: 50.0}
    timings = {}
    for n in limits:
        generic = random_profile_of_degree(rng, n)
        symmetric = random_symmetric_of_degree(rng, n)
        timings[n] = max(_timed_analyze(generic), _timed_analyze(symmetric))
    ok = all(timings[n] < limits[n] for n in limits)
    report(7, "analyze stays polynomial-time on degree 10/20/30 profiles", ok,
           ", ".join(f"deg {n}: {timings[n]:.3f} s" for n in limits))


def test_criterion_8_determinism(report):
    ok = True
    for n, pq in enumerate((EXAMPLE_1, EXAMPLE_2, EXAMPLE_3, EXAMPLE_4), start=1):
        args = [sys.executable, "-m", "revcrit", "analyze", "--p", pq[0], "--q", pq[1], "--format", "json"]
        runs = {subprocess.run(args, capture_output=True, check=True).stdout for _ in range(2)}
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            main(["analyze", "--p", pq[0], "--q", pq[1], "--format", "json"])
        runs.add(buf.getvalue().encode())
        ok &= runs == {(GOLDEN / f"example{n}.json").read_bytes()}
    report(8, "JSON reports are byte-identical across runs and match the golden files", ok)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))

