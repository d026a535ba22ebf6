import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from profiles import (
    EXAMPLE_1,
    EXAMPLE_2,
    EXAMPLE_3,
    EXAMPLE_4,
    OFF_AXIS,
    random_profile_mix,
    random_rational,
    random_symmetric,
)

from revcrit import parse_profile
from revcrit.coverage import (
    Circle,
    Kind,
    circle_eval,
    complex_critical_set,
    component_of,
    corollary_shortcut,
    real_critical_set,
    surface_eval,
)
from revcrit.exactpoly import X
from revcrit.oracle import implicit_surface, implicitize_profile, on_surface, reachable
from revcrit.profile import eval_profile, is_symmetric, mirror, normality
from revcrit.ratexpr import PoleError

z = X


class TestSurfaceEval:
    def test_sphere(self, circle):
        assert surface_eval(circle, 1, 1) == (1, 0, 0)

    def test_s_zero_is_profile(self, any_named):
        for t0 in (Fraction(1, 3), 2, -5):
            try:
                y, zz = eval_profile(any_named, t0)
            except PoleError:
                continue
            assert surface_eval(any_named, 0, t0) == (0, y, zz)

    def test_example2(self):
        assert surface_eval(parse_profile(*EXAMPLE_2), 0, 1) == (0, Fraction(1, 2), 0)

    def test_pole(self):
        with pytest.raises(PoleError):
            surface_eval(parse_profile("t", "1/t"), 1, 0)


class TestCircleEval:
    def test_examples(self):
        assert circle_eval(Circle(1, 1), 0) == (0, 1, 1)
        assert circle_eval(Circle(1, 1), 1) == (1, 0, 1)
        assert circle_eval(Circle(-2, 0), 0) == (0, -2, 0)

    @settings(max_examples=100)
    @given(st.fractions(max_denominator=50), st.fractions(min_value=-9, max_value=9, max_denominator=20),
           st.fractions(max_denominator=20))
    def test_on_circle(self, s0, alpha, c):
        x, y, zz = circle_eval(Circle(alpha, c), s0)
        assert x * x + y * y == alpha * alpha and zz == c


class TestRealCriticalSet:
    def test_example1(self):
        assert real_critical_set(parse_profile(*EXAMPLE_1)).kind is Kind.EMPTY

    def test_example2(self):
        r = real_critical_set(parse_profile(*EXAMPLE_2))
        assert r.kind is Kind.SINGLE_POINT and r.point == (0, 0, 0)

    def test_example3(self):
        pc = parse_profile(*EXAMPLE_3)
        r = real_critical_set(pc)
        assert r.kind is Kind.MIRROR_CURVE and r.mirror == mirror(pc)

    def test_example4(self):
        r = real_critical_set(parse_profile(*EXAMPLE_4))
        assert r.kind is Kind.MIRROR_CURVE_AND_CIRCLE and r.circle == Circle(1, 1)

    def test_sphere(self, circle):
        r = real_critical_set(circle)
        assert r.kind is Kind.SINGLE_POINT and r.point == (0, 0, 1)

    def test_critical_point_on_axis_gives_mirror_only(self):
        # not symmetric, limit (0, 1) never attained: b = 0 branch
        pc = parse_profile("t/(t^2+1)", "(t^2+t)/(t^2+1)")
        assert not is_symmetric(pc) and normality(pc).point == (0, 0, 1)
        assert real_critical_set(pc).kind is Kind.MIRROR_CURVE

    def test_mirror_of_critical_point_on_curve(self):
        # critical point (0, 1, 0); its mirror (0, -1, 0) is r(-1)
        pc = parse_profile("(t^2+3*t)/(t^2+1)", "(t+1)/(t^2+1)")
        assert normality(pc).point == (0, 1, 0)
        assert eval_profile(pc, -1) == (-1, 0)
        assert real_critical_set(pc).kind is Kind.MIRROR_CURVE


class TestCoverageShortcut:
    def test_example1(self):
        assert corollary_shortcut(parse_profile(*EXAMPLE_1))

    def test_sphere(self, circle):
        assert not corollary_shortcut(circle)

    def test_example3(self):
        assert not corollary_shortcut(parse_profile(*EXAMPLE_3))

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 10**6))
    def test_implies_empty(self, seed):
        pc = random_symmetric(random.Random(seed), polynomial_component=True)
        assert corollary_shortcut(pc)
        assert real_critical_set(pc).kind is Kind.EMPTY


class TestComplexCriticalSet:
    def test_sphere(self, circle):
        c = complex_critical_set(circle)
        assert c.real.point == (0, 0, 1)
        assert c.axis_levels == z**2 - 1 and c.rational_levels == [-1, 1]

    def test_example1(self):
        c = complex_critical_set(parse_profile(*EXAMPLE_1))
        assert c.axis_levels(0) == 0 and 0 in c.rational_levels

    def test_off_axis(self):
        c = complex_critical_set(parse_profile(*OFF_AXIS))
        assert c.axis_levels == z**2 + 1 and c.rational_levels == []

    def test_rational_levels_on_curve(self, any_named):
        c = complex_critical_set(any_named)
        f = implicitize_profile(any_named).f
        for lam in c.rational_levels:
            assert f(0, lam) == 0

    def test_axis_critical_point_level_included(self):
        # the critical point (0, 0, 1) lies on the axis but off the image
        pc = parse_profile("t/(t^2+1)", "(t^2+t)/(t^2+1)")
        assert complex_critical_set(pc).axis_levels(1) == 0


def _sample_params(rng, pc, n):
    out = []
    while len(out) < n:
        t0 = random_rational(rng)
        try:
            eval_profile(pc, t0)
        except PoleError:
            continue
        out.append(t0)
    return out


class TestKindTable:
    EXPECTED = {
        (True, True): {Kind.EMPTY},
        (True, False): {Kind.SINGLE_POINT},
        (False, True): {Kind.MIRROR_CURVE},
        (False, False): {Kind.MIRROR_CURVE, Kind.MIRROR_CURVE_AND_CIRCLE},
    }

    def test_exhaustive_on_random_mix(self):
        seen = set()
        for pc in random_profile_mix(7, 40):
            r = real_critical_set(pc)
            key = (is_symmetric(pc), normality(pc).normal)
            assert r.kind in self.EXPECTED[key]
            seen.add(r.kind)
        assert seen == set(Kind)


class TestSoundness:
    @settings(max_examples=15, deadline=None)
    @given(st.integers(0, 10**6))
    def test_unreachable_mirror_points_are_reported(self, seed):
        pc = random_profile_mix(seed, 4)[seed % 4]
        r = real_critical_set(pc)
        S = implicit_surface(pc)
        rng = random.Random(seed)
        for t0 in _sample_params(rng, pc, 20):
            y, zz = eval_profile(mirror(pc), t0)
            M = (0, y, zz)
            assert on_surface(S, M)
            if not reachable(pc, M):
                assert component_of(pc, r, M) is not None
            if r.kind is Kind.EMPTY:
                assert reachable(pc, M)

    def test_circle_points_unreachable_or_on_mirror(self):
        pc = parse_profile(*EXAMPLE_4)
        r = real_critical_set(pc)
        S = implicit_surface(pc)
        rng = random.Random(1)
        for _ in range(30):
            P = circle_eval(r.circle, random_rational(rng))
            if P[0] == 0:
                continue
            assert on_surface(S, P)
            assert not reachable(pc, P) or component_of(pc, r, P) == "mirror"
            assert component_of(pc, r, P) in ("circle", "mirror")

    def test_reported_point_is_missing(self):
        for pc in random_profile_mix(3, 24):
            r = real_critical_set(pc)
            if r.kind is Kind.SINGLE_POINT:
                assert on_surface(implicit_surface(pc), r.point)
                assert not reachable(pc, r.point)
