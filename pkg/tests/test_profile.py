import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from profiles import (
    CIRCLE,
    EXAMPLE_1,
    EXAMPLE_2,
    EXAMPLE_3,
    EXAMPLE_4,
    _reparam,
    named,
    random_nonsymmetric,
    random_profile_mix,
    random_rational,
    random_symmetric,
)

import revcrit.profile as profile_mod
from revcrit import parse_profile
from revcrit.exactpoly import Poly, X
from revcrit.oracle import ab_split, implicitize_profile
from revcrit.profile import (
    CriticalPointResult,
    DegenerateAxis,
    DegenerateLine,
    NotProper,
    ProfileCurve,
    check_proper,
    eval_profile,
    is_symmetric,
    limit_at_infinity,
    make_profile,
    mirror,
    normality,
    point_on_curve,
)
from revcrit.ratexpr import PoleError, RationalFunction, parse_ratfunc

t = X
R = parse_ratfunc


class TestMakeProfile:
    def test_accepts_example(self):
        pc = parse_profile(*EXAMPLE_1)
        assert pc.p == R("t^5/(t^4+1)") and pc.q == R("t^2/(t^4+1)")

    def test_degenerate_axis(self):
        with pytest.raises(DegenerateAxis):
            parse_profile("0", "t")

    def test_degenerate_line(self):
        with pytest.raises(DegenerateLine):
            parse_profile("t", "3")

    def test_not_proper(self):
        with pytest.raises(NotProper) as info:
            parse_profile("t^2", "t^4")
        assert info.value.check == "NotProper"

    def test_skip_proper_check(self):
        pc = parse_profile("t^2", "t^4", check=False)
        assert pc.degree == 4


class TestCheckProper:
    def test_cusp(self):
        assert check_proper(R("t^2"), R("t^3"))

    def test_double_cover(self):
        assert not check_proper(R("t^2"), R("t^4"))

    def test_circle_against_symbolic_solve(self):
        assert check_proper(R(CIRCLE[0]), R(CIRCLE[1]))
        t1, t2 = sympy.symbols("t1 t2")
        p = lambda v: 2 * v / (v**2 + 1)  # noqa: E731
        q = lambda v: (v**2 - 1) / (v**2 + 1)  # noqa: E731
        eqs = [sympy.numer(sympy.together(p(t1) - p(t2))), sympy.numer(sympy.together(q(t1) - q(t2)))]
        sols = sympy.solve(eqs, [t1, t2], dict=True)
        finite = [s for s in sols if all((v**2 + 1) != 0 for v in (s.get(t1, t1), s.get(t2, t2)))]
        assert finite and all(sympy.simplify(s.get(t1, t1) - s.get(t2, t2)) == 0 for s in finite)

    def test_mobius_reparametrization_stays_proper(self):
        rf_p, rf_q = R("t^3"), R("t")
        assert check_proper(_reparam(rf_p, 2, 1, 1, 3), _reparam(rf_q, 2, 1, 1, 3))

    def test_hidden_double_cover(self):
        # both components factor through t -> t^2 + t
        w = lambda rf: RationalFunction.make(rf.num.compose(t**2 + t), rf.den.compose(t**2 + t))  # noqa: E731
        assert not check_proper(w(R("t/(t^2+3)")), w(R("t^3-1")))


class TestMirror:
    def test_example3(self):
        pc = parse_profile(*EXAMPLE_3)
        m = mirror(pc)
        assert m.p == R("-t/(t^4+1)") and m.q == R("t^3/(t^2+1)")

    def test_polynomial(self):
        m = mirror(parse_profile("t^2", "t"))
        assert (m.p, m.q) == (R("-t^2"), R("t"))

    def test_involution(self, any_named):
        assert mirror(mirror(any_named)) == any_named


class TestLimitAtInfinity:
    @pytest.mark.parametrize(
        "text, expected",
        [("t^5/(t^4+1)", None), ("(t^2-1)/(t^2+1)", Fraction(1)), ("t/(t^4+1)", Fraction(0)), ("(3*t-1)/(2*t)", Fraction(3, 2))],
    )
    def test_examples(self, text, expected):
        assert limit_at_infinity(R(text)) == expected


class TestNormality:
    def test_example1(self):
        assert normality(parse_profile(*EXAMPLE_1)) == CriticalPointResult(True)

    def test_example2(self):
        assert normality(parse_profile(*EXAMPLE_2)) == CriticalPointResult(False, (0, 0, 0))

    def test_example4(self):
        assert normality(parse_profile(*EXAMPLE_4)) == CriticalPointResult(False, (0, 1, 1))

    def test_circle(self, circle):
        assert normality(circle) == CriticalPointResult(False, (0, 0, 1))

    def test_limit_attained_elsewhere(self):
        # limit (1, 0) is also r(-1)
        pc = parse_profile("(t^2-t)/(t^2+1)", "(t+1)/(t^2+2)")
        assert eval_profile(pc, -1) == (1, 0)
        assert normality(pc).normal is True


class TestSymmetry:
    def test_example1(self):
        assert is_symmetric(parse_profile(*EXAMPLE_1))

    def test_example3(self):
        assert not is_symmetric(parse_profile(*EXAMPLE_3))

    def test_circle(self, circle):
        assert is_symmetric(circle)
        assert ab_split(implicitize_profile(circle)).B.is_zero()

    def test_mirror_sample_at_limit_point(self):
        # circle reparametrized so t = oo lands on (1, 0) and t = 1 on (-1, 0)
        p = _reparam(R(CIRCLE[0]), 1, -2, 1, 0)
        q = _reparam(R(CIRCLE[1]), 1, -2, 1, 0)
        pc = make_profile(p, q)
        assert eval_profile(pc, 1) == (-1, 0)
        assert profile_mod.limit_point(pc) == (1, 0)
        assert is_symmetric(pc)
        assert normality(pc) == CriticalPointResult(False, (0, 1, 0))

    def test_exact_fallback_agrees(self):
        for pc in random_profile_mix(11, 16):
            assert profile_mod._symmetric_exact(pc) == is_symmetric(pc)

    def test_exact_fallback_on_examples(self, any_named):
        assert profile_mod._symmetric_exact(any_named) == is_symmetric(any_named)


class TestPointOnCurve:
    def test_example4_mirror_of_critical_point(self):
        assert not point_on_curve(parse_profile(*EXAMPLE_4), -1, 1)

    def test_circle(self, circle):
        assert point_on_curve(circle, -1, 0)
        assert not point_on_curve(circle, 2, 0)

    def test_critical_point_is_not_reached(self, circle):
        assert not point_on_curve(circle, 0, 1)
        assert profile_mod.on_curve_closure(circle, 0, 1)


class TestEvalProfile:
    def test_example1(self):
        assert eval_profile(parse_profile(*EXAMPLE_1), 1) == (Fraction(1, 2), Fraction(1, 2))

    def test_circle_origin(self, circle):
        assert eval_profile(circle, 0) == (0, -1)

    def test_pole_reports_component(self):
        pc = parse_profile("t", "1/(t-2)")
        with pytest.raises(PoleError) as info:
            eval_profile(pc, 2)
        assert info.value.which == "q"


seeds = st.integers(0, 10**6)


def _samples(rng, pc, n):
    out = []
    while len(out) < n:
        t0 = random_rational(rng)
        try:
            out.append(eval_profile(pc, t0))
        except PoleError:
            pass
    return out


class TestInvariants:
    @settings(max_examples=25, deadline=None)
    @given(seeds)
    def test_mirror_preserves_symmetry(self, seed):
        pc = random_profile_mix(seed, 4)[seed % 4]
        assert is_symmetric(pc) == is_symmetric(mirror(pc))
        assert mirror(mirror(pc)) == pc

    @settings(max_examples=25, deadline=None)
    @given(seeds)
    def test_symmetry_matches_split(self, seed):
        pc = random_profile_mix(seed, 4)[seed % 4]
        assert is_symmetric(pc) == ab_split(implicitize_profile(pc)).B.is_zero()

    @settings(max_examples=25, deadline=None)
    @given(seeds)
    def test_samples_are_on_curve(self, seed):
        rng = random.Random(seed)
        pc = random_nonsymmetric(rng, normal=bool(seed % 2))
        for y, z in _samples(rng, pc, 5):
            assert point_on_curve(pc, y, z)

    @settings(max_examples=25, deadline=None)
    @given(seeds)
    def test_symmetric_mirror_samples_on_curve(self, seed):
        rng = random.Random(seed)
        pc = random_symmetric(rng, mobius=bool(seed % 2))
        assert is_symmetric(pc)
        for y, z in _samples(rng, pc, 5):
            assert profile_mod.on_curve_closure(pc, -y, z)

    @settings(max_examples=25, deadline=None)
    @given(seeds)
    def test_normality_against_implicit_curve(self, seed):
        pc = random_profile_mix(seed, 4)[seed % 4]
        f = implicitize_profile(pc).f
        crit = normality(pc)
        lim = profile_mod.limit_point(pc)
        if not crit.normal:
            _, b, c = crit.point
            assert f(b, c) == 0
            assert not point_on_curve(pc, b, c)
        elif lim is not None:
            assert point_on_curve(pc, *lim)


def test_profile_curve_degree():
    pc = ProfileCurve(R("t^5/(t^4+1)"), R("t^2/(t^4+1)"))
    assert pc.degree == 5
    assert named("cubic").degree == 3
    assert Poly.from_roots([]) == Poly((1,))
