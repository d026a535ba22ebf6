"""Profile curves ``t -> (0, p(t), q(t))`` and the gcd-based checks on them.

Every check here reduces to the degree of a univariate gcd over Q, so all
verdicts are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import count
from typing import Optional

from revcrit.exactpoly import Poly, poly_gcd
from revcrit.exactpoly import bivariate as bv
from revcrit.ratexpr import PoleError, RationalFunction, format_ratfunc


class ProfileError(ValueError):
    """The profile does not satisfy the standing assumptions."""

    check = "profile"


class DegenerateAxis(ProfileError):
    check = "DegenerateAxis"


class DegenerateLine(ProfileError):
    check = "DegenerateLine"


class NotProper(ProfileError):
    check = "NotProper"


@dataclass(frozen=True)
class ProfileCurve:
    p: RationalFunction
    q: RationalFunction

    @property
    def p1(self) -> Poly:
        return self.p.num

    @property
    def p2(self) -> Poly:
        return self.p.den

    @property
    def q1(self) -> Poly:
        return self.q.num

    @property
    def q2(self) -> Poly:
        return self.q.den

    @property
    def degree(self) -> int:
        return max(self.p.degree, self.q.degree)

    def __str__(self) -> str:
        return f"(0, {format_ratfunc(self.p)}, {format_ratfunc(self.q)})"


@dataclass(frozen=True)
class CriticalPointResult:
    """Normality verdict; ``point`` is ``(0, b, c)`` exactly when not normal."""

    normal: bool
    point: Optional[tuple[Fraction, Fraction, Fraction]] = None


def make_profile(p: RationalFunction, q: RationalFunction, check_proper_: bool = True) -> ProfileCurve:
    """Validate and build a profile.

    ``check_proper_=False`` skips the properness test; the caller then
    vouches for it.
    """
    if p.is_zero():
        raise DegenerateAxis("p is identically zero: the curve lies on the z-axis")
    if q.is_constant():
        raise DegenerateLine("q is constant: the curve is a line parallel to the y-axis")
    if check_proper_ and not check_proper(p, q):
        raise NotProper(f"the parametrization ({p}, {q}) is not proper")
    return ProfileCurve(p, q)


def _diagonal_difference(rf: RationalFunction, sign: int = -1) -> bv.BiPoly:
    """Coefficients in t of ``num(t) den(s) + sign * num(s) den(t)`` as polys in s."""
    num, den = rf.num, rf.den
    n = max(num.degree, den.degree)
    return bv.trim([den * num[k] + num * (den[k] * sign) for k in range(n + 1)])


def _specialize(f: bv.BiPoly, s0: Fraction) -> Poly:
    return Poly([c(s0) for c in f])


def _generic_gcd_degree(f: bv.BiPoly, g: bv.BiPoly, known_lower: int) -> int:
    """Degree in t of gcd(f, g) over Q(s).

    Specializing s keeps every common factor (when leading coefficients do
    not vanish), so a specialization whose gcd already has degree
    ``known_lower`` certifies the answer. Otherwise fall back to the exact
    gcd over Q(s).
    """
    f, g = bv.trim(f), bv.trim(g)
    if not f or not g:
        return bv.degree_t(g or f)
    for s0 in (Fraction(2), Fraction(-3), Fraction(5, 2), Fraction(7)):
        if f[-1](s0) == 0 or g[-1](s0) == 0:
            continue
        if poly_gcd(_specialize(f, s0), _specialize(g, s0)).degree <= known_lower:
            return known_lower
    return bv.degree_t(bv.gcd_over_field(f, g))


def check_proper(p: RationalFunction, q: RationalFunction) -> bool:
    """True iff ``t -> (p(t), q(t))`` is birational onto its image.

    ``t - s`` always divides both diagonal differences, so the map is proper
    exactly when their gcd over Q(s) is linear in t.
    """
    fp = _diagonal_difference(p)
    fq = _diagonal_difference(q)
    if not fp and not fq:
        return False
    return _generic_gcd_degree(fp, fq, 1) == 1


def mirror(pc: ProfileCurve) -> ProfileCurve:
    return ProfileCurve(-pc.p, pc.q)


def limit_at_infinity(rf: RationalFunction) -> Optional[Fraction]:
    """Limit as t -> oo, or ``None`` when it is infinite."""
    dn, dd = rf.num.degree, rf.den.degree
    if dn > dd:
        return None
    if dn < dd:
        return Fraction(0)
    return rf.num.lc / rf.den.lc


def limit_point(pc: ProfileCurve) -> Optional[tuple[Fraction, Fraction]]:
    a, b = limit_at_infinity(pc.p), limit_at_infinity(pc.q)
    if a is None or b is None:
        return None
    return a, b


def reach_gcd(pc: ProfileCurve, b: Fraction, c: Fraction) -> Poly:
    """gcd whose roots are the finite parameters t with r(t) = (0, b, c)."""
    return poly_gcd(pc.p2 * b - pc.p1, pc.q2 * c - pc.q1)


def normality(pc: ProfileCurve) -> CriticalPointResult:
    lim = limit_point(pc)
    if lim is None:
        return CriticalPointResult(True)
    alpha, beta = lim
    if reach_gcd(pc, alpha, beta).degree > 0:
        # the limit point is also hit at a finite parameter
        return CriticalPointResult(True)
    return CriticalPointResult(False, (Fraction(0), alpha, beta))


def point_on_curve(pc: ProfileCurve, b, c) -> bool:
    """True iff (0, b, c) is reached by the profile at a finite complex parameter.

    The only curve point this misses is the critical point; callers handle it.
    """
    return reach_gcd(pc, Fraction(b), Fraction(c)).degree > 0


def on_curve_closure(pc: ProfileCurve, b, c) -> bool:
    """Membership in the whole curve: reachable points plus the limit at infinity."""
    b, c = Fraction(b), Fraction(c)
    return point_on_curve(pc, b, c) or limit_point(pc) == (b, c)


def eval_profile(pc: ProfileCurve, t0) -> tuple[Fraction, Fraction]:
    t0 = Fraction(t0)
    if pc.p2(t0) == 0:
        raise PoleError(f"p has a pole at t={t0}", "p")
    if pc.q2(t0) == 0:
        raise PoleError(f"q has a pole at t={t0}", "q")
    return pc.p1(t0) / pc.p2(t0), pc.q1(t0) / pc.q2(t0)


def _homogeneous_compose(f: Poly, n: int, num: Poly, den: Poly) -> Poly:
    """``den^n * f(num/den)`` for ``n >= deg f``."""
    out = Poly()
    for i, c in enumerate(f.coeffs):
        if c:
            out = out + (num**i) * (den ** (n - i)) * c
    return out


def _is_mirror_involution(pc: ProfileCurve, a, b, c, d) -> bool:
    """Check p(phi) = -p and q(phi) = q for phi(t) = (a t + b)/(c t + d)."""
    if a * d - b * c == 0:
        return False
    num, den = Poly((b, a)), Poly((d, c))
    n = max(pc.p1.degree, pc.p2.degree)
    P1, P2 = _homogeneous_compose(pc.p1, n, num, den), _homogeneous_compose(pc.p2, n, num, den)
    if (P1 * pc.p2 + pc.p1 * P2).coeffs:
        return False
    n = max(pc.q1.degree, pc.q2.degree)
    Q1, Q2 = _homogeneous_compose(pc.q1, n, num, den), _homogeneous_compose(pc.q2, n, num, den)
    return not (Q1 * pc.q2 - pc.q1 * Q2).coeffs


def _mobius_through(pairs) -> Optional[tuple[Fraction, ...]]:
    """Coefficients (a, b, c, d) of the Moebius map sending each t0 to t1 (None = oo)."""
    rows = []
    for t0, t1 in pairs:
        if t1 is None:
            rows.append([Fraction(0), Fraction(0), t0, Fraction(1)])
        else:
            rows.append([t0, Fraction(1), -t1 * t0, -t1])
    # reduced row echelon form of a 3x4 system
    pivots = []
    r = 0
    for col in range(4):
        piv = next((i for i in range(r, 3) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(3):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == 3:
            break
    if r != 3:
        return None
    free = next(c for c in range(4) if c not in pivots)
    sol = [Fraction(0)] * 4
    sol[free] = Fraction(1)
    for i, col in enumerate(pivots):
        sol[col] = -rows[i][free]
    return tuple(sol)


def _symmetric_exact(pc: ProfileCurve) -> bool:
    fp = _diagonal_difference(pc.p, sign=+1)
    fq = _diagonal_difference(pc.q)
    return _generic_gcd_degree(fp, fq, 0) > 0


def is_symmetric(pc: ProfileCurve) -> bool:
    """Decide whether the curve equals its mirror image across the z-axis.

    Samples t0 = 1, 2, ... (skipping poles) and asks whether each mirrored
    sample lies on the curve; any miss proves asymmetry. After 2m+1 hits the
    reflection is confirmed exactly by recovering the Moebius map phi with
    r(phi(t)) = mirror(r(t)) from the sampled preimages.
    """
    m = pc.degree
    needed = 2 * m + 1
    cap = needed + pc.p2.degree + pc.q2.degree
    lim = limit_point(pc)
    pairs: list[tuple[Fraction, Optional[Fraction]]] = []
    hits = 0
    t0 = Fraction(0)
    for _ in count():
        t0 += 1
        if hits >= needed and (len(pairs) >= 3 or t0 > cap + 2 * needed):
            break
        if pc.p2(t0) == 0 or pc.q2(t0) == 0:
            continue
        alpha, beta = eval_profile(pc, t0)
        h = reach_gcd(pc, -alpha, beta)
        if h.degree > 0:
            hits += 1
            if h.degree == 1:
                pairs.append((t0, -h[0] / h[1]))
        elif lim == (-alpha, beta):
            # mirror sample is the point at t = oo
            hits += 1
            pairs.append((t0, None))
        else:
            return False
    if len(pairs) >= 3:
        coeffs = _mobius_through(pairs[:3])
        if coeffs is not None and _is_mirror_involution(pc, *coeffs):
            return True
    # a singular mirror point can pair t0 with the wrong preimage; settle it exactly
    return _symmetric_exact(pc)
