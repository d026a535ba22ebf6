"""Independent verification: implicit equations and exact reachability.

Nothing here calls the symmetry/normality routines used by ``coverage``;
the implicit side is built from a resultant and the reachability test from
its own gcd conditions, so the two can be checked against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from revcrit.exactpoly import MPoly, Poly, poly_gcd, rational_roots, resultant, squarefree_part
from revcrit.exactpoly.bivariate import squarefree_bivariate
from revcrit.profile import ProfileCurve

YZ = ("y", "z")
UZ = ("u", "z")
XYZ = ("x", "y", "z")


class DegenerateLevel(ArithmeticError):
    pass


class AxisContained(ArithmeticError):
    pass


@dataclass(frozen=True)
class ImplicitProfile:
    f: MPoly  # in (y, z)


@dataclass(frozen=True)
class ABSplit:
    A: MPoly  # in (u, z), u standing for y^2
    B: MPoly


@dataclass(frozen=True)
class ImplicitSurface:
    F: MPoly  # in (x, y, z)
    symmetric: bool
    f: MPoly
    A: MPoly
    B: MPoly


@dataclass(frozen=True)
class LevelDecomposition:
    has_line_pair: bool
    g: Poly
    rational_radii_squared: tuple[Fraction, ...]


def _linear_in(var: str, den: Poly, num: Poly) -> list[MPoly]:
    """Coefficients in t of ``var * den(t) - num(t)`` over Q[y, z]."""
    v = MPoly.var(YZ, var)
    n = max(den.degree, num.degree)
    return [v * den[k] - num[k] for k in range(n + 1)]


def implicitize_profile(pc: ProfileCurve) -> ImplicitProfile:
    """Defining polynomial of the profile curve, normalized to be unique.

    ``f`` is the primitive squarefree part of Res_t(y p2 - p1, z q2 - q1)
    with positive leading coefficient in lex order y > z.
    """
    res = resultant(_linear_in("y", pc.p2, pc.p1), _linear_in("z", pc.q2, pc.q1))
    if res.is_zero():
        raise AssertionError(f"vanishing resultant for proper profile {pc}")
    f = squarefree_bivariate(res, "y", "z").integer_primitive()
    return ImplicitProfile(f)


def ab_split(f: ImplicitProfile | MPoly) -> ABSplit:
    """Write f(y, z) = A(y^2, z) + y B(y^2, z)."""
    f = f.f if isinstance(f, ImplicitProfile) else f
    a, b = {}, {}
    for (ey, ez), c in f.terms.items():
        if ey % 2 == 0:
            a[(ey // 2, ez)] = c
        else:
            b[((ey - 1) // 2, ez)] = c
    return ABSplit(MPoly(UZ, a), MPoly(UZ, b))


def surface_from_profile(f: ImplicitProfile) -> ImplicitSurface:
    split = ab_split(f)
    x, y = MPoly.var(XYZ, "x"), MPoly.var(XYZ, "y")
    rho = x * x + y * y
    A = split.A.substitute(XYZ, {"u": rho})
    if split.B.is_zero():
        F = A
    else:
        B = split.B.substitute(XYZ, {"u": rho})
        F = A * A - rho * B * B
    return ImplicitSurface(F, split.B.is_zero(), f.f, split.A, split.B)


def implicit_surface(pc: ProfileCurve) -> ImplicitSurface:
    return surface_from_profile(implicitize_profile(pc))


def on_surface(S: ImplicitSurface, P) -> bool:
    return S.F(*(Fraction(c) for c in P)) == 0


def reachable(pc: ProfileCurve, P) -> bool:
    """Whether P = (x, y, z) with rational coordinates is hit by the surface map
    for some complex (s, t).

    With rho = x^2 + y^2 the circle through parameter t has radius^2 p(t)^2,
    and that circle misses only its point (0, -p(t), q(t)).
    """
    x, y, z = (Fraction(c) for c in P)
    zq = pc.q2 * z - pc.q1
    rho = x * x + y * y
    if rho == 0:
        return poly_gcd(pc.p1, zq).degree > 0
    if poly_gcd(pc.p1 * pc.p1 - pc.p2 * pc.p2 * rho, zq).degree == 0:
        return False
    if x != 0:
        return True
    return poly_gcd(pc.p2 * y - pc.p1, zq).degree > 0


def level_decomposition(S: ImplicitSurface, c) -> LevelDecomposition:
    """Cross-section of the surface by the plane z = c, in terms of lam = x^2 + y^2."""
    c = Fraction(c)
    a = S.A.partial_eval("z", c).to_univariate("u")
    if S.symmetric:
        g = a
    else:
        b = S.B.partial_eval("z", c).to_univariate("u")
        g = a * a - Poly((0, 1)) * b * b
    if g.is_zero():
        raise DegenerateLevel(f"level polynomial vanishes identically at z={c}")
    radii = sorted({r for r in rational_roots(g) if r > 0}) if g.degree > 0 else []
    return LevelDecomposition(g.degree > 0 and g[0] == 0, g, tuple(radii))


def axis_levels(f: ImplicitProfile | MPoly) -> Poly:
    """Squarefree monic f(0, z): its roots are the heights where the curve meets the axis."""
    f = f.f if isinstance(f, ImplicitProfile) else f
    f0 = f.partial_eval("y", 0).to_univariate("z")
    if f0.is_zero():
        raise AxisContained("the profile curve contains the z-axis")
    return squarefree_part(f0)
