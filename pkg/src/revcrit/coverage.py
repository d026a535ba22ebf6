"""Critical sets of the classical surface-of-revolution parametrization.

``real_critical_set`` returns one of four shapes: nothing, the profile's
critical point, the mirror curve, or the mirror curve plus the
cross-section circle through the critical point.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from revcrit.exactpoly import Poly, rational_roots
from revcrit.oracle import axis_levels, implicitize_profile
from revcrit.profile import (
    CriticalPointResult,
    ProfileCurve,
    eval_profile,
    is_symmetric,
    limit_at_infinity,
    mirror,
    normality,
    on_curve_closure,
    point_on_curve,
)

Point3 = tuple[Fraction, Fraction, Fraction]


class Kind(enum.Enum):
    EMPTY = "empty"
    SINGLE_POINT = "point"
    MIRROR_CURVE = "mirror"
    MIRROR_CURVE_AND_CIRCLE = "mirror_and_circle"


@dataclass(frozen=True)
class Circle:
    """Circle of radius |alpha| centred on the z-axis in the plane z = c."""

    alpha: Fraction
    c: Fraction


@dataclass(frozen=True)
class RealCriticalSet:
    kind: Kind
    point: Optional[Point3] = None
    mirror: Optional[ProfileCurve] = None
    circle: Optional[Circle] = None


@dataclass(frozen=True)
class ComplexCriticalSet:
    real: RealCriticalSet
    axis_levels: Poly  # squarefree J(z); the lines {x = +-i y, z = lam} sit at its roots

    @property
    def rational_levels(self) -> list[Fraction]:
        return rational_roots(self.axis_levels) if self.axis_levels.degree > 0 else []


def _rational_circle_point(s0) -> tuple[Fraction, Fraction]:
    s0 = Fraction(s0)
    d = 1 + s0 * s0
    return 2 * s0 / d, (1 - s0 * s0) / d


def surface_eval(pc: ProfileCurve, s0, t0) -> Point3:
    cs, cc = _rational_circle_point(s0)
    y, z = eval_profile(pc, t0)
    return cs * y, cc * y, z


def circle_eval(circle: Circle, s0) -> Point3:
    cs, cc = _rational_circle_point(s0)
    return cs * circle.alpha, cc * circle.alpha, circle.c


def real_critical_set(pc: ProfileCurve) -> RealCriticalSet:
    return critical_set_from(pc, is_symmetric(pc), normality(pc))


def critical_set_from(pc: ProfileCurve, symmetric: bool, crit: CriticalPointResult) -> RealCriticalSet:
    """Case analysis on precomputed symmetry and normality verdicts."""
    if symmetric:
        if crit.normal:
            return RealCriticalSet(Kind.EMPTY)
        return RealCriticalSet(Kind.SINGLE_POINT, point=crit.point)
    mir = mirror(pc)
    if crit.normal:
        return RealCriticalSet(Kind.MIRROR_CURVE, mirror=mir)
    _, b, c = crit.point
    # once b != 0, (0, -b, c) is not the critical point, so reachability
    # decides curve membership
    if b == 0 or point_on_curve(pc, -b, c):
        return RealCriticalSet(Kind.MIRROR_CURVE, mirror=mir)
    return RealCriticalSet(Kind.MIRROR_CURVE_AND_CIRCLE, mirror=mir, circle=Circle(b, c))


def corollary_shortcut(pc: ProfileCurve) -> bool:
    """Symmetric with a component whose numerator outgrows its denominator."""
    has_pole_at_infinity = limit_at_infinity(pc.p) is None or limit_at_infinity(pc.q) is None
    return has_pole_at_infinity and is_symmetric(pc)


def complex_critical_set(pc: ProfileCurve) -> ComplexCriticalSet:
    return ComplexCriticalSet(real_critical_set(pc), axis_levels(implicitize_profile(pc)))


def component_of(pc: ProfileCurve, rcs: RealCriticalSet, P) -> Optional[str]:
    """Name of the reported component holding P ("point", "mirror", "circle"), if any."""
    x, y, z = (Fraction(c) for c in P)
    if rcs.kind is Kind.SINGLE_POINT and (x, y, z) == rcs.point:
        return "point"
    if rcs.mirror is not None and x == 0 and on_curve_closure(pc, -y, z):
        return "mirror"
    if rcs.circle is not None and z == rcs.circle.c and x * x + y * y == rcs.circle.alpha ** 2:
        return "circle"
    return None


def contains(pc: ProfileCurve, rcs: RealCriticalSet, P) -> bool:
    return component_of(pc, rcs, P) is not None
