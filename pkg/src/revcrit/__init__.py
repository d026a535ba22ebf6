"""Critical (missing) sets of rational surface-of-revolution parametrizations."""

from revcrit.coverage import (
    Circle,
    ComplexCriticalSet,
    Kind,
    RealCriticalSet,
    circle_eval,
    complex_critical_set,
    corollary_shortcut,
    real_critical_set,
    surface_eval,
)
from revcrit.oracle import (
    ab_split,
    axis_levels,
    implicit_surface,
    implicitize_profile,
    level_decomposition,
    on_surface,
    reachable,
)
from revcrit.profile import (
    DegenerateAxis,
    DegenerateLine,
    NotProper,
    ProfileCurve,
    ProfileError,
    check_proper,
    eval_profile,
    is_symmetric,
    limit_at_infinity,
    make_profile,
    mirror,
    normality,
    point_on_curve,
)
from revcrit.ratexpr import RationalFunction, format_ratfunc, parse_ratfunc

__version__ = "0.1.0"


def parse_profile(p: str, q: str, check: bool = True) -> ProfileCurve:
    """Parse two expressions in ``t`` and build a validated profile."""
    return make_profile(parse_ratfunc(p), parse_ratfunc(q), check_proper_=check)


__all__ = [
    "__version__",
    "ab_split",
    "axis_levels",
    "check_proper",
    "Circle",
    "circle_eval",
    "complex_critical_set",
    "ComplexCriticalSet",
    "corollary_shortcut",
    "DegenerateAxis",
    "DegenerateLine",
    "eval_profile",
    "format_ratfunc",
    "implicit_surface",
    "implicitize_profile",
    "is_symmetric",
    "Kind",
    "level_decomposition",
    "limit_at_infinity",
    "make_profile",
    "mirror",
    "normality",
    "NotProper",
    "on_surface",
    "parse_profile",
    "parse_ratfunc",
    "point_on_curve",
    "ProfileCurve",
    "ProfileError",
    "RationalFunction",
    "reachable",
    "real_critical_set",
    "RealCriticalSet",
    "surface_eval",
]
