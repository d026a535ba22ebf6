"""Polynomials in a main variable with coefficients in Q[s] (recursive dense form).

Only what the package needs: gcd over Q(s), primitive parts, and the
squarefree part of a bivariate polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from revcrit.exactpoly.gcd import poly_gcd, squarefree_part
from revcrit.exactpoly.mpoly import MPoly
from revcrit.exactpoly.poly import Poly

BiPoly = list[Poly]  # coefficient of t^k at index k, each a Poly in s


def trim(f: Sequence[Poly]) -> BiPoly:
    f = list(f)
    while f and f[-1].is_zero():
        f.pop()
    return f


def content(f: BiPoly) -> Poly:
    g = Poly()
    for c in f:
        g = poly_gcd(g, c)
        if g.degree == 0:
            break
    return g


def primitive_part(f: BiPoly) -> BiPoly:
    f = trim(f)
    if not f:
        return f
    c = content(f)
    out = [x.exact_div(c) for x in f]
    lc = out[-1].lc
    return [x * (1 / lc) for x in out]


def pseudo_rem(f: BiPoly, g: BiPoly) -> BiPoly:
    """``lc(g)^(deg f - deg g + 1) * f mod g`` without leaving Q[s]."""
    r = trim(f)
    g = trim(g)
    dg = len(g) - 1
    lg = g[-1]
    delta = len(r) - 1 - dg
    if delta < 0:
        return r
    for _ in range(delta + 1):
        if len(r) - 1 < dg:
            r = [c * lg for c in r]
            continue
        shift = len(r) - 1 - dg
        lr = r[-1]
        r = [c * lg for c in r]
        for j in range(dg + 1):
            r[shift + j] = r[shift + j] - lr * g[j]
        r = trim(r)
    return r


def gcd_over_field(f: BiPoly, g: BiPoly) -> BiPoly:
    """gcd in Q(s)[t], returned primitive in Q[s][t] with monic leading coefficient."""
    f, g = trim(f), trim(g)
    if not f:
        return primitive_part(g)
    if not g:
        return primitive_part(f)
    f, g = primitive_part(f), primitive_part(g)
    if len(f) < len(g):
        f, g = g, f
    while g:
        if len(g) == 1:
            return [Poly((1,))]
        r = pseudo_rem(f, g)
        f, g = g, primitive_part(r)
    return f


def degree_t(f: BiPoly) -> int:
    return len(trim(f)) - 1


def derivative_t(f: BiPoly) -> BiPoly:
    return trim([c * k for k, c in enumerate(f)][1:])


def exact_quotient(f: BiPoly, g: BiPoly) -> BiPoly:
    """``f / g`` in Q[s][t], assuming ``lc(g)`` divides exactly at each step."""
    r = trim(f)
    g = trim(g)
    dg = len(g) - 1
    q = [Poly()] * max(len(r) - dg, 0)
    while r and len(r) - 1 >= dg:
        shift = len(r) - 1 - dg
        c = r[-1].exact_div(g[-1])
        q[shift] = c
        for j in range(dg + 1):
            r[shift + j] = r[shift + j] - c * g[j]
        r = trim(r)
    if r:
        raise ArithmeticError("bivariate division is not exact")
    return trim(q)


def from_mpoly(f: MPoly, main: str, other: str) -> BiPoly:
    coeffs = f.coefficients_in(main)
    n = max(coeffs) if coeffs else -1
    out = []
    for k in range(n + 1):
        c = coeffs.get(k)
        out.append(c.to_univariate(other) if c is not None else Poly())
    return trim(out)


def to_mpoly(f: BiPoly, vars: Sequence[str], main: str, other: str) -> MPoly:
    vars = tuple(vars)
    im, io = vars.index(main), vars.index(other)
    terms: dict[tuple[int, ...], Fraction] = {}
    for k, c in enumerate(f):
        for j, v in enumerate(c.coeffs):
            e = [0] * len(vars)
            e[im], e[io] = k, j
            terms[tuple(e)] = v
    return MPoly(vars, terms)


def squarefree_bivariate(f: MPoly, main: str, other: str) -> MPoly:
    """Squarefree part of a nonzero polynomial in exactly two variables."""
    bf = from_mpoly(f, main, other)
    cont = content(bf)
    pp = [c.exact_div(cont) for c in bf]
    if len(pp) > 1:
        g = gcd_over_field(pp, derivative_t(pp))
        pp = exact_quotient(pp, g) if len(g) > 1 else pp
    cont_sq = squarefree_part(cont)
    return to_mpoly([c * cont_sq for c in pp], f.vars, main, other)
