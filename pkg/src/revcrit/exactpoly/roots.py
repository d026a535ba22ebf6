"""Root utilities: exact rational roots and display-only numeric approximations."""

from __future__ import annotations

from fractions import Fraction

import mpmath

from revcrit.exactpoly.gcd import squarefree_part
from revcrit.exactpoly.poly import DomainError, Poly


class NumericError(ArithmeticError):
    """Numeric root finding failed to converge to the requested residual."""


def _sturm_chain(a: Poly) -> list[Poly]:
    chain = [a, a.derivative()]
    while chain[-1].degree > 0:
        r = chain[-2] % chain[-1]
        if r.is_zero():
            break
        chain.append(-r)
    return chain


def _variations(chain: list[Poly], x: Fraction) -> int:
    count, prev = 0, 0
    for p in chain:
        v = p(x)
        if v:
            if prev and (v > 0) != (prev > 0):
                count += 1
            prev = v
    return count


def real_root_intervals(a: Poly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals ``(lo, hi]`` each holding exactly one real root of squarefree ``a``.

    Degenerate intervals ``(r, r)`` mark exact rational roots hit during bisection.
    """
    if a.degree < 1:
        return []
    bound = 1 + max(abs(c / a.lc) for c in a.coeffs[:-1])
    chain = _sturm_chain(a)
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(-bound, bound, _variations(chain, -bound), _variations(chain, bound))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        n = vlo - vhi
        if n == 0:
            continue
        if n == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if a(mid) == 0:
            out.append((mid, mid))
            # nudge off the root so both halves keep nonzero endpoints
            eps = (hi - lo) / 2**20
            while a(mid - eps) == 0 or a(mid + eps) == 0 or \
                    _variations(chain, mid - eps) - _variations(chain, mid + eps) != 1:
                eps /= 2
            stack.append((lo, mid - eps, vlo, _variations(chain, mid - eps)))
            stack.append((mid + eps, hi, _variations(chain, mid + eps), vhi))
            continue
        vmid = _variations(chain, mid)
        stack.append((lo, mid, vlo, vmid))
        stack.append((mid, hi, vmid, vhi))
    return sorted(out)


def rational_roots(a: Poly) -> list[Fraction]:
    """All rational roots with multiplicity, ascending.

    A rational root n/d of the primitive integer form has d dividing the
    leading coefficient, so each real root is refined until that denominator
    bound pins down a unique candidate, which is then checked exactly.
    """
    if a.is_zero():
        raise DomainError("rational roots of the zero polynomial")
    sq = Poly(squarefree_part(a).integer_primitive())
    max_den = abs(int(sq.lc))
    found = []
    for lo, hi in real_root_intervals(sq):
        if lo == hi:
            found.append(lo)
            continue
        width = Fraction(1, 2 * max_den * max_den)
        while hi - lo >= width:
            mid = (lo + hi) / 2
            v = sq(mid)
            if v == 0:
                lo = hi = mid
                break
            if (v > 0) == (sq(hi) > 0):
                hi = mid
            else:
                lo = mid
        cand = ((lo + hi) / 2).limit_denominator(max_den)
        if sq(cand) == 0:
            found.append(cand)
    roots = []
    for r in found:
        lin = Poly((-r, 1))
        rest = a
        while True:
            q, rem = divmod(rest, lin)
            if rem:
                break
            roots.append(r)
            rest = q
    return sorted(roots)


def numeric_roots(a: Poly, tol: float = 1e-9, dps: int = 50) -> list[complex]:
    """Approximate complex roots by Durand-Kerner iteration (``mpmath.polyroots``).

    Display only: no decision procedure consumes these values.
    """
    if a.is_zero():
        raise DomainError("numeric roots of the zero polynomial")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if a.degree == 0:
        return []
    with mpmath.workdps(dps):
        coeffs = [mpmath.mpf(c.numerator) / c.denominator for c in reversed(a.coeffs)]
        try:
            roots = mpmath.polyroots(coeffs, maxsteps=400, extraprec=4 * dps)
        except mpmath.libmp.NoConvergence as exc:
            raise NumericError(f"root iteration did not converge for {a}") from exc
        out = []
        for r in roots:
            if abs(mpmath.polyval(coeffs, r)) >= tol:
                raise NumericError(f"residual above {tol} at root {r}")
            r = mpmath.mpc(r)
            out.append(complex(float(r.real), float(r.imag)))
    return sorted(out, key=lambda z: (round(z.real, 12), round(z.imag, 12)))
