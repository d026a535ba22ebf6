"""Univariate gcd over Q via modular images and Chinese remaindering.

Images are computed by the GF(p) kernel (compiled when available). The
result is always certified by exact trial division over Z, so the answer
never depends on a lucky choice of primes.
"""

from __future__ import annotations

import math
import threading

from revcrit import kernels
from revcrit.exactpoly.poly import DomainError, Poly


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for n < 3.4e14
    for a in (2, 3, 5, 7, 11, 13, 17):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_PRIMES: list[int] = []
_PRIMES_LOCK = threading.Lock()


def primes():
    """Primes below 2**31, descending, generated lazily and cached."""
    i = 0
    while True:
        if i >= len(_PRIMES):
            with _PRIMES_LOCK:
                if i >= len(_PRIMES):
                    n = _PRIMES[-1] - 2 if _PRIMES else 2**31 - 1
                    while not _is_prime(n):
                        n -= 2
                    _PRIMES.append(n)
        yield _PRIMES[i]
        i += 1


def _int_divides(a: list[int], d: list[int]) -> bool:
    """True iff the integer polynomial ``d`` divides ``a`` in Z[t] (d primitive)."""
    rem = list(a)
    dd = len(d) - 1
    lc = d[-1]
    for k in range(len(rem) - 1 - dd, -1, -1):
        top = rem[k + dd]
        if top:
            c, r = divmod(top, lc)
            if r:
                return False
            for j in range(dd + 1):
                rem[k + j] -= c * d[j]
    return not any(rem[:dd])


def _symmetric(x: int, m: int) -> int:
    x %= m
    return x - m if x > m // 2 else x


def int_poly_gcd(a: list[int], b: list[int], gcd_modp=None) -> list[int]:
    """Primitive gcd with positive leading coefficient of two nonzero primitive integer polys."""
    if gcd_modp is None:
        gcd_modp = kernels.gcd_modp
    if len(a) == 1 or len(b) == 1:
        return [1]
    lca, lcb = a[-1], b[-1]
    gamma = math.gcd(lca, lcb)
    bound = min(len(a), len(b)) - 1
    image: list[int] | None = None
    modulus = 1
    for p in primes():
        if lca % p == 0 or lcb % p == 0:
            continue
        g = gcd_modp(a, b, p)
        dg = len(g) - 1
        if dg == 0:
            return [1]
        if dg > bound:
            continue
        if dg < bound or image is None:
            bound = dg
            image = [_symmetric(gamma * c, p) for c in g]
            modulus = p
            continue
        inv = kernels.inv_modp(modulus % p, p)
        new_mod = modulus * p
        merged = []
        for h, r in zip(image, g):
            r = gamma * r % p
            merged.append(_symmetric(h + modulus * ((r - h) * inv % p), new_mod))
        stable = merged == image
        image, modulus = merged, new_mod
        if stable:
            cont = 0
            for c in image:
                cont = math.gcd(cont, c)
            cand = [c // cont for c in image]
            if cand[-1] < 0:
                cand = [-c for c in cand]
            if _int_divides(a, cand) and _int_divides(b, cand):
                return cand
    raise AssertionError("unreachable")


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; ``gcd(a, 0) = monic(a)`` and ``gcd(0, 0) = 0``."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    return Poly(int_poly_gcd(a.integer_primitive(), b.integer_primitive())).monic()


def gcd_degree(a: Poly, b: Poly) -> int:
    return poly_gcd(a, b).degree


def squarefree_part(a: Poly) -> Poly:
    """Monic ``a / gcd(a, a')``."""
    if a.is_zero():
        raise DomainError("squarefree part of the zero polynomial")
    if a.degree == 0:
        return Poly((1,))
    return a.exact_div(poly_gcd(a, a.derivative())).monic()
