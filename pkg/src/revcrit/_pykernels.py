"""Pure-Python versions of the compiled kernels in ``_ckernels.pyx``.

Both modules expose the same functions with identical semantics; ``kernels``
picks one at import time.
"""

from __future__ import annotations


def inv_modp(a: int, p: int) -> int:
    return pow(a % p, -1, p)


def gcd_modp(a: list[int], b: list[int], p: int) -> list[int]:
    """Monic gcd over GF(p) of two coefficient lists, lowest degree first.

    Coefficients may be arbitrary Python ints; they are reduced mod ``p``.
    Returns ``[]`` when both inputs vanish mod ``p``.
    """
    r0 = [x % p for x in a]
    r1 = [x % p for x in b]
    while r0 and r0[-1] == 0:
        r0.pop()
    while r1 and r1[-1] == 0:
        r1.pop()
    while r1:
        d1 = len(r1) - 1
        inv = pow(r1[d1], -1, p)
        while len(r0) > d1:
            c = r0[-1] * inv % p
            if c:
                shift = len(r0) - 1 - d1
                for i in range(d1):
                    r0[shift + i] = (r0[shift + i] - c * r1[i]) % p
            r0.pop()
            while r0 and r0[-1] == 0:
                r0.pop()
        r0, r1 = r1, r0
    if not r0:
        return []
    inv = pow(r0[-1], -1, p)
    return [x * inv % p for x in r0]
