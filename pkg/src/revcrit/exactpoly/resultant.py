"""Sylvester resultants with fraction-free (Bareiss) elimination."""

from __future__ import annotations

from typing import Sequence

from revcrit.exactpoly.mpoly import MPoly


def _trim(cs: Sequence[MPoly]) -> list[MPoly]:
    cs = list(cs)
    while cs and cs[-1].is_zero():
        cs.pop()
    return cs


def sylvester_matrix(a: Sequence[MPoly], b: Sequence[MPoly]) -> list[list[MPoly]]:
    """Sylvester matrix of two polynomials in an eliminated variable.

    ``a`` and ``b`` are coefficient lists, lowest degree first, with nonzero
    leading entries.
    """
    m, n = len(a) - 1, len(b) - 1
    zero = MPoly.zero(a[0].vars)
    size = m + n
    rows = []
    for i in range(n):
        rows.append([zero] * i + list(reversed(a)) + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + list(reversed(b)) + [zero] * (size - n - 1 - i))
    return rows


def bareiss_det(matrix: list[list[MPoly]]) -> MPoly:
    """Determinant by Bareiss fraction-free elimination; every division is exact."""
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    vars_ = matrix[0][0].vars
    m = [list(row) for row in matrix]
    sign = 1
    prev = MPoly.const(vars_, 1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return MPoly.zero(vars_)
        piv = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                num = piv * row_i[j] - mik * row_k[j]
                row_i[j] = num.exact_div(prev) if num else num
            row_i[k] = MPoly.zero(vars_)
        prev = piv
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def resultant(a: Sequence[MPoly], b: Sequence[MPoly]) -> MPoly:
    """``Res_t(a, b)`` for coefficient lists in ``t`` (lowest first) over a common ``MPoly`` ring."""
    a, b = _trim(a), _trim(b)
    if not a or not b:
        raise ValueError("resultant needs nonzero polynomials")
    m, n = len(a) - 1, len(b) - 1
    if m == 0 and n == 0:
        return MPoly.const(a[0].vars, 1)
    if m == 0:
        return a[0] ** n
    if n == 0:
        return b[0] ** m
    return bareiss_det(sylvester_matrix(a, b))
