"""Dense univariate polynomials over the rationals."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


class DomainError(ValueError):
    """Operation undefined for the given input (e.g. roots of the zero polynomial)."""


def _frac(x: Scalar) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class Poly:
    """Immutable dense polynomial with ``Fraction`` coefficients, lowest degree first.

    The zero polynomial has no coefficients and degree ``-1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def constant(cls, c: Scalar) -> Poly:
        return cls((c,))

    @classmethod
    def monomial(cls, c: Scalar, k: int) -> Poly:
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar]) -> Poly:
        out = cls((1,))
        for r in roots:
            out = out * cls((-_frac(r), 1))
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly((other,)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative exponent")
        result, base = Poly((1,)), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        if isinstance(other, (int, Fraction)):
            other = Poly((other,))
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        if len(rem) - 1 < db:
            return Poly(), self
        inv_lc = 1 / other.lc
        quot = [Fraction(0)] * (len(rem) - db)
        bc = other.coeffs
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db] * inv_lc
            quot[k] = c
            if c:
                for j in range(db + 1):
                    rem[k + j] -= c * bc[j]
        return Poly(quot), Poly(rem[:db])

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def exact_div(self, other: Poly) -> Poly:
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("polynomial division is not exact")
        return q

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> Poly:
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:])

    def monic(self) -> Poly:
        if not self.coeffs:
            return self
        inv = 1 / self.lc
        return Poly([c * inv for c in self.coeffs])

    def compose(self, inner: Poly) -> Poly:
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def integer_primitive(self) -> list[int]:
        """Integer coefficient list of the primitive associate with positive leading coefficient."""
        if not self.coeffs:
            return []
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        ints = [c.numerator * (den // c.denominator) for c in self.coeffs]
        g = 0
        for x in ints:
            g = math.gcd(g, x)
        if ints[-1] < 0:
            g = -g
        return [x // g for x in ints]

    def primitive(self) -> Poly:
        return Poly(self.integer_primitive())

    def to_str(self, var: str = "t") -> str:
        return format_poly(self.coeffs, var)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"Poly({self.to_str()!r})"


def format_scalar(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_term(c: Fraction, mono: str) -> str:
    """Signed text of ``c * mono``; ``mono`` empty for a constant term."""
    if not mono:
        return format_scalar(c)
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{format_scalar(c)}*{mono}"


def join_terms(terms: Sequence[str]) -> str:
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += t if t.startswith("-") else "+" + t
    return out


def format_poly(coeffs: Sequence[Fraction], var: str = "t") -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        terms.append(format_term(c, mono))
    return join_terms(terms)


X = Poly((0, 1))
