"""Rational functions in ``t``: canonical values, a text parser and a printer.

Grammar (whitespace ignored)::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := '-' unary | '+' unary | power
    power   := atom ('^' exponent)?
    exponent:= INT ('^' exponent)?
    atom    := INT | 't' | '(' expr ')'

``^`` binds tighter than unary minus, so ``-t^2`` is ``-(t^2)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from revcrit.exactpoly import Poly, poly_gcd
from revcrit.exactpoly.poly import format_poly


class ExpressionError(ValueError):
    """Bad expression text."""


class ExprSyntaxError(ExpressionError):
    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}: {text!r}")


class ZeroDenominatorError(ExpressionError, ZeroDivisionError):
    pass


class PoleError(ZeroDivisionError):
    """A rational function was evaluated at a root of its denominator."""

    def __init__(self, message: str, which: str | None = None):
        self.which = which
        super().__init__(message)


@dataclass(frozen=True)
class RationalFunction:
    """Reduced quotient ``num/den``.

    Canonical form: integer coefficients with no common factor across
    numerator and denominator, ``gcd(num, den) = 1`` and positive leading
    coefficient of ``den``. Build through :meth:`make` to get it.
    """

    num: Poly
    den: Poly

    @classmethod
    def make(cls, num: Poly, den: Poly | None = None) -> RationalFunction:
        if den is None:
            den = Poly((1,))
        if den.is_zero():
            raise ZeroDenominatorError("denominator is identically zero")
        if num.is_zero():
            return cls(Poly(), Poly((1,)))
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num.exact_div(g), den.exact_div(g)
        scale = 1
        for c in num.coeffs + den.coeffs:
            scale = scale * c.denominator // math.gcd(scale, c.denominator)
        n = [int(c * scale) for c in num.coeffs]
        d = [int(c * scale) for c in den.coeffs]
        content = 0
        for x in n + d:
            content = math.gcd(content, x)
        if d[-1] < 0:
            content = -content
        return cls(Poly([x // content for x in n]), Poly([x // content for x in d]))

    @classmethod
    def constant(cls, c) -> RationalFunction:
        return cls.make(Poly((c,)))

    @property
    def degree(self) -> int:
        """max(deg num, deg den)."""
        return max(self.num.degree, self.den.degree)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def __call__(self, t0):
        d = self.den(t0)
        if d == 0:
            raise PoleError(f"pole of {format_ratfunc(self)} at t={t0}")
        return Fraction(self.num(t0)) / d if isinstance(d, (int, Fraction)) else self.num(t0) / d

    def __neg__(self) -> RationalFunction:
        return RationalFunction(-self.num, self.den)

    def __add__(self, other: RationalFunction) -> RationalFunction:
        return RationalFunction.make(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: RationalFunction) -> RationalFunction:
        return self + (-other)

    def __mul__(self, other: RationalFunction) -> RationalFunction:
        return RationalFunction.make(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: RationalFunction) -> RationalFunction:
        if other.is_zero():
            raise ZeroDenominatorError("division by an expression that is identically zero")
        return RationalFunction.make(self.num * other.den, self.den * other.num)

    def __pow__(self, k: int) -> RationalFunction:
        return RationalFunction(self.num**k, self.den**k)

    def __str__(self) -> str:
        return format_ratfunc(self)


def _is_single_term(p: Poly) -> bool:
    return sum(1 for c in p.coeffs if c) == 1


def format_ratfunc(rf: RationalFunction) -> str:
    """Canonical text: descending powers, explicit ``*``, parenthesized compound parts."""
    num = format_poly(rf.num.coeffs, "t")
    if rf.den == Poly((1,)):
        return num
    den = format_poly(rf.den.coeffs, "t")
    if not _is_single_term(rf.num):
        num = f"({num})"
    if not (rf.den.degree == 0 or (_is_single_term(rf.den) and rf.den.lc == 1)):
        den = f"({den})"
    return f"{num}/{den}"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: int | None = None):
        raise ExprSyntaxError(message, self.text, self.pos if pos is None else pos)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def parse(self) -> RationalFunction:
        if not self.text.strip():
            self.error("empty expression")
        value = self.expr()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return value

    def expr(self) -> RationalFunction:
        value = self.term()
        while True:
            if self.take("+"):
                value = value + self.term()
            elif self.take("-"):
                value = value - self.term()
            else:
                return value

    def term(self) -> RationalFunction:
        value = self.unary()
        while True:
            if self.take("*"):
                value = value * self.unary()
            elif self.peek() == "/":
                at = self.pos
                self.pos += 1
                rhs = self.unary()
                if rhs.is_zero():
                    raise ZeroDenominatorError(
                        f"division by zero at position {at}: {self.text!r}"
                    )
                value = value / rhs
            else:
                return value

    def unary(self) -> RationalFunction:
        if self.take("-"):
            return -self.unary()
        if self.take("+"):
            return self.unary()
        return self.power()

    def power(self) -> RationalFunction:
        base = self.atom()
        if self.take("^"):
            return base ** self.exponent()
        return base

    def exponent(self) -> int:
        if self.peek() in ("-", "+"):
            self.error("exponents must be nonnegative integer literals")
        k = self.integer()
        if self.take("^"):
            k = k ** self.exponent()
        return k

    def atom(self) -> RationalFunction:
        ch = self.peek()
        if ch.isdigit():
            value = RationalFunction.constant(self.integer())
            if self.peek() == ".":
                self.error("floating-point literals are not supported")
            return value
        if ch == "t":
            self.pos += 1
            if self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
                self.error("unknown identifier", self.pos - 1)
            return RationalFunction.make(Poly((0, 1)))
        if ch == "(":
            self.pos += 1
            value = self.expr()
            if not self.take(")"):
                self.error("expected ')'")
            return value
        if ch.isalpha() or ch == "_":
            self.error(f"unknown variable {ch!r} (only t is allowed)")
        if not ch:
            self.error("unexpected end of expression")
        self.error(f"unexpected {ch!r}")


def parse_ratfunc(text: str) -> RationalFunction:
    return _Parser(text).parse()
