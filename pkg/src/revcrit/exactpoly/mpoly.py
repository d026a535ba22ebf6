"""Sparse multivariate polynomials over Q on a fixed, named variable set."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Mapping, Sequence

from revcrit.exactpoly.poly import Poly, format_term, join_terms

Exps = tuple[int, ...]


class MPoly:
    """Immutable map from exponent tuples to nonzero ``Fraction`` coefficients.

    ``vars`` fixes the variable names and their lex order (first is largest).
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Sequence[str], terms: Mapping[Exps, object] | None = None):
        vs = tuple(vars)
        clean: dict[Exps, Fraction] = {}
        for e, c in (terms or {}).items():
            if len(e) != len(vs):
                raise ValueError(f"exponent {e} does not match variables {vs}")
            c = c if isinstance(c, Fraction) else Fraction(c)
            if c:
                clean[tuple(e)] = c
        object.__setattr__(self, "vars", vs)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MPoly is immutable")

    # construction helpers

    @classmethod
    def zero(cls, vars: Sequence[str]) -> MPoly:
        return cls(vars)

    @classmethod
    def const(cls, vars: Sequence[str], c) -> MPoly:
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def var(cls, vars: Sequence[str], name: str) -> MPoly:
        vars = tuple(vars)
        e = [0] * len(vars)
        e[vars.index(name)] = 1
        return cls(vars, {tuple(e): 1})

    @classmethod
    def from_univariate(cls, vars: Sequence[str], name: str, p: Poly) -> MPoly:
        vars = tuple(vars)
        i = vars.index(name)
        terms = {}
        for k, c in enumerate(p.coeffs):
            e = [0] * len(vars)
            e[i] = k
            terms[tuple(e)] = c
        return cls(vars, terms)

    # queries

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def degree(self, name: str | None = None) -> int:
        if not self.terms:
            return -1
        if name is None:
            return max(sum(e) for e in self.terms)
        i = self.vars.index(name)
        return max(e[i] for e in self.terms)

    def leading(self) -> tuple[Exps, Fraction]:
        """Lex-leading exponent and coefficient."""
        e = max(self.terms)
        return e, self.terms[e]

    def __eq__(self, other) -> bool:
        if isinstance(other, MPoly):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MPoly.const(self.vars, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.vars, frozenset(self.terms.items())))

    # arithmetic

    def _coerce(self, other) -> MPoly:
        if isinstance(other, MPoly):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch {self.vars} vs {other.vars}")
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.const(self.vars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MPoly(self.vars, out)

    __radd__ = __add__

    def __neg__(self) -> MPoly:
        return MPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MPoly(self.vars, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exps, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MPoly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> MPoly:
        if n < 0:
            raise ValueError("negative exponent")
        result, base = MPoly.const(self.vars, 1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def exact_div(self, other: MPoly) -> MPoly:
        """Quotient ``self / other``; raises ``ArithmeticError`` unless exact."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        le, lc = other.leading()
        rem = dict(self.terms)
        quot: dict[Exps, Fraction] = {}
        while rem:
            e = max(rem)
            shift = tuple(a - b for a, b in zip(e, le))
            if min(shift) < 0:
                raise ArithmeticError("multivariate division is not exact")
            c = rem[e] / lc
            quot[shift] = c
            for oe, oc in other.terms.items():
                te = tuple(a + b for a, b in zip(oe, shift))
                v = rem.get(te, 0) - c * oc
                if v:
                    rem[te] = v
                else:
                    rem.pop(te, None)
        return MPoly(self.vars, quot)

    # evaluation and substitution

    def __call__(self, *values):
        if len(values) != len(self.vars):
            raise ValueError(f"expected {len(self.vars)} values")
        total = 0
        for e, c in self.terms.items():
            term = c
            for v, k in zip(values, e):
                if k:
                    term = term * v**k
            total = total + term
        return total

    def partial_eval(self, name: str, value) -> MPoly:
        """Substitute a scalar for one variable, keeping the variable set."""
        i = self.vars.index(name)
        out: dict[Exps, Fraction] = {}
        for e, c in self.terms.items():
            k = e[i]
            ne = e[:i] + (0,) + e[i + 1:]
            out[ne] = out.get(ne, 0) + c * Fraction(value) ** k
        return MPoly(self.vars, out)

    def substitute(self, new_vars: Sequence[str], images: Mapping[str, MPoly]) -> MPoly:
        """Compose: each old variable maps to an ``MPoly`` over ``new_vars``.

        Variables absent from ``images`` must also appear in ``new_vars``.
        """
        new_vars = tuple(new_vars)
        imgs = [images[v] if v in images else MPoly.var(new_vars, v) for v in self.vars]
        cache: list[dict[int, MPoly]] = [{0: MPoly.const(new_vars, 1), 1: im} for im in imgs]

        def power(i: int, k: int) -> MPoly:
            if k not in cache[i]:
                cache[i][k] = power(i, k - 1) * imgs[i]
            return cache[i][k]

        total = MPoly.zero(new_vars)
        for e, c in self.terms.items():
            term = MPoly.const(new_vars, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            total = total + term
        return total

    def coefficients_in(self, name: str) -> dict[int, MPoly]:
        """Split into ``{k: coefficient of name^k}`` with the same variable set."""
        i = self.vars.index(name)
        out: dict[int, dict[Exps, Fraction]] = {}
        for e, c in self.terms.items():
            out.setdefault(e[i], {})[e[:i] + (0,) + e[i + 1:]] = c
        return {k: MPoly(self.vars, t) for k, t in out.items()}

    def to_univariate(self, name: str) -> Poly:
        """View as a ``Poly`` in ``name``; every other variable must be absent."""
        i = self.vars.index(name)
        n = self.degree(name)
        cs = [Fraction(0)] * (n + 1)
        for e, c in self.terms.items():
            if any(k for j, k in enumerate(e) if j != i):
                raise ValueError(f"{self} is not univariate in {name}")
            cs[e[i]] = c
        return Poly(cs)

    def integer_primitive(self) -> MPoly:
        """Primitive integer associate with positive lex-leading coefficient."""
        if not self.terms:
            return self
        den = 1
        for c in self.terms.values():
            den = den * c.denominator // math.gcd(den, c.denominator)
        ints = {e: c.numerator * (den // c.denominator) for e, c in self.terms.items()}
        g = 0
        for v in ints.values():
            g = math.gcd(g, v)
        if ints[max(ints)] < 0:
            g = -g
        return MPoly(self.vars, {e: Fraction(v // g) for e, v in ints.items()})

    # display

    def sorted_terms(self) -> list[tuple[Exps, Fraction]]:
        """Terms by descending total degree, ties broken by lex order."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def to_str(self) -> str:
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k
            )
            parts.append(format_term(c, mono))
        return join_terms(parts)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"MPoly({self.vars}, {self.to_str()!r})"
