"""Sparse multivariate polynomials over Q, used for parametric identities.

A polynomial is a mapping from exponent tuples to coefficients over a fixed
ordered tuple of variable names.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping


class MPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, variables: tuple[str, ...], terms: Mapping[tuple[int, ...], int | Fraction] = ()):
        self.vars = tuple(variables)
        clean = {}
        for e, c in dict(terms).items():
            if c:
                clean[tuple(e)] = Fraction(c)
        self.terms = clean

    @classmethod
    def var(cls, variables, name: str) -> MPoly:
        e = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {e: 1})

    @classmethod
    def const(cls, variables, c) -> MPoly:
        return cls(variables, {(0,) * len(variables): c})

    def _coerce(self, other) -> MPoly:
        if isinstance(other, MPoly):
            if other.vars != self.vars:
                raise ValueError("variable sets differ")
            return other
        return MPoly.const(self.vars, other)

    def __add__(self, other) -> MPoly:
        o = self._coerce(other)
        t = dict(self.terms)
        for e, c in o.terms.items():
            t[e] = t.get(e, 0) + c
        return MPoly(self.vars, t)

    __radd__ = __add__

    def __neg__(self) -> MPoly:
        return MPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> MPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> MPoly:
        return self._coerce(other) - self

    def __mul__(self, other) -> MPoly:
        o = self._coerce(other)
        t: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return MPoly(self.vars, t)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> MPoly:
        out = MPoly.const(self.vars, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, MPoly):
            other = self._coerce(other)
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def degree_in(self, name: str) -> int:
        i = self.vars.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def coefficient_in(self, name: str, k: int) -> MPoly:
        """Coefficient of name**k, as a polynomial in the same variables."""
        i = self.vars.index(name)
        t = {}
        for e, c in self.terms.items():
            if e[i] == k:
                e2 = list(e)
                e2[i] = 0
                t[tuple(e2)] = c
        return MPoly(self.vars, t)

    def evaluate(self, **values) -> MPoly | Fraction:
        """Substitute numbers for some variables; returns a scalar when all are bound."""
        t: dict = {}
        for e, c in self.terms.items():
            v = c
            e2 = list(e)
            for i, name in enumerate(self.vars):
                if name in values:
                    v *= Fraction(values[name]) ** e[i]
                    e2[i] = 0
            t[tuple(e2)] = t.get(tuple(e2), 0) + v
        out = MPoly(self.vars, t)
        if all(name in values for name in self.vars):
            return out.terms.get((0,) * len(self.vars), Fraction(0))
        return out

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"{v}^{k}" if k > 1 else v for v, k in zip(self.vars, e) if k)
            parts.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(parts)
