"""Univariate polynomials with exact rational coefficients.

Coefficients are stored in ascending order of degree as ``Fraction`` values.
Instances are immutable and hashable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import DomainError

Number = int | Fraction


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"exact coefficient required, got {type(c).__name__}")


class Poly:
    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable[Number] = (), var: str = "x"):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self.var = var

    # construction helpers
    @classmethod
    def x(cls, var: str = "x") -> Poly:
        return cls([0, 1], var)

    @classmethod
    def const(cls, c: Number, var: str = "x") -> Poly:
        return cls([c], var)

    @classmethod
    def from_roots(cls, roots: Sequence[Number], var: str = "x") -> Poly:
        p = cls([1], var)
        for r in roots:
            p = p * cls([-_frac(r), 1], var)
        return p

    # basic properties
    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise DomainError("polynomial has non-integer coefficients")
        return [c.numerator for c in self.coeffs]

    def monic(self) -> Poly:
        if self.is_zero():
            raise DomainError("zero polynomial has no monic associate")
        lc = self.lc
        return Poly([c / lc for c in self.coeffs], self.var)

    def primitive(self) -> Poly:
        """Integer-coefficient associate with content 1 and positive lc."""
        if self.is_zero():
            return self
        from math import gcd, lcm

        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [(c * den).numerator for c in self.coeffs]
        g = gcd(*ints)
        if ints[-1] < 0:
            g = -g
        return Poly([i // g for i in ints], self.var)

    # arithmetic
    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            return other
        return Poly([other], self.var)

    def __add__(self, other) -> Poly:
        o = self._coerce(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly([self[k] + o[k] for k in range(n)], self.var)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly([-c for c in self.coeffs], self.var)

    def __sub__(self, other) -> Poly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Poly:
        return self._coerce(other) - self

    def __mul__(self, other) -> Poly:
        o = self._coerce(other)
        if self.is_zero() or o.is_zero():
            return Poly([], self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return Poly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Poly:
        if e < 0:
            raise ValueError("negative exponent")
        result, base = Poly([1], self.var), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other) -> tuple[Poly, Poly]:
        o = self._coerce(other)
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = o.degree
        if len(rem) - 1 < dq:
            return Poly([], self.var), self
        quo = [Fraction(0)] * (len(rem) - dq)
        inv = 1 / o.lc
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] * inv
            quo[k - dq] = c
            if c:
                for j, b in enumerate(o.coeffs):
                    rem[k - dq + j] -= c * b
        return Poly(quo, self.var), Poly(rem[:dq], self.var)

    def __floordiv__(self, other) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other) -> Poly:
        return divmod(self, other)[1]

    def exact_div(self, other) -> Poly:
        q, r = divmod(self, other)
        if not r.is_zero():
            raise DomainError("division is not exact")
        return q

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # evaluation and calculus
    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def eval_int_scaled(self, m: int, k: int) -> Fraction:
        """Exact value at the dyadic point m / 2**k (Horner over integers)."""
        d = self.degree
        if d < 0:
            return Fraction(0)
        from math import lcm

        den = lcm(*(c.denominator for c in self.coeffs))
        acc = 0
        for j, c in enumerate(reversed(self.coeffs)):
            acc = acc * m + (c * den).numerator * (1 << (k * j))
        return Fraction(acc, den << (k * d))

    def sign_at(self, t: Fraction) -> int:
        v = self(t)
        return (v > 0) - (v < 0)

    def derivative(self) -> Poly:
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:], self.var)

    def compose(self, q: Poly) -> Poly:
        acc = Poly([], q.var)
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def shift(self, a: Number) -> Poly:
        """p(x + a)."""
        return self.compose(Poly([a, 1], self.var))

    def reciprocal(self) -> Poly:
        """x**deg * p(1/x)."""
        return Poly(reversed(self.coeffs), self.var)

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]!r}, var={self.var!r})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = self.var if k == 1 else f"{self.var}^{k}"
                body = mono if a == 1 else f"{a}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd over Q (zero if both are zero)."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a if a.is_zero() else a.monic()


def _check_nonzero(p: Poly, q: Poly) -> None:
    if p.is_zero() or q.is_zero():
        raise DomainError("resultant of the zero polynomial is undefined")


def resultant_euclid(p: Poly, q: Poly) -> Fraction:
    _check_nonzero(p, q)
    res = Fraction(1)
    a, b = p, q
    while True:
        da, db = a.degree, b.degree
        if db == 0:
            return res * b.lc**da
        r = a % b
        if r.is_zero():
            return Fraction(0)
        if (da * db) % 2:
            res = -res
        res *= b.lc ** (da - r.degree)
        a, b = b, r


def sylvester_matrix(p: Poly, q: Poly) -> list[list[Fraction]]:
    m, n = p.degree, q.degree
    size = m + n
    rows = []
    pc = list(reversed(p.coeffs))
    qc = list(reversed(q.coeffs))
    for i in range(n):
        rows.append([Fraction(0)] * i + pc + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + qc + [Fraction(0)] * (size - n - 1 - i))
    return rows


def det(matrix: Sequence[Sequence[Number]]) -> Fraction:
    """Determinant by Gaussian elimination over Q."""
    a = [[_frac(x) for x in row] for row in matrix]
    n = len(a)
    if n == 0:
        return Fraction(1)
    sign = 1
    d = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            sign = -sign
        pv = a[col][col]
        d *= pv
        for r in range(col + 1, n):
            f = a[r][col] / pv
            if f:
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
    return sign * d


def resultant_sylvester(p: Poly, q: Poly) -> Fraction:
    _check_nonzero(p, q)
    if p.degree == 0 and q.degree == 0:
        return Fraction(1)
    return det(sylvester_matrix(p, q))


def resultant(p: Poly, q: Poly, method: str = "euclid") -> Fraction:
    """Res(p, q) = lc(p)^deg q * prod over roots r of p of q(r).

    ``method`` selects the Euclidean remainder sequence (default) or the
    Sylvester determinant; the two are independent and agree exactly.
    """
    if method == "euclid":
        return resultant_euclid(p, q)
    if method == "sylvester":
        return resultant_sylvester(p, q)
    raise ValueError(f"unknown resultant method {method!r}")


def discriminant(p: Poly, method: str = "euclid") -> Fraction:
    """Classical discriminant (-1)^(d(d-1)/2) Res(p, p') / lc(p).

    Positive for a squarefree cubic exactly when all three roots are real.
    The Cardano quantity (q/2)^2 + (p/3)^3 of a depressed cubic equals
    -disc/108, so its sign is opposite.
    """
    d = p.degree
    if d < 2:
        raise DomainError("discriminant needs degree >= 2")
    r = resultant(p, p.derivative(), method)
    sgn = -1 if (d * (d - 1) // 2) % 2 else 1
    return sgn * r / p.lc


def is_squarefree(p: Poly) -> bool:
    return gcd(p, p.derivative()).degree == 0


def integer_content_poly(p: Poly) -> list[int]:
    """Integer coefficients of the primitive associate of p."""
    return p.primitive().int_coeffs()
