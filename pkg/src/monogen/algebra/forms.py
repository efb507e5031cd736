"""Homogeneous binary cubic forms with integer coefficients."""

from __future__ import annotations

from dataclasses import dataclass

from .poly import Poly


@dataclass(frozen=True)
class BivariateIntForm:
    """a*x^3 + b*x^2*y + c*x*y^2 + d*y^3."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for name in "abcd":
            if not isinstance(getattr(self, name), int):
                raise TypeError("form coefficients must be int")

    @property
    def coeffs(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __call__(self, x, y):
        return ((self.a * x + self.b * y) * x + self.c * y * y) * x + self.d * y * y * y

    def dehomogenize(self) -> Poly:
        """F(t, 1) as a polynomial in t."""
        return Poly([self.d, self.c, self.b, self.a], "t")

    def discriminant(self) -> int:
        a, b, c, d = self.coeffs
        return b * b * c * c - 4 * a * c**3 - 4 * b**3 * d - 27 * a * a * d * d + 18 * a * b * c * d

    def substitute(self, m: tuple[tuple[int, int], tuple[int, int]]) -> BivariateIntForm:
        """F(p*x + q*y, r*x + s*y) for m = ((p, q), (r, s))."""
        (p, q), (r, s) = m
        # expand by evaluating at four points and solving the Vandermonde system
        pts = [(1, 0), (0, 1), (1, 1), (1, -1)]
        vals = [self(p * x + q * y, r * x + s * y) for x, y in pts]
        a = vals[0]
        d = vals[1]
        # F(1,1) = a+b+c+d, F(1,-1) = a-b+c-d
        b_plus_c = vals[2] - a - d
        c_minus_b = vals[3] - a + d
        c = (b_plus_c + c_minus_b) // 2
        b = b_plus_c - c
        return BivariateIntForm(a, b, c, d)

    def has_rational_linear_factor(self) -> bool:
        """True when F factors over Q (a linear factor exists)."""
        if self.a == 0 or self.d == 0:
            return True
        from .roots import integer_roots

        # a^2 * F(u/a, 1) is monic in u; rational roots of F(t, 1) map to integer roots
        a = self.a
        monic = Poly([self.d * a * a, self.c * a, self.b, 1], "u")
        return bool(integer_roots(monic))

    def is_irreducible(self) -> bool:
        return not self.has_rational_linear_factor()

    def __str__(self) -> str:
        return str(self.dehomogenize()).replace("t", "x")

