"""The totally real cubic field L = Q(alpha), g_n(alpha) = 0.

Elements are kept in the power basis (1, alpha, alpha^2) with rational
coordinates. The ring of integers is found prime by prime: Dedekind's
criterion certifies p-maximality of Z[alpha] where it can, otherwise the
order is enlarged by the ring of multipliers of its p-radical until stable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import lcm

from .algebra.arith import exact_isqrt, factorint
from .algebra.certified import certified_integer, enclose_roots, to_iv
from .algebra.forms import BivariateIntForm
from .algebra.linalg import charpoly, det, mat_inv
from .algebra.modular import fp_divmod, fp_gcd, fp_left_kernel, fp_radical, fp_reduce, hnf
from .algebra.poly import Poly, discriminant
from .algebra.roots import RootInterval, isolate_real_roots_cubic
from .errors import DomainError, InternalError
from .family import FamilyInstance, build_instance


@dataclass(frozen=True)
class CubicElement:
    """c0 + c1*alpha + c2*alpha^2 in Q[x]/(g)."""

    coords: tuple[Fraction, Fraction, Fraction]
    g: Poly = field(repr=False, compare=False)

    @classmethod
    def from_poly(cls, p: Poly, g: Poly) -> CubicElement:
        r = p % g
        return cls((r[0], r[1], r[2]), g)

    @property
    def poly(self) -> Poly:
        return Poly(self.coords)

    def __add__(self, other: CubicElement) -> CubicElement:
        return CubicElement(tuple(a + b for a, b in zip(self.coords, other.coords)), self.g)

    def __sub__(self, other: CubicElement) -> CubicElement:
        return CubicElement(tuple(a - b for a, b in zip(self.coords, other.coords)), self.g)

    def __mul__(self, other) -> CubicElement:
        if isinstance(other, CubicElement):
            return CubicElement.from_poly(self.poly * other.poly, self.g)
        return CubicElement(tuple(a * other for a in self.coords), self.g)

    __rmul__ = __mul__

    @property
    def denominator(self) -> int:
        return lcm(*(c.denominator for c in self.coords))

    def mult_matrix(self) -> list[list[Fraction]]:
        """Rows are self * alpha^k in power coordinates (row-vector convention)."""
        rows = []
        for k in range(3):
            r = (self.poly * Poly.x() ** k) % self.g
            rows.append([r[0], r[1], r[2]])
        return rows

    def norm(self) -> Fraction:
        return det(self.mult_matrix())

    def char_poly(self) -> Poly:
        return charpoly(self.mult_matrix())


# --- p-maximal orders ----------------------------------------------------------

def dedekind_p_maximal(g: Poly, p: int) -> bool:
    """Dedekind's criterion: is Z[alpha] maximal at p?"""
    gi = g.int_coeffs()
    gb = fp_reduce(gi, p)
    t = fp_radical(gb, p)
    h, r = fp_divmod(gb, t, p)
    if r:
        raise InternalError("radical does not divide the polynomial mod p")
    th = Poly(t) * Poly(h)
    F = (th - g).int_coeffs()
    if any(c % p for c in F):
        raise InternalError("t*h is not congruent to g mod p")
    Fbar = fp_reduce([c // p for c in F], p)
    d = fp_gcd(fp_gcd(Fbar, t, p), h, p)
    return len(d) <= 1


def _mult_table(W: list[list[Fraction]], g: Poly) -> list[list[list[int]]]:
    """T[i][j] = omega_i * omega_j in omega-coordinates (integers)."""
    Winv = mat_inv(W)
    els = [Poly(row) for row in W]
    T = []
    for i in range(3):
        row = []
        for j in range(3):
            prod = (els[i] * els[j]) % g
            v = [sum((prod[k] * Winv[k][m] for k in range(3)), Fraction(0)) for m in range(3)]
            if any(c.denominator != 1 for c in v):
                raise InternalError("basis does not span a ring")
            row.append([c.numerator for c in v])
        T.append(row)
    return T


def _mul_mod(x: list[int], y: list[int], T, p: int) -> list[int]:
    out = [0, 0, 0]
    for i in range(3):
        if x[i]:
            for j in range(3):
                if y[j]:
                    c = x[i] * y[j]
                    t = T[i][j]
                    for k in range(3):
                        out[k] += c * t[k]
    return [c % p for c in out]


def _pow_mod(x: list[int], e: int, T, one: list[int], p: int) -> list[int]:
    result, base = list(one), [c % p for c in x]
    while e:
        if e & 1:
            result = _mul_mod(result, base, T, p)
        base = _mul_mod(base, base, T, p)
        e >>= 1
    return result


def _one_coords(W) -> list[int]:
    v = [Fraction(0)] * 3
    Winv = mat_inv(W)
    for m in range(3):
        v[m] = Winv[0][m]  # power-basis element 1 = (1, 0, 0)
    if any(c.denominator != 1 for c in v):
        raise InternalError("1 is not in the order")
    return [c.numerator for c in v]


def _ring_of_multipliers(W, g: Poly, p: int):
    """Ring of multipliers of the p-radical, or None if the order is p-maximal."""
    T = _mult_table(W, g)
    one = _one_coords(W)
    q = p
    while q < 3:
        q *= p
    e = [[int(i == j) for j in range(3)] for i in range(3)]
    frob = [_pow_mod(e[i], q, T, one, p) for i in range(3)]
    rad = fp_left_kernel(frob, p)
    gens = [[p * x for x in row] for row in e] + rad
    I = hnf(gens)
    Iinv = mat_inv(I)
    rows = []
    for i in range(3):
        vec = []
        for iota in I:
            prod = [0, 0, 0]
            for a in range(3):
                if iota[a]:
                    for k in range(3):
                        prod[k] += iota[a] * T[i][a][k]
            coords = [sum((prod[k] * Iinv[k][m] for k in range(3)), Fraction(0)) for m in range(3)]
            if any(c.denominator != 1 for c in coords):
                raise InternalError("p-radical is not an ideal")
            vec.extend(c.numerator % p for c in coords)
        rows.append(vec)
    ker = fp_left_kernel(rows, p)
    if not ker:
        return None
    U = hnf([[p * x for x in row] for row in e] + ker)
    return [[sum((Fraction(U[i][k], p) * W[k][m] for k in range(3)), Fraction(0)) for m in range(3)] for i in range(3)]


def maximal_order_basis(g: Poly, primes) -> list[list[Fraction]]:
    """Rows (power coordinates) of a Z-basis of the maximal order of Q[x]/(g)."""
    W = [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]
    for p in sorted(primes):
        if dedekind_p_maximal(g, p):
            continue
        for _ in range(64):
            nxt = _ring_of_multipliers(W, g, p)
            if nxt is None:
                break
            W = nxt
        else:
            raise InternalError(f"enlargement at p={p} did not stabilise")
    return canonical_basis(W)


def canonical_basis(W) -> list[list[Fraction]]:
    """Hermite form: 1, (s + alpha)/d1-type, (z + w*alpha + alpha^2)/d2-type."""
    D = lcm(*(c.denominator for row in W for c in row))
    rows = [[(c * D).numerator for c in reversed(row)] for row in W]
    H = hnf(rows)
    basis = [[Fraction(x, D) for x in reversed(r)] for r in reversed(H)]
    if basis[0] != [1, 0, 0]:
        raise InternalError("order does not contain 1 as first Hermite vector")
    return basis


# --- the order ---------------------------------------------------------------

def _primes_to_check(g: Poly, instance: FamilyInstance | None) -> list[int]:
    if instance is not None and instance.u != 0:
        ps = set(factorint(instance.u)) | set(factorint(instance.v))
    else:
        dg = discriminant(g)
        ps = set(factorint(dg.numerator))
    dg = discriminant(g)
    return sorted(p for p in ps if dg.numerator % (p * p) == 0)


@dataclass(frozen=True, eq=False)
class CubicOrder:
    g: Poly
    basis: tuple[CubicElement, CubicElement, CubicElement]
    instance: FamilyInstance | None = None

    @property
    def n(self) -> int | None:
        return None if self.instance is None else self.instance.n

    @cached_property
    def transition(self) -> list[list[Fraction]]:
        return [list(b.coords) for b in self.basis]

    @property
    def basis_denominators(self) -> tuple[int, int, int]:
        return tuple(b.denominator for b in self.basis)

    @property
    def numerators(self) -> tuple[tuple[int, int, int], ...]:
        return tuple(tuple((c * b.denominator).numerator for c in b.coords) for b in self.basis)

    @cached_property
    def index_of_power_basis(self) -> int:
        d = det(self.transition)
        inv = 1 / abs(d)
        if inv.denominator != 1:
            raise InternalError("transition determinant is not 1/integer")
        return inv.numerator

    @cached_property
    def disc_g(self) -> int:
        d = discriminant(self.g)
        return d.numerator

    @cached_property
    def D_L(self) -> int:
        q, r = divmod(self.disc_g, self.index_of_power_basis**2)
        if r:
            raise InternalError("index squared does not divide disc(g)")
        return q

    @cached_property
    def alpha_roots(self) -> tuple[RootInterval, ...]:
        return tuple(isolate_real_roots_cubic(self.g))

    def element(self, coords) -> CubicElement:
        """Element with the given integer coordinates in the integral basis."""
        acc = [Fraction(0)] * 3
        for c, b in zip(coords, self.basis):
            for k in range(3):
                acc[k] += c * b.coords[k]
        return CubicElement(tuple(acc), self.g)

    def to_basis_coords(self, e: CubicElement) -> list[Fraction]:
        Winv = self._transition_inv
        return [sum((e.coords[k] * Winv[k][m] for k in range(3)), Fraction(0)) for m in range(3)]

    @cached_property
    def _transition_inv(self):
        return mat_inv(self.transition)

    def char_poly(self, coords) -> Poly:
        return self.element(coords).char_poly()

    def conjugates(self, ctx) -> list[tuple[object, object, object]]:
        """Interval enclosures of (alpha, beta2, beta3) at each real embedding,
        ordered by increasing alpha."""
        if len(self.alpha_roots) != 3:
            raise DomainError("field is not totally real")
        out = []
        for a in enclose_roots(self.g, self.alpha_roots, ctx):
            vals = []
            for b in self.basis[1:]:
                c0, c1, c2 = (to_iv(ctx, c) for c in b.coords)
                vals.append(c0 + a * (c1 + a * c2))
            out.append((a, vals[0], vals[1]))
        return out

    def with_basis(self, beta2: CubicElement, beta3: CubicElement) -> CubicOrder:
        """Same order presented with another basis (1, beta2, beta3)."""
        one = self.basis[0]
        new = CubicOrder(self.g, (one, beta2, beta3), self.instance)
        if new.index_of_power_basis != self.index_of_power_basis:
            raise DomainError("new basis spans a different order")
        for b in (beta2, beta3):
            if any(c.denominator != 1 for c in self.to_basis_coords(b)):
                raise DomainError("new basis element lies outside the order")
        return new

    def describe_basis(self) -> str:
        parts = []
        for num, den in zip(self.numerators, self.basis_denominators):
            s = str(Poly(num)).replace("*", "")
            if den == 1:
                parts.append(s)
            elif len([c for c in num if c]) > 1:
                parts.append(f"({s})/{den}")
            else:
                parts.append(f"{s}/{den}")
        return "(" + ",".join(parts) + ")"


def integral_basis(instance: FamilyInstance | int) -> CubicOrder:
    if isinstance(instance, int):
        instance = build_instance(instance)
    return order_from_poly(instance.g, instance)


def order_from_poly(g: Poly, instance: FamilyInstance | None = None) -> CubicOrder:
    if g.degree != 3 or g.lc != 1 or not g.is_integral():
        raise DomainError("expected a monic integer cubic")
    W = maximal_order_basis(g, _primes_to_check(g, instance))
    basis = tuple(CubicElement(tuple(row), g) for row in W)
    order = CubicOrder(g, basis, instance)
    for b in order.basis:
        if not b.char_poly().is_integral():
            raise InternalError("basis element is not an algebraic integer")
    if order.D_L % 2 == 0 and instance is not None:
        raise InternalError("field discriminant is even")
    return order


# --- forms attached to the order ------------------------------------------------

def _index_form_coefficient(order: CubicOrder, which: int):
    def evaluate(ctx):
        conj = order.conjugates(ctx)
        pairs = [(0, 1), (0, 2), (1, 2)]
        ps = [conj[i][1] - conj[j][1] for i, j in pairs]
        qs = [conj[i][2] - conj[j][2] for i, j in pairs]
        if which == 0:
            v = ps[0] * ps[1] * ps[2]
        elif which == 1:
            v = ps[0] * ps[1] * qs[2] + ps[0] * qs[1] * ps[2] + qs[0] * ps[1] * ps[2]
        elif which == 2:
            v = ps[0] * qs[1] * qs[2] + qs[0] * ps[1] * qs[2] + qs[0] * qs[1] * ps[2]
        else:
            v = qs[0] * qs[1] * qs[2]
        return v / ctx.sqrt(ctx.mpf(order.D_L))

    return certified_integer(evaluate)


@dataclass(frozen=True, eq=False)
class BinaryCubicIndexForm:
    form: BivariateIntForm
    order: CubicOrder

    def __call__(self, x, y):
        return self.form(x, y)

    @property
    def coeffs(self):
        return self.form.coeffs


def index_form(order: CubicOrder, check_points: int = 10) -> BinaryCubicIndexForm:
    """I_L(x2, x3) = prod_{j<k} (L_j - L_k) / sqrt(D_L), L = x2*beta2 + x3*beta3,
    with embeddings ordered by increasing alpha."""
    form = BivariateIntForm(*(_index_form_coefficient(order, k) for k in range(4)))
    pts = [(1, 0), (0, 1), (1, 1), (1, -1), (2, 1), (1, 2), (3, -1), (-2, 5), (4, 3), (5, -7)]
    for x, y in pts[:check_points]:
        lhs = form(x, y) ** 2 * order.D_L
        rhs = discriminant(order.char_poly((0, x, y)))
        if lhs != rhs:
            raise InternalError(f"index form identity fails at {(x, y)}")
    return BinaryCubicIndexForm(form, order)


def element_index(order: CubicOrder, x2: int, x3: int) -> int:
    """Index of x2*beta2 + x3*beta3 in Z_L from its characteristic polynomial."""
    d = discriminant(order.char_poly((0, x2, x3)))
    q, r = divmod(d.numerator, order.D_L)
    if d.denominator != 1 or r:
        raise InternalError("disc(char poly) is not an integer multiple of D_L")
    return exact_isqrt(q)


def norm_form_value(order: CubicOrder, y1: int, y2: int, y3: int) -> int:
    v = order.element((y1, y2, y3)).norm()
    if v.denominator != 1:
        raise InternalError("norm of an integral element is not an integer")
    return v.numerator


def norm_form_poly_in_y1(order: CubicOrder, y2: int, y3: int) -> Poly:
    """N(y1) = N_{L/Q}(y1 + y2*beta2 + y3*beta3) = -chi_w(-y1), w = y2*beta2 + y3*beta3."""
    chi = order.char_poly((0, y2, y3))
    out = -chi.compose(Poly([0, -1]))
    out = Poly(out.coeffs, "y1")
    if not out.is_integral() or out.lc != 1:
        raise InternalError("norm polynomial is not monic integral")
    return out
