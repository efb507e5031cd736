"""The sextic field K = L(i) and index computations for its elements.

gamma = A + i*B with A = x1 + x2*beta2 + x3*beta3 and B = y1 + y2*beta2 + y3*beta3.
The embeddings are (1, j): i -> +i and (2, j): i -> -i over the real
embeddings j of L ordered by increasing alpha. With A_j, B_j the real images:

  I(gamma)     total index, sqrt(disc(charpoly(gamma)) / D_K)
  J(gamma)     prod over all (j1, j2) |gamma^(1,j1) - gamma^(2,j2)| / 8 = |N| * P
  N            N_{L/Q}(B)
  P(gamma)     prod over j1 < j2 of (A_j1 - A_j2)^2 + (B_j1 + B_j2)^2
  I_rel        prod over j1 < j2 of (A_j1 - A_j2)^2 + (B_j1 - B_j2)^2, divided by D_L,
               which equals |I_L(x2 + i*y2, x3 + i*y3)|^2
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import NamedTuple

from .algebra.arith import exact_isqrt
from .algebra.certified import certified_integer
from .algebra.linalg import charpoly, det
from .algebra.poly import Poly, discriminant
from .cubicfield import BinaryCubicIndexForm, CubicElement, CubicOrder, index_form, norm_form_value
from .errors import DomainError, InternalError

D_M = -4


class Candidate(NamedTuple):
    x1: int
    x2: int
    x3: int
    y1: int
    y2: int
    y3: int

    @property
    def tail(self) -> tuple[int, int, int, int, int]:
        """(x2, x3, y1, y2, y3), the coordinates that determine the class."""
        return self[1:]


@dataclass(frozen=True, eq=False)
class SexticOrder:
    order_L: CubicOrder

    @cached_property
    def D_K(self) -> int:
        return self.order_L.D_L**2 * D_M**3

    @cached_property
    def index_form_L(self) -> BinaryCubicIndexForm:
        return index_form(self.order_L)

    @property
    def basis_labels(self) -> tuple[str, ...]:
        return ("1", "beta2", "beta3", "i", "i*beta2", "i*beta3")

    def parts(self, gamma: Candidate) -> tuple[CubicElement, CubicElement]:
        """(A, B) with gamma = A + i*B."""
        o = self.order_L
        return o.element(gamma[0:3]), o.element(gamma[3:6])

    def basis_discriminant(self) -> int:
        """det of the trace form Tr_{K/Q}(w_k w_l) over the six basis elements."""
        o = self.order_L
        zero = o.element((0, 0, 0))
        els = [(b, zero) for b in o.basis] + [(zero, b) for b in o.basis]
        gram = []
        for a1, b1 in els:
            row = []
            for a2, b2 in els:
                re = a1 * a2 - b1 * b2
                row.append(2 * _trace(re))
            gram.append(row)
        d = det(gram)
        if d.denominator != 1:
            raise InternalError("basis discriminant is not an integer")
        return d.numerator


def _trace(e: CubicElement) -> Fraction:
    m = e.mult_matrix()
    return m[0][0] + m[1][1] + m[2][2]


def build_sextic(order_L: CubicOrder) -> SexticOrder:
    if order_L.D_L % 2 == 0:
        raise DomainError("D_L must be odd for the composite integral basis")
    K = SexticOrder(order_L)
    if K.basis_discriminant() != K.D_K:
        raise InternalError("sextic basis discriminant disagrees with D_L^2 * D_M^3")
    return K


# --- exact invariants -----------------------------------------------------------

def gamma_char_poly(K: SexticOrder, gamma: Candidate) -> Poly:
    A, B = K.parts(gamma)
    ma, mb = A.mult_matrix(), B.mult_matrix()
    rows = [ma[k] + mb[k] for k in range(3)] + [[-c for c in mb[k]] + ma[k] for k in range(3)]
    return charpoly(rows)


def total_index(K: SexticOrder, gamma: Candidate) -> int:
    """Index (Z_K : Z[gamma]); 0 when gamma does not generate K."""
    chi = gamma_char_poly(K, gamma)
    d = discriminant(chi)
    if d == 0:
        return 0
    q, r = divmod(d.numerator, K.D_K)
    if d.denominator != 1 or r:
        raise InternalError("disc(charpoly) is not a multiple of D_K")
    return exact_isqrt(q)


def norm_factor(K: SexticOrder, gamma: Candidate) -> int:
    return norm_form_value(K.order_L, gamma.y1, gamma.y2, gamma.y3)


def _pair_product_sq(K: SexticOrder, a: CubicElement, b: CubicElement, plus: bool) -> int:
    """prod over ordered pairs j1 != j2 of (a_j1 - a_j2)^2 + (b_j1 +- b_j2)^2.

    For the generic root alpha the other two roots are the roots of
    y^2 + s1*y + s0 over L; the pair product over them is a resultant of that
    quadratic, and its norm to Q runs over every ordered pair.
    """
    o = K.order_L
    g = o.g
    c2, c1 = g[2], g[1]
    alpha = CubicElement((Fraction(0), Fraction(1), Fraction(0)), g)
    one = CubicElement((Fraction(1), Fraction(0), Fraction(0)), g)
    s1 = alpha + one * c2
    s0 = alpha * alpha + alpha * c2 + one * c1

    # elements of L[y]/(y^2 + s1 y + s0) as pairs (u0, u1) = u0 + u1*y
    def mul(u, v):
        u0, u1 = u
        v0, v1 = v
        t2 = u1 * v1
        return (u0 * v0 - t2 * s0, u0 * v1 + u1 * v0 - t2 * s1)

    def add(u, v):
        return (u[0] + v[0], u[1] + v[1])

    def scal(c, u):
        return (u[0] * c, u[1] * c)

    ypow = [(one, one * 0), (one * 0, one)]
    ypow.append(mul(ypow[1], ypow[1]))

    def at_y(e: CubicElement):
        acc = (one * 0, one * 0)
        for k in range(3):
            acc = add(acc, scal(e.coords[k], ypow[k]))
        return acc

    sign = 1 if plus else -1
    da = add((a, one * 0), scal(-1, at_y(a)))
    sb = add((b, one * 0), scal(sign, at_y(b)))
    q = add(mul(da, da), mul(sb, sb))
    u0, u1 = q
    res = u0 * u0 - u0 * u1 * s1 + u1 * u1 * s0
    v = res.norm()
    if v.denominator != 1 or v < 0:
        raise InternalError("pair product is not a nonnegative integer")
    return v.numerator


def p_invariant(K: SexticOrder, gamma: Candidate) -> int:
    A, B = K.parts(gamma)
    return exact_isqrt(_pair_product_sq(K, A, B, plus=True))


def j_factor(K: SexticOrder, gamma: Candidate) -> int:
    return abs(norm_factor(K, gamma)) * p_invariant(K, gamma)


def relative_index_gaussian(K: SexticOrder, gamma: Candidate) -> int:
    """|I_L(x2 + i y2, x3 + i y3)|^2, computed with Gaussian integers."""
    a, b, c, d = K.index_form_L.coeffs
    z2 = complex_int(gamma.x2, gamma.y2)
    z3 = complex_int(gamma.x3, gamma.y3)
    v = z2 * z2 * z2 * a + z2 * z2 * z3 * b + z2 * z3 * z3 * c + z3 * z3 * z3 * d
    return v.norm()


def relative_index_symmetric(K: SexticOrder, gamma: Candidate) -> Fraction:
    """prod over j1 < j2 of |gamma^(i,j1) - gamma^(i,j2)| over i = 1, 2, divided by D_L."""
    A, B = K.parts(gamma)
    sq = _pair_product_sq(K, A, B, plus=False)
    return Fraction(exact_isqrt(sq), K.order_L.D_L)


def relative_index(K: SexticOrder, gamma: Candidate) -> Fraction:
    """I_{K/M}(gamma) = I / J, confirmed against the direct product formula."""
    I = total_index(K, gamma)
    J = j_factor(K, gamma)
    if I == 0 or J == 0:
        raise DomainError("relative index needs a primitive gamma with J != 0")
    via_ratio = Fraction(I, J)
    direct = relative_index_gaussian(K, gamma)
    if via_ratio != direct or relative_index_symmetric(K, gamma) != direct:
        raise InternalError(f"relative index routes disagree for {gamma}")
    return via_ratio


class complex_int(NamedTuple):
    re: int
    im: int

    def __mul__(self, other):
        if isinstance(other, complex_int):
            return complex_int(self.re * other.re - self.im * other.im, self.re * other.im + self.im * other.re)
        return complex_int(self.re * other, self.im * other)

    def __add__(self, other):
        return complex_int(self.re + other.re, self.im + other.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im


@dataclass(frozen=True)
class IndexReport:
    I: int
    J: int
    I_rel: Fraction | None
    N: int
    P: int
    factorization_ok: bool


def index_report(K: SexticOrder, gamma: Candidate) -> IndexReport:
    I = total_index(K, gamma)
    N = norm_factor(K, gamma)
    P = p_invariant(K, gamma)
    J = abs(N) * P
    I_rel = Fraction(I, J) if J else None
    ok = True
    if I:
        direct = relative_index_gaussian(K, gamma)
        ok = J != 0 and I_rel == direct
    return IndexReport(I, J, I_rel, N, P, ok)


def generator_test(K: SexticOrder, gamma: Candidate) -> tuple[bool, IndexReport]:
    rep = index_report(K, gamma)
    if rep.I and not rep.factorization_ok:
        raise InternalError(f"index factorization fails for {gamma}")
    is_gen = rep.I == 1
    if is_gen and not (rep.I_rel == 1 and abs(rep.N) == 1 and rep.P == 1):
        raise InternalError(f"generator {gamma} with non-unit factors {rep}")
    return is_gen, rep


def index_of_xi(K: SexticOrder) -> int:
    """Index of a root of f_n in Z_K, sqrt(disc(f_n) / D_K)."""
    inst = K.order_L.instance
    if inst is None:
        raise DomainError("order is not attached to a family instance")
    d = discriminant(inst.f)
    q, r = divmod(d.numerator, K.D_K)
    if r or d.denominator != 1:
        raise InternalError("disc(f) is not a multiple of D_K")
    return exact_isqrt(q)


# --- certified numeric oracles -----------------------------------------------------

def _conj_parts(K: SexticOrder, gamma: Candidate, ctx):
    out = []
    for _, b2, b3 in K.order_L.conjugates(ctx):
        A = gamma.x1 + gamma.x2 * b2 + gamma.x3 * b3
        B = gamma.y1 + gamma.y2 * b2 + gamma.y3 * b3
        out.append((A, B))
    return out


def total_index_numeric(K: SexticOrder, gamma: Candidate) -> int:
    """Index from the 15 conjugate differences (certified rounding)."""

    def evaluate(ctx):
        parts = _conj_parts(K, gamma, ctx)
        conj = [(A, B) for A, B in parts] + [(A, -B) for A, B in parts]
        acc = ctx.mpf(1)
        for k in range(6):
            for l in range(k + 1, 6):
                dr = conj[k][0] - conj[l][0]
                di = conj[k][1] - conj[l][1]
                acc = acc * (dr * dr + di * di)
        return acc / abs(K.D_K)

    return exact_isqrt(certified_integer(evaluate))


def p_invariant_numeric(K: SexticOrder, gamma: Candidate) -> int:
    def evaluate(ctx):
        parts = _conj_parts(K, gamma, ctx)
        acc = ctx.mpf(1)
        for j1 in range(3):
            for j2 in range(j1 + 1, 3):
                dA = parts[j1][0] - parts[j2][0]
                sB = parts[j1][1] + parts[j2][1]
                acc = acc * (dA * dA + sB * sB)
        return acc

    return certified_integer(evaluate)


def j_factor_numeric(K: SexticOrder, gamma: Candidate) -> int:
    def evaluate(ctx):
        parts = _conj_parts(K, gamma, ctx)
        acc = ctx.mpf(1)
        for j1 in range(3):
            for j2 in range(3):
                dA = parts[j1][0] - parts[j2][0]
                sB = parts[j1][1] + parts[j2][1]
                acc = acc * (dA * dA + sB * sB)
        return acc / 64

    return exact_isqrt(certified_integer(evaluate))
