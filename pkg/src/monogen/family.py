"""The parametric family f_n(x) = x^6 + (n^2+5)x^4 + (n^2+2n+6)x^2 + 1.

g_n(y) = y^3 + (n^2+5)y^2 + (n^2+2n+6)y + 1 satisfies f_n(x) = g_n(x^2), so a
root xi of f_n generates a sextic field K containing the cubic field
L = Q(xi^2) and the Gaussian field Q(i).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product

import mpmath

from .algebra.arith import is_squarefree_int
from .algebra.poly import Poly, discriminant
from .algebra.roots import integer_roots
from .errors import InternalError


def f_poly(n: int) -> Poly:
    return Poly([1, 0, n * n + 2 * n + 6, 0, n * n + 5, 0, 1])


def g_poly(n: int) -> Poly:
    return Poly([1, n * n + 2 * n + 6, n * n + 5, 1])


def u_of(n: int) -> int:
    return n * n + n - 1


def v_of(n: int) -> int:
    return n * n + n + 7


def is_in_S(n: int) -> bool:
    """Squarefreeness of n^2 + n + 7; the |n| range is the caller's concern."""
    return is_squarefree_int(v_of(n))


def check_disc_identity(n: int) -> bool:
    return discriminant(g_poly(n)) == u_of(n) ** 2 * v_of(n) ** 2


def zeta_poly(abc: tuple[int, int, int]) -> Poly:
    a, b, c = abc
    return Poly([0, a, 0, b, 0, c])


def zeta_congruence_holds(n: int, abc: tuple[int, int, int]) -> bool:
    z = zeta_poly(abc)
    return (z * z) % f_poly(n) == Poly([-u_of(n) ** 2])


@lru_cache(maxsize=4096)
def derive_zeta(n: int) -> tuple[int, int, int]:
    """(a, b, c) with (a x + b x^3 + c x^5)^2 = -(n^2+n-1)^2 modulo f_n.

    Writing the element as x * h(x^2), the condition becomes
    alpha * h(alpha)^2 = -u^2 in L, so h(alpha_j) = +-u / sqrt(-alpha_j) at the
    three (negative) real roots of g_n. Each sign pattern is interpolated,
    rounded and then verified exactly modulo f_n.
    """
    u = u_of(n)
    ctx = mpmath.MPContext()
    ctx.prec = 256 + 8 * max(1, abs(n)).bit_length()
    roots = ctx.polyroots([1, n * n + 5, n * n + 2 * n + 6, 1], maxsteps=200, extraprec=ctx.prec)
    roots = sorted(ctx.re(r) for r in roots)
    found = []
    for signs in product((1, -1), repeat=2):
        vals = [u / ctx.sqrt(-roots[0])] + [s * u / ctx.sqrt(-r) for s, r in zip(signs, roots[1:])]
        # solve a + b r + c r^2 = val
        m = ctx.matrix([[1, r, r * r] for r in roots])
        sol = ctx.lu_solve(m, ctx.matrix(vals))
        cand = tuple(int(ctx.nint(sol[k])) for k in range(3))
        for abc in (cand, tuple(-c for c in cand)):
            if zeta_congruence_holds(n, abc):
                found.append(abc)
    if not found:
        raise InternalError(f"no zeta found for n={n}")
    # prefer the orientation whose x^5 coefficient is 1 - n (then x^3 is -n^3+n^2-5n+4)
    def score(abc):
        return (abc[2] == 1 - n, abc[1] == -(n**3) + n * n - 5 * n + 4)

    return max(sorted(set(found)), key=score)


def assert_irreducible(n: int) -> None:
    """Certify that f_n is irreducible over Q.

    g_n is monic cubic with no integer root, hence irreducible. A factor of
    f_n(x) = g_n(x^2) of degree < 6 would make alpha = xi^2 a square in L,
    impossible because N_{L/Q}(alpha) = -g_n(0) = -1 is not a rational square.
    """
    g = g_poly(n)
    if integer_roots(g):
        raise InternalError(f"g_{n} has a rational root")
    if integer_roots(f_poly(n)):
        raise InternalError(f"f_{n} has a rational root")
    norm_alpha = -g[0]
    if norm_alpha >= 0:
        raise InternalError(f"norm of alpha is {norm_alpha}; square test inconclusive")


@dataclass(frozen=True)
class FamilyInstance:
    n: int
    f: Poly = field(repr=False)
    g: Poly = field(repr=False)
    u: int
    v: int
    in_S: bool
    zeta_coeffs: tuple[int, int, int]

    @property
    def disc_g(self) -> Fraction:
        return discriminant(self.g)


def build_instance(n: int) -> FamilyInstance:
    return FamilyInstance(
        n=n,
        f=f_poly(n),
        g=g_poly(n),
        u=u_of(n),
        v=v_of(n),
        in_S=is_in_S(n),
        zeta_coeffs=derive_zeta(n),
    )


def S_members(lo: int = -1000, hi: int = 1000, inner: int = 100) -> list[int]:
    """n in [lo, -inner) U (inner, hi] with n^2 + n + 7 squarefree."""
    return [n for n in range(lo, hi + 1) if (n < -inner or n > inner) and is_in_S(n)]
