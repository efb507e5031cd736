"""Exact real root isolation (Sturm sequences) and certified refinement."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from ..errors import DomainError
from .poly import Poly, gcd, is_squarefree


@dataclass(frozen=True)
class RootInterval:
    """Closed rational interval containing exactly one root of its polynomial.

    Either ``lo == hi`` (an exact rational root) or the polynomial takes
    opposite nonzero signs at the two endpoints.
    """

    lo: Fraction
    hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def is_exact(self) -> bool:
        return self.lo == self.hi


def sturm_sequence(p: Poly) -> list[Poly]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        r = -(seq[-2] % seq[-1])
        if r.is_zero():
            break
        seq.append(r)
    return seq


def _sign_changes(seq: list[Poly], t: Fraction) -> int:
    changes, last = 0, 0
    for q in seq:
        s = q.sign_at(t)
        if s:
            if last and s != last:
                changes += 1
            last = s
    return changes


def root_bound(p: Poly) -> Fraction:
    """Cauchy bound: every root has absolute value below it."""
    lc = abs(p.lc)
    return 1 + max((abs(c) / lc for c in p.coeffs[:-1]), default=Fraction(0))


def isolate_real_roots(p: Poly) -> list[RootInterval]:
    """Disjoint isolating intervals for the real roots of a squarefree p, sorted."""
    if p.degree < 1:
        return []
    if not is_squarefree(p):
        raise DomainError("root isolation requires a squarefree polynomial")
    seq = sturm_sequence(p)
    R = root_bound(p)
    out: list[RootInterval] = []
    stack = [(-R, R, _sign_changes(seq, -R), _sign_changes(seq, R))]
    while stack:
        a, b, va, vb = stack.pop()
        count = va - vb  # roots in (a, b]
        if count == 0:
            continue
        if count == 1:
            if p.sign_at(b) == 0:
                out.append(RootInterval(b, b))
                continue
            if p.sign_at(a) != 0:
                out.append(RootInterval(a, b))
                continue
        m = (a + b) / 2
        vm = _sign_changes(seq, m)
        stack.append((a, m, va, vm))
        stack.append((m, b, vm, vb))
    out.sort(key=lambda iv: iv.lo)
    return out


def isolate_real_roots_cubic(p: Poly) -> list[RootInterval]:
    if p.degree != 3:
        raise DomainError("expected a cubic")
    return isolate_real_roots(p)


def _newton_guess(p: Poly, x0: Fraction, bits: int) -> int | None:
    """round(r * 2**(bits+2)) for a Newton iterate r started at x0, or None."""
    ctx = mpmath.MPContext()
    ctx.prec = bits + 64
    cs = [ctx.mpf(c.numerator) / c.denominator for c in p.coeffs]
    ds = [k * c for k, c in enumerate(cs)][1:]
    x = ctx.mpf(x0.numerator) / x0.denominator
    tol = ctx.ldexp(1, -(bits + 8))
    for _ in range(4 * int(math.log2(bits + 2)) + 40):
        fx = ctx.polyval(cs[::-1], x)
        dfx = ctx.polyval(ds[::-1], x)
        if not dfx:
            return None
        step = fx / dfx
        x -= step
        if abs(step) < tol:
            return int(ctx.nint(ctx.ldexp(x, bits + 2)))
    return None


def refine(p: Poly, iv: RootInterval, bits: int) -> RootInterval:
    """Shrink an isolating interval to width at most 2**-bits.

    A Newton iterate at matching precision proposes a dyadic bracket which
    is then certified by exact sign evaluation; bisection is the fallback.
    """
    target = Fraction(1, 2**bits)
    cur = iv
    while cur.width > target:
        M = _newton_guess(p, cur.mid, bits)
        if M is not None:
            K = bits + 2
            lo, hi = Fraction(M - 1, 2**K), Fraction(M + 1, 2**K)
            if cur.lo <= lo and hi <= cur.hi:
                slo, shi = p.sign_at(lo), p.sign_at(hi)
                if slo == 0:
                    return RootInterval(lo, lo)
                if shi == 0:
                    return RootInterval(hi, hi)
                if slo != shi:
                    return RootInterval(lo, hi)
        # narrow geometrically and retry
        steps = max(1, int(math.log2(max(cur.width / target, 2))) // 4)
        cur = _bisect_steps(p, cur, min(steps, 16))
    return cur


def _bisect_steps(p: Poly, iv: RootInterval, steps: int) -> RootInterval:
    lo, hi = iv.lo, iv.hi
    slo = p.sign_at(lo)
    for _ in range(steps):
        m = (lo + hi) / 2
        sm = p.sign_at(m)
        if sm == 0:
            return RootInterval(m, m)
        if sm == slo:
            lo = m
        else:
            hi = m
    return RootInterval(lo, hi)


def squarefree_part(p: Poly) -> Poly:
    g = gcd(p, p.derivative())
    return p if g.degree <= 0 else p // g


def integer_roots(p: Poly) -> list[int]:
    """All integer roots of an integer polynomial, ascending.

    Candidates come from the neighbourhoods of the isolated real roots and
    must divide the constant term of the deflated polynomial.
    """
    if p.is_zero():
        raise DomainError("zero polynomial has every integer as a root")
    if not p.is_integral():
        raise DomainError("integer_roots expects integer coefficients")
    roots: set[int] = set()
    q = p
    if q[0] == 0:
        roots.add(0)
        while q[0] == 0:
            q = q // Poly.x(p.var)
    if q.degree < 1:
        return sorted(roots)
    const = q[0].numerator
    for iv in isolate_real_roots(squarefree_part(q)):
        if not iv.is_exact():
            iv = refine(squarefree_part(q), iv, 2)
        for c in range(math.floor(iv.lo), math.ceil(iv.hi) + 1):
            if c and const % c == 0 and q(Fraction(c)) == 0:
                roots.add(c)
    return sorted(roots)
