"""Continued fractions of real algebraic numbers.

Partial quotients are read off the two endpoints of a certified isolating
interval: a prefix shared by both endpoint expansions (each continuing past
it) is provably a prefix of the root's expansion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import DomainError, ResourceError
from .certified import precision_ceiling, precision_schedule
from .poly import Poly
from .roots import RootInterval, refine


@dataclass(frozen=True)
class ContinuedFraction:
    partial_quotients: tuple[int, ...]
    convergents: tuple[tuple[int, int], ...]


def expand_rational(x: Fraction) -> list[int]:
    out = []
    p, q = x.numerator, x.denominator
    while q:
        a, r = divmod(p, q)
        out.append(a)
        p, q = q, r
    return out


def convergents(quotients) -> list[tuple[int, int]]:
    out = []
    p0, q0, p1, q1 = 1, 0, 0, 1
    for a in quotients:
        p0, p1 = a * p0 + p1, p0
        q0, q1 = a * q0 + q1, q0
        out.append((p0, q0))
    return out


def certified_prefix(lo: Fraction, hi: Fraction) -> list[int]:
    """Longest prefix of partial quotients shared by every real in [lo, hi]
    other than finitely many rationals."""
    a, b = expand_rational(lo), expand_rational(hi)
    k = 0
    while k < min(len(a), len(b)) and a[k] == b[k]:
        k += 1
    k = min(k, len(a) - 1, len(b) - 1)
    return a[:k]


def _reject_rational(p: Poly, iv: RootInterval) -> None:
    prim = p.primitive()
    if iv.is_exact():
        raise DomainError("root is rational")
    lc = abs(prim.lc.numerator)
    narrow = refine(prim, iv, 2 * lc.bit_length() + 4)
    cand = narrow.mid.limit_denominator(lc)
    if prim(cand) == 0 and narrow.lo <= cand <= narrow.hi:
        raise DomainError(f"root is rational ({cand})")


def continued_fraction_convergents(p: Poly, iv: RootInterval, q_max: int) -> ContinuedFraction:
    """All convergents p_k/q_k of the root of ``p`` in ``iv`` with q_k <= q_max."""
    if q_max < 1:
        raise DomainError("q_max must be positive")
    _reject_rational(p, iv)
    cur = iv
    for bits in precision_schedule():
        cur = refine(p, cur, bits)
        quotients = certified_prefix(cur.lo, cur.hi)
        convs = convergents(quotients)
        if convs and convs[-1][1] > q_max:
            keep = [c for c in convs if c[1] <= q_max]
            return ContinuedFraction(tuple(quotients[: len(keep)]), tuple(keep))
    raise ResourceError(
        f"continued fraction up to q_max={q_max} needs more than {precision_ceiling()} bits"
    )


def intermediate_fractions(quotients, k: int) -> list[tuple[int, int]]:
    """Intermediate fractions between convergents k-1 and k+1 of a quotient
    sequence: (p_{k-1} + j p_k) / (q_{k-1} + j q_k) for the extreme j values
    1 and a_{k+1} - 1."""
    convs = convergents(quotients)
    if k + 1 >= len(quotients) or k < 1:
        return []
    a_next = quotients[k + 1]
    (pk, qk), (pm, qm) = convs[k], convs[k - 1]
    js = {j for j in (1, a_next - 1) if 1 <= j < a_next}
    return [(pm + j * pk, qm + j * qk) for j in sorted(js)]
