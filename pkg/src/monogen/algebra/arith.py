"""Small integer utilities (trial-division scale)."""

from __future__ import annotations

from math import isqrt

from ..errors import InternalError


def factorint(m: int) -> dict[int, int]:
    """Prime factorization of |m| by trial division."""
    m = abs(m)
    out: dict[int, int] = {}
    if m == 0:
        raise ValueError("cannot factor 0")
    for p in (2, 3):
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
    p = 5
    while p * p <= m:
        for q in (p, p + 2):
            while m % q == 0:
                out[q] = out.get(q, 0) + 1
                m //= q
        p += 6
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def is_squarefree_int(m: int) -> bool:
    if m == 0:
        return False
    return all(e == 1 for e in factorint(m).values())


def exact_isqrt(m: int) -> int:
    """Square root of a perfect square; InternalError otherwise."""
    if m < 0:
        raise InternalError(f"negative value {m} where a square was expected")
    r = isqrt(m)
    if r * r != m:
        raise InternalError(f"{m} is not a perfect square")
    return r
