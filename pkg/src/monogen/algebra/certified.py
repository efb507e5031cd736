"""Certified enclosures and rounding of exactly-integral quantities.

Interval arithmetic comes from mpmath's interval context. Every computation
builds its own context so no precision state is shared between callers.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Sequence

from mpmath.ctx_iv import MPIntervalContext
from mpmath.libmp import to_rational

from ..errors import DomainError, ResourceError
from .poly import Poly
from .roots import RootInterval, refine

START_BITS = 256
DEFAULT_CEILING_BITS = 65536


def precision_ceiling() -> int:
    raw = os.environ.get("MONOGEN_PRECISION_CEILING_BITS")
    if raw is None:
        return DEFAULT_CEILING_BITS
    bits = int(raw)
    if bits < START_BITS:
        raise DomainError(f"precision ceiling must be >= {START_BITS} bits")
    return bits


def precision_schedule(start: int = START_BITS, ceiling: int | None = None) -> Iterator[int]:
    """start, 2*start, ... up to the ceiling (inclusive)."""
    ceiling = precision_ceiling() if ceiling is None else ceiling
    bits = start
    while bits <= ceiling:
        yield bits
        bits *= 2


def interval_context(prec: int) -> MPIntervalContext:
    ctx = MPIntervalContext()
    ctx.prec = prec
    return ctx


def to_iv(ctx: MPIntervalContext, x):
    """Enclosure of an exact int/Fraction in the given interval context."""
    if isinstance(x, int):
        return ctx.mpf(x)
    if isinstance(x, Fraction):
        return ctx.mpf(x.numerator) / ctx.mpf(x.denominator)
    if isinstance(x, CertifiedReal):
        return ctx.mpf([x.lo_iv(ctx).a, x.hi_iv(ctx).b])
    return ctx.convert(x)


def _endpoint(mpf_tuple) -> Fraction:
    p, q = to_rational(mpf_tuple)
    return Fraction(int(p), int(q))


@dataclass(frozen=True)
class CertifiedReal:
    """A real number known to lie in [mid - rad, mid + rad]."""

    mid: Fraction
    rad: Fraction
    prec: int

    @classmethod
    def exact(cls, x, prec: int = START_BITS) -> CertifiedReal:
        return cls(Fraction(x), Fraction(0), prec)

    @classmethod
    def from_iv(cls, v, prec: int) -> CertifiedReal:
        lo, hi = _endpoint(v._mpi_[0]), _endpoint(v._mpi_[1])
        return cls((lo + hi) / 2, (hi - lo) / 2, prec)

    @property
    def lo(self) -> Fraction:
        return self.mid - self.rad

    @property
    def hi(self) -> Fraction:
        return self.mid + self.rad

    def lo_iv(self, ctx):
        return to_iv(ctx, self.lo)

    def hi_iv(self, ctx):
        return to_iv(ctx, self.hi)

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def unique_integer(self) -> int | None:
        from math import ceil, floor

        a, b = ceil(self.lo), floor(self.hi)
        return a if a == b else None


def _unique_integer_iv(v) -> int | None:
    """The only integer inside a real or complex interval, if isolated."""
    if hasattr(v, "imag") and hasattr(v, "real") and type(v).__name__ == "ivmpc":
        im = CertifiedReal.from_iv(v.imag, 0)
        if not im.contains(0) or im.rad >= Fraction(1, 2):
            return None
        v = v.real
    c = CertifiedReal.from_iv(v, 0)
    if c.rad >= Fraction(1, 2):
        return None
    return c.unique_integer()


def certified_integer(evaluate: Callable[[MPIntervalContext], object], start: int = START_BITS) -> int:
    """Round an exactly-integral quantity to its integer value.

    ``evaluate(ctx)`` must return an interval (real or complex) enclosing the
    quantity at ``ctx.prec`` bits. Precision doubles until the enclosure is
    narrower than one and contains a single integer.
    """
    for bits in precision_schedule(start):
        ctx = interval_context(bits)
        value = evaluate(ctx)
        n = _unique_integer_iv(value)
        if n is not None:
            return n
    raise ResourceError(f"enclosure did not isolate an integer below {precision_ceiling()} bits")


def _factor_iv(ctx, f):
    if isinstance(f, tuple):
        re, im = f
        return ctx.mpc(to_iv(ctx, re), to_iv(ctx, im))
    return to_iv(ctx, f)


def certified_product_integer(factors) -> int:
    """Integer value of a product of enclosures.

    ``factors`` is either a callable mapping an interval context to a list of
    interval factors (precision escalates), or a fixed sequence of
    ``CertifiedReal``/exact numbers/``(re, im)`` pairs (no escalation).
    """
    if callable(factors):
        def evaluate(ctx):
            acc = ctx.mpf(1)
            for f in factors(ctx):
                acc = acc * f
            return acc

        return certified_integer(evaluate)
    fixed: Sequence = list(factors)
    prec = max((f.prec for f in fixed if isinstance(f, CertifiedReal)), default=START_BITS)
    ctx = interval_context(prec + 64)
    acc = ctx.mpf(1)
    for f in fixed:
        acc = acc * _factor_iv(ctx, f)
    n = _unique_integer_iv(acc)
    if n is None:
        raise ResourceError("fixed enclosures too wide to isolate an integer")
    return n


def enclose_roots(p: Poly, isolating: Sequence[RootInterval], ctx: MPIntervalContext) -> list:
    """Interval enclosures of the isolated roots at the context precision."""
    out = []
    for iv in isolating:
        r = refine(p, iv, ctx.prec + 8)
        out.append(ctx.mpf([to_iv(ctx, r.lo).a, to_iv(ctx, r.hi).b]))
    return out
