"""Integer solutions of |F(x, y)| <= 1 for an irreducible binary cubic F.

For a solution with y != 0 let t = x/y and theta the root of F(t, 1) nearest
to t. Then |x - theta*y| <= 4 / (|f'(theta)| y^2) with f = F(t, 1), which
gives a per-row candidate window (exhaustive search) and, once
y > 8/|f'(theta)|, forces x/y to be a continued-fraction convergent of a real
root (convergent search).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath

from .algebra.contfrac import continued_fraction_convergents, intermediate_fractions
from .algebra.forms import BivariateIntForm
from .algebra.roots import isolate_real_roots
from .errors import DomainError, ResourceError

SMALL_GUARD = 10**7
DEFAULT_CUTOFF = 10**4

EXHAUSTIVE = "exhaustive-complete"
HEURISTIC = "heuristic-up-to-B"


@dataclass(frozen=True)
class ThueSearchConfig:
    bound: int = 10**6
    strategy: str = "convergent"  # exhaustive | convergent | both
    cutoff: int = DEFAULT_CUTOFF

    def __post_init__(self):
        if self.bound < 1:
            raise DomainError("search bound must be >= 1")
        if self.strategy not in ("exhaustive", "convergent", "both"):
            raise DomainError(f"unknown strategy {self.strategy!r}")


@dataclass(frozen=True)
class ThueSolutionSet:
    solutions: tuple[tuple[int, int], ...]
    completeness: str
    bound: int

    def __contains__(self, xy) -> bool:
        return tuple(xy) in set(self.solutions)

    def __len__(self) -> int:
        return len(self.solutions)

    def __iter__(self):
        return iter(self.solutions)

    @property
    def complete(self) -> bool:
        return self.completeness == EXHAUSTIVE


def verify_solution(F: BivariateIntForm, x: int, y: int) -> int:
    return F(x, y)


def _sorted_closed(sols) -> tuple[tuple[int, int], ...]:
    full = set()
    for x, y in sols:
        if (x, y) != (0, 0):
            full.add((x, y))
            full.add((-x, -y))
    return tuple(sorted(full, key=lambda s: (s[1], s[0])))


@dataclass(frozen=True)
class _RootData:
    re: float
    im: float
    dfabs: float


def _root_data(F: BivariateIntForm) -> list[_RootData]:
    ctx = mpmath.MPContext()
    ctx.dps = 60
    coeffs = [F.a, F.b, F.c, F.d]
    roots = ctx.polyroots(coeffs, maxsteps=400, extraprec=400)
    out = []
    for r in roots:
        df = ctx.polyval([3 * F.a, 2 * F.b, F.c], r)
        out.append(_RootData(float(ctx.re(r)), float(ctx.im(r)), float(abs(df))))
    return out


def _check_irreducible(F: BivariateIntForm) -> None:
    if not F.is_irreducible():
        raise DomainError(f"form {F.coeffs} is reducible over Q")


def _row_candidates(roots: list[_RootData], y: int):
    """Integers x that may satisfy |F(x, y)| <= 1 for this y >= 1."""
    y2 = y * y
    for r in roots:
        rad = 4.0 / (r.dfabs * y2) * 1.001 + 1e-9
        if abs(r.im) * y > rad + 1e-6 * y:
            continue
        c = r.re * y
        lo = math.floor(c - rad) - 1
        hi = math.ceil(c + rad) + 1
        yield from range(lo, hi + 1)


def _exhaustive_rows(F: BivariateIntForm, roots, y_max: int, x_bound: int) -> set[tuple[int, int]]:
    sols = set()
    if abs(F.a) == 1 and x_bound >= 1:
        sols.add((1, 0))
    for y in range(1, y_max + 1):
        seen = set()
        for x in _row_candidates(roots, y):
            if x in seen:
                continue
            seen.add(x)
            if abs(x) <= x_bound and abs(F(x, y)) <= 1:
                sols.add((x, y))
    return sols


def completeness_cutoff(F: BivariateIntForm, roots=None) -> int:
    """Height beyond which every solution is a convergent of a real root."""
    roots = _root_data(F) if roots is None else roots
    y0 = 1
    for r in roots:
        if abs(r.im) < 1e-30:
            y0 = max(y0, math.ceil(8.0 / r.dfabs * 1.001) + 1)
        else:
            y0 = max(y0, math.ceil((4.0 / (r.dfabs * abs(r.im))) ** (1 / 3) * 1.001) + 1)
    return y0


def solve_small(F: BivariateIntForm, B: int) -> ThueSolutionSet:
    """Complete enumeration of |F(x, y)| <= 1 with |x|, |y| <= B."""
    if B > SMALL_GUARD:
        raise ResourceError(f"exhaustive bound {B} exceeds guard {SMALL_GUARD}")
    if B < 0:
        raise DomainError("bound must be nonnegative")
    _check_irreducible(F)
    roots = _root_data(F)
    sols = _exhaustive_rows(F, roots, B, B)
    return ThueSolutionSet(_sorted_closed(sols), EXHAUSTIVE, B)


def solve_convergent(F: BivariateIntForm, B: int, cutoff: int = DEFAULT_CUTOFF) -> ThueSolutionSet:
    """Rows up to a small height exhaustively, then convergents of each real root."""
    _check_irreducible(F)
    roots = _root_data(F)
    y0 = min(B, max(cutoff, completeness_cutoff(F, roots)))
    if y0 > SMALL_GUARD:
        raise ResourceError(f"form needs exhaustive rows up to {y0}")
    sols = _exhaustive_rows(F, roots, y0, B)
    if B > y0:
        f = F.dehomogenize()
        for iv in isolate_real_roots(f):
            cf = continued_fraction_convergents(f, iv, B)
            cands = list(cf.convergents)
            qs = list(cf.partial_quotients)
            for k in range(1, len(qs) - 1):
                cands.extend(intermediate_fractions(qs, k))
            for p, q in cands:
                if q > y0 and q <= B and abs(p) <= B and abs(F(p, q)) <= 1:
                    sols.add((p, q))
    return ThueSolutionSet(_sorted_closed(sols), HEURISTIC, B)


def solve(F: BivariateIntForm, config: ThueSearchConfig) -> ThueSolutionSet:
    if config.strategy == "exhaustive":
        return solve_small(F, config.bound)
    if config.strategy == "convergent":
        return solve_convergent(F, config.bound, config.cutoff)
    small = solve_small(F, config.bound)
    conv = solve_convergent(F, config.bound, config.cutoff)
    if set(small.solutions) != set(conv.solutions):
        from .errors import InternalError

        raise InternalError(f"strategies disagree for {F.coeffs}")
    return small
