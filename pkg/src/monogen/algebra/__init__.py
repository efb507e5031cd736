"""Exact arithmetic substrate."""

from .certified import (
    CertifiedReal,
    certified_integer,
    certified_product_integer,
    enclose_roots,
    interval_context,
    precision_ceiling,
    precision_schedule,
)
from .contfrac import ContinuedFraction, continued_fraction_convergents, convergents, expand_rational
from .forms import BivariateIntForm
from .mpoly import MPoly
from .poly import Poly, det, discriminant, gcd, is_squarefree, resultant
from .roots import RootInterval, integer_roots, isolate_real_roots, isolate_real_roots_cubic, refine

BigRationalPoly = Poly

__all__ = [
    "BigRationalPoly",
    "BivariateIntForm",
    "CertifiedReal",
    "ContinuedFraction",
    "MPoly",
    "Poly",
    "RootInterval",
    "certified_integer",
    "certified_product_integer",
    "continued_fraction_convergents",
    "convergents",
    "det",
    "discriminant",
    "enclose_roots",
    "expand_rational",
    "gcd",
    "integer_roots",
    "interval_context",
    "is_squarefree",
    "isolate_real_roots",
    "isolate_real_roots_cubic",
    "precision_ceiling",
    "precision_schedule",
    "refine",
    "resultant",
]
