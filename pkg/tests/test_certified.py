from fractions import Fraction

import pytest

from monogen.algebra import Poly, certified_integer, certified_product_integer, enclose_roots, precision_ceiling
from monogen.algebra.certified import START_BITS, CertifiedReal, interval_context, precision_schedule
from monogen.algebra.roots import isolate_real_roots
from monogen.errors import DomainError, ResourceError


def test_schedule_doubles_to_ceiling():
    assert list(precision_schedule(256, 2048)) == [256, 512, 1024, 2048]


def test_ceiling_env(monkeypatch):
    monkeypatch.delenv("MONOGEN_PRECISION_CEILING_BITS", raising=False)
    assert precision_ceiling() == 65536
    monkeypatch.setenv("MONOGEN_PRECISION_CEILING_BITS", "1024")
    assert precision_ceiling() == 1024
    monkeypatch.setenv("MONOGEN_PRECISION_CEILING_BITS", "16")
    with pytest.raises(DomainError):
        precision_ceiling()


def test_norm_of_cube_root_unit():
    # (1 + 2^(1/3))(1 + w 2^(1/3))(1 + w^2 2^(1/3)) = 3 computed from complex enclosures
    def evaluate(ctx):
        r = ctx.exp(ctx.log(ctx.mpf(2)) / 3)
        w = ctx.mpc(ctx.mpf(-1) / 2, ctx.sqrt(ctx.mpf(3)) / 2)
        return (1 + r) * (1 + w * r) * (1 + w * w * r)

    assert certified_integer(evaluate) == 3


def test_fixed_product_with_complex_pairs():
    assert certified_product_integer([(1, 1), (1, -1)]) == 2
    assert certified_product_integer([Fraction(3, 2), 4]) == 6


def test_escalation_hits_ceiling(monkeypatch):
    monkeypatch.setenv("MONOGEN_PRECISION_CEILING_BITS", "512")

    def evaluate(ctx):
        # exp(pi sqrt(163)) misses an integer by about 7.5e-13; the difference
        # scaled by 2^2000 needs far more than 512 bits to pin down
        x = ctx.exp(ctx.pi * ctx.sqrt(ctx.mpf(163)))
        return (x - ctx.mpf(262537412640768744)) * ctx.mpf(2) ** 2000

    with pytest.raises(ResourceError):
        certified_integer(evaluate)


def test_enclosures_contain_roots():
    g = Poly([1, 6, 5, 1])
    ctx = interval_context(START_BITS)
    encl = enclose_roots(g, isolate_real_roots(g), ctx)
    total = encl[0] + encl[1] + encl[2]
    c = CertifiedReal.from_iv(total, START_BITS)
    assert c.contains(-5) and c.rad < Fraction(1, 2**200)
