from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from monogen.algebra import Poly, continued_fraction_convergents, convergents, expand_rational, isolate_real_roots
from monogen.algebra.contfrac import intermediate_fractions
from monogen.errors import DomainError


@given(st.fractions(max_denominator=10**6))
def test_expand_rational_round_trip(x):
    a = expand_rational(x)
    p, q = convergents(a)[-1]
    assert Fraction(p, q) == x


def test_cube_root_two():
    p = Poly([-2, 0, 0, 1])
    iv = isolate_real_roots(p)[0]
    cf = continued_fraction_convergents(p, iv, 10**6)
    assert cf.partial_quotients[:8] == (1, 3, 1, 5, 1, 1, 4, 1)
    assert cf.convergents[:3] == ((1, 1), (4, 3), (5, 4))
    assert all(q <= 10**6 for _, q in cf.convergents)


def test_sqrt2_partial_quotients():
    p = Poly([-2, 0, 1])
    iv = isolate_real_roots(p)[1]
    cf = continued_fraction_convergents(p, iv, 10**30)
    assert cf.partial_quotients[0] == 1 and set(cf.partial_quotients[1:]) == {2}


def test_rational_root_rejected():
    p = Poly([-1, 2])  # 2x - 1
    with pytest.raises(DomainError):
        continued_fraction_convergents(p * Poly([-3, 0, 1]), isolate_real_roots(p * Poly([-3, 0, 1]))[1], 100)


@given(st.integers(2, 10**4).filter(lambda k: round(k ** (1 / 3)) ** 3 != k), st.integers(10, 10**12))
def test_convergents_are_best_approximations(k, qmax):
    p = Poly([-k, 0, 0, 1])
    iv = isolate_real_roots(p)[0]
    theta = k ** (1 / 3)
    cf = continued_fraction_convergents(p, iv, qmax)
    for num, den in cf.convergents[:6]:
        assert abs(num / den - theta) <= 1.0 / den**2 + 1e-12


def test_intermediate_fractions_lie_between():
    qs = [1, 3, 1, 5, 1]
    inter = intermediate_fractions(qs, 2)
    assert inter == [(9, 7), (24, 19)]
    lo, hi = sorted([Fraction(4, 3), Fraction(29, 23)])
    assert all(lo < Fraction(a, b) < hi for a, b in inter)
    assert intermediate_fractions(qs, 0) == []
