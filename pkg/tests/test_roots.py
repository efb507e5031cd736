from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import assume, given, strategies as st

from monogen.algebra import Poly, integer_roots, is_squarefree, isolate_real_roots, refine
from monogen.algebra.roots import isolate_real_roots_cubic, squarefree_part
from monogen.errors import DomainError

X = sp.Symbol("x")
coef = st.integers(min_value=-40, max_value=40)


def as_sympy(p):
    return sp.Poly([int(c) for c in reversed(p.coeffs)], X)


def test_integer_roots_simple():
    x = Poly.x()
    assert integer_roots(x**3 - x) == [-1, 0, 1]
    assert integer_roots((x - 7) ** 2 * (x**2 + 1)) == [7]
    assert integer_roots(Poly([1, 0, 1])) == []


def test_isolation_requires_squarefree():
    x = Poly.x()
    with pytest.raises(DomainError):
        isolate_real_roots((x - 1) ** 2)


def test_golden_ratio_bracket():
    ivs = isolate_real_roots(Poly([-1, -1, 1]))
    assert len(ivs) == 2
    r = refine(Poly([-1, -1, 1]), ivs[1], 80)
    assert r.width <= Fraction(1, 2**80)
    assert r.lo ** 2 - r.lo - 1 <= 0 <= r.hi ** 2 - r.hi - 1


def test_cubic_of_family_has_three_real_roots():
    g = Poly([1, 6, 5, 1])  # g_0
    ivs = isolate_real_roots_cubic(g)
    assert len(ivs) == 3
    assert all(iv.hi <= ivs[k + 1].lo for k, iv in enumerate(ivs[:-1]))


@given(st.lists(coef, min_size=2, max_size=7))
def test_root_count_matches_sympy(cs):
    p = Poly(cs)
    assume(p.degree >= 1)
    p = squarefree_part(p)
    assume(p.degree >= 1)
    ivs = isolate_real_roots(p)
    assert len(ivs) == len(sp.real_roots(as_sympy(p)))
    for iv in ivs:
        if iv.is_exact():
            assert p(iv.lo) == 0
        else:
            assert p.sign_at(iv.lo) * p.sign_at(iv.hi) < 0


@given(st.lists(st.integers(-12, 12), min_size=1, max_size=4), st.lists(coef, min_size=1, max_size=3))
def test_integer_roots_of_constructed_products(roots, extra):
    x = Poly.x()
    p = Poly(extra) if any(extra) else Poly([1])
    for r in roots:
        p = p * (x - r)
    expected = sorted({int(r) for r in sp.roots(as_sympy(p), filter="Z")})
    assert integer_roots(p) == expected


@given(st.lists(coef, min_size=3, max_size=5), st.integers(8, 200))
def test_refine_keeps_root_and_shrinks(cs, bits):
    p = squarefree_part(Poly(cs))
    assume(p.degree >= 1)
    for iv in isolate_real_roots(p):
        r = refine(p, iv, bits)
        assert iv.lo <= r.lo <= r.hi <= iv.hi
        assert r.width <= Fraction(1, 2**bits)
        assert r.is_exact() or p.sign_at(r.lo) * p.sign_at(r.hi) < 0


def test_squarefree_check():
    x = Poly.x()
    assert is_squarefree(x**3 - 2)
    assert not is_squarefree((x + 1) ** 2 * x)
