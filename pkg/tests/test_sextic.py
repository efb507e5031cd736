import random

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st
from sympy.polys.numberfields.basis import round_two

from monogen.cubicfield import integral_basis
from monogen.golden import load_table
from monogen.sextic import (
    Candidate,
    build_sextic,
    generator_test,
    index_of_xi,
    index_report,
    j_factor_numeric,
    p_invariant,
    p_invariant_numeric,
    relative_index,
    total_index,
    total_index_numeric,
)

X = sp.Symbol("x")
coord = st.integers(-3, 3)


def sextic(n):
    return build_sextic(integral_basis(n))


@pytest.mark.parametrize("n", [0, -7, 55])
def test_DK_against_sympy(n):
    f = sp.Poly(X**6 + (n * n + 5) * X**4 + (n * n + 2 * n + 6) * X**2 + 1, X, domain="ZZ")
    assert sextic(n).D_K == round_two(f)[1]


def test_table_rows_are_generators():
    for n, entry in load_table().items():
        K = sextic(n)
        for row in entry.generators:
            ok, rep = generator_test(K, Candidate(0, *row))
            assert ok and rep.I == rep.J == rep.P == abs(rep.N) == 1


def test_non_primitive_is_index_zero():
    K = sextic(0)
    assert total_index(K, Candidate(0, 1, 2, 0, 0, 0)) == 0
    assert total_index(K, Candidate(5, 0, 0, 0, 0, 0)) == 0


def test_known_non_generator():
    K = sextic(0)
    rep = index_report(K, Candidate(0, 0, 0, 2, 0, 0))
    assert (rep.I, rep.P, rep.J) == (0, 4096, 32768)


def test_index_of_xi_small():
    vals = {n: index_of_xi(sextic(n)) for n in range(-3, 4)}
    assert vals == {-3: 25, -2: 1, -1: 1, 0: 1, 1: 1, 2: 25, 3: 121}


@settings(max_examples=30)
@given(st.sampled_from([-56, -5, 0, 6, 55]), coord, coord, coord, coord, coord, coord)
def test_index_factorization(n, x1, x2, x3, y1, y2, y3):
    K = sextic(n)
    g = Candidate(x1, x2, x3, y1, y2, y3)
    rep = index_report(K, g)
    assert rep.J == abs(rep.N) * rep.P
    if rep.I:
        assert rep.I_rel * rep.J == rep.I
        assert relative_index(K, g) == rep.I_rel


def test_x1_does_not_matter():
    K = sextic(-7)
    a = index_report(K, Candidate(0, 1, -1, 2, 3, 1))
    b = index_report(K, Candidate(17, 1, -1, 2, 3, 1))
    assert a == b


def test_numeric_oracles_agree():
    rng = random.Random(7)
    K = sextic(4)
    for _ in range(8):
        g = Candidate(*(rng.randint(-3, 3) for _ in range(6)))
        I = total_index(K, g)
        if not I:
            continue
        assert total_index_numeric(K, g) == I
        assert p_invariant_numeric(K, g) == p_invariant(K, g)
        assert j_factor_numeric(K, g) == index_report(K, g).J
