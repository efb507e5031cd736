import pytest
from hypothesis import given, strategies as st

from monogen.family import (
    S_members,
    assert_irreducible,
    build_instance,
    check_disc_identity,
    derive_zeta,
    f_poly,
    g_poly,
    is_in_S,
    u_of,
    v_of,
    zeta_congruence_holds,
)
from monogen.algebra import Poly

ns = st.integers(-1000, 1000)


def test_f_is_g_of_square():
    for n in (-3, 0, 7):
        x = Poly.x()
        assert g_poly(n).compose(x * x) == f_poly(n)


@given(ns)
def test_disc_identity_and_parity(n):
    assert check_disc_identity(n)
    assert (u_of(n) * v_of(n)) % 2 == 1


def test_zeta_closed_form():
    for n in range(-20, 21):
        a, b, c = derive_zeta(n)
        assert (a, b, c) == (-n**3 - 2 * n * n - 3 * n + 3, -n**3 + n * n - 5 * n + 4, 1 - n)
        assert zeta_congruence_holds(n, (a, b, c))


def test_S_count_and_membership():
    S = S_members()
    assert len(S) == 1110
    assert 140 not in S  # v(140) = 7^2 * 403
    assert not is_in_S(140)
    assert all(abs(n) > 100 for n in S)


@pytest.mark.parametrize("n", [-56, -1, 0, 13, 140, 999])
def test_irreducibility_certificate(n):
    assert_irreducible(n)
    inst = build_instance(n)
    assert inst.disc_g == inst.u**2 * inst.v**2
