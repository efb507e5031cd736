from hypothesis import assume, given, strategies as st

from monogen.algebra import BivariateIntForm

c = st.integers(-50, 50)
unimodular = st.sampled_from([((1, 0), (0, 1)), ((0, 1), (1, 0)), ((1, 1), (0, 1)), ((2, 1), (1, 1)), ((1, -3), (0, 1)), ((-1, 0), (0, 1))])


def test_evaluation_and_text():
    F = BivariateIntForm(-138173, -137613, -44758, -4777)
    assert F(0, 1) == -4777
    assert F.dehomogenize()(2) == F(2, 1)


@given(c, c, c, c, unimodular)
def test_discriminant_invariant_under_gl2z(a, b, cc, d, m):
    F = BivariateIntForm(a, b, cc, d)
    G = F.substitute(m)
    assert G.discriminant() == F.discriminant()
    (p, q), (r, s) = m
    for x, y in [(1, 0), (0, 1), (3, -2), (5, 7)]:
        assert G(x, y) == F(p * x + q * y, r * x + s * y)


@given(c, c, c, c)
def test_linear_factor_means_reducible(p, q, r, s):
    assume((p, q) != (0, 0) and (r, s) != (0, 0))
    # (p x + q y)(r x^2 + s y^2)
    F = BivariateIntForm(p * r, q * r, p * s, q * s)
    assert F.has_rational_linear_factor()
    assert not F.is_irreducible()


def test_known_irreducible():
    assert BivariateIntForm(1, 0, 0, -2).is_irreducible()
    assert BivariateIntForm(-1, 10, -31, 1).is_irreducible()
