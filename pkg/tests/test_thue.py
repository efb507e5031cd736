import pytest
from hypothesis import given, settings, strategies as st

from monogen.algebra import BivariateIntForm
from monogen.cubicfield import index_form, integral_basis
from monogen.errors import DomainError, ResourceError
from monogen.thue import ThueSearchConfig, solve, solve_convergent, solve_small


def family_form(n):
    return index_form(integral_basis(n)).form


def test_n0_solutions():
    F = family_form(0)
    sols = solve_small(F, 10**3)
    assert len(sols) == 18
    assert sols.complete
    assert all(abs(F(x, y)) <= 1 for x, y in sols)


def test_closed_under_negation_and_sorted():
    sols = solve_convergent(family_form(-14), 10**20)
    s = set(sols.solutions)
    assert all((-x, -y) in s for x, y in s)
    assert list(sols.solutions) == sorted(sols.solutions, key=lambda t: (t[1], t[0]))
    assert (0, 0) not in s


def test_n140_has_no_solutions():
    assert len(solve_convergent(family_form(140), 10**100)) == 0


def test_x_cubed_minus_2y_cubed():
    F = BivariateIntForm(1, 0, 0, -2)
    # x^3 - 2y^3 = +-1: (1, 0), (1, 1), (-1, -1), (-1, 0)
    assert set(solve_small(F, 1000).solutions) == {(1, 0), (-1, 0), (1, 1), (-1, -1)}
    assert set(solve_convergent(F, 10**50).solutions) == {(1, 0), (-1, 0), (1, 1), (-1, -1)}


def test_guards():
    with pytest.raises(ResourceError):
        solve_small(BivariateIntForm(1, 0, 0, -2), 10**8)
    with pytest.raises(DomainError):
        solve_small(BivariateIntForm(1, 0, -1, 0), 10)
    with pytest.raises(DomainError):
        ThueSearchConfig(bound=0)


@settings(max_examples=12)
@given(st.integers(-300, 300))
def test_strategies_agree(n):
    F = family_form(n)
    both = solve(F, ThueSearchConfig(bound=3000, strategy="both", cutoff=50))
    assert both.complete
