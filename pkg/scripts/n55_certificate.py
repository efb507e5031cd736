"""Independent evidence that K is monogenic for n = 55.

Prints D_L, D_K and, for each generator found, its characteristic polynomial
and disc(chi)/D_K. If sympy is installed its round-2 maximal order is used as
a second opinion on the discriminants.
"""

from monogen.algebra import discriminant
from monogen.cubicfield import integral_basis
from monogen.pipeline import analyze
from monogen.sextic import Candidate, build_sextic, gamma_char_poly
from monogen.thue import ThueSearchConfig

N = 55


def main():
    o = integral_basis(N)
    K = build_sextic(o)
    print(f"n={N}: basis {o.describe_basis()}, D_L = {o.D_L}, D_K = {K.D_K}")
    try:
        import sympy as sp
        from sympy.polys.numberfields.basis import round_two

        x = sp.Symbol("x")
        f = sp.Poly(x**6 + (N * N + 5) * x**4 + (N * N + 2 * N + 6) * x**2 + 1, x, domain="ZZ")
        print(f"sympy round-2 discriminant of K: {round_two(f)[1]}")
    except ImportError:
        pass
    for g in analyze(N, ThueSearchConfig(bound=10**6)).generators:
        chi = gamma_char_poly(K, Candidate(0, *g))
        print(f"  {g}: chi = {chi}, disc(chi)/D_K = {discriminant(chi) / K.D_K}")


if __name__ == "__main__":
    main()
