"""Dense exact matrices as lists of lists of Fraction/int."""

from __future__ import annotations

from fractions import Fraction

from .poly import Poly, det

__all__ = ["charpoly", "det", "identity", "mat_inv", "mat_mul", "vec_mat"]


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    inner = len(b)
    cols = len(b[0])
    return [[sum((a[i][k] * b[k][j] for k in range(inner)), Fraction(0)) for j in range(cols)] for i in range(len(a))]


def vec_mat(v, m):
    """Row vector times matrix."""
    return [sum((v[k] * m[k][j] for k in range(len(v))), Fraction(0)) for j in range(len(m[0]))]


def mat_inv(m):
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def charpoly(m, var: str = "t") -> Poly:
    """det(t*I - m) by the Faddeev-LeVerrier recurrence."""
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = identity(n)
    for k in range(1, n + 1):
        am = mat_mul(a, mk)
        ck = -sum((am[i][i] for i in range(n)), Fraction(0)) / k
        coeffs[n - k] = ck
        mk = [[am[i][j] + (ck if i == j else 0) for j in range(n)] for i in range(n)]
    return Poly(coeffs, var)
