"""Polynomials and linear algebra over F_p, plus integer Hermite normal form."""

from __future__ import annotations

from math import gcd


# --- F_p[x], coefficient lists in ascending degree ---------------------------

def fp_trim(a: list[int]) -> list[int]:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def fp_reduce(a, p: int) -> list[int]:
    return fp_trim([c % p for c in a])


def fp_sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    return fp_trim([((a[k] if k < len(a) else 0) - (b[k] if k < len(b) else 0)) % p for k in range(n)])


def fp_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return fp_trim(out)


def fp_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    b = fp_trim(b)
    if not b:
        raise ZeroDivisionError("division by zero polynomial mod p")
    r = list(fp_trim(a))
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], r
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k] * inv % p
        q[k - db] = c
        if c:
            for j, y in enumerate(b):
                r[k - db + j] = (r[k - db + j] - c * y) % p
    return fp_trim(q), fp_trim(r[:db])


def fp_monic(a: list[int], p: int) -> list[int]:
    a = fp_trim(a)
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def fp_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = fp_reduce(a, p), fp_reduce(b, p)
    while b:
        a, b = b, fp_divmod(a, b, p)[1]
    return fp_monic(a, p)


def fp_derivative(a: list[int], p: int) -> list[int]:
    return fp_trim([k * c % p for k, c in enumerate(a)][1:])


def fp_radical(a: list[int], p: int) -> list[int]:
    """Product of the distinct monic irreducible factors of a (deg a <= p
    or a' nonzero; a zero derivative is handled by taking p-th roots)."""
    a = fp_monic(a, p)
    da = fp_derivative(a, p)
    if not da:
        # a(x) = b(x^p) = b(x)^p over F_p
        root = [a[k] for k in range(0, len(a), p)]
        return fp_radical(root, p)
    g = fp_gcd(a, da, p)
    sq = fp_divmod(a, g, p)[0]
    # sq holds each factor whose multiplicity is prime to p; add the rest from g
    rest = g
    while True:
        h = fp_gcd(rest, sq, p)
        if len(h) <= 1:
            break
        rest = fp_divmod(rest, h, p)[0]
        while True:
            q, r = fp_divmod(rest, h, p)
            if r:
                break
            rest = q
    if len(rest) > 1:
        sq = fp_mul(sq, fp_radical(rest, p), p)
    return fp_monic(sq, p)


# --- linear algebra over F_p --------------------------------------------------

def fp_left_kernel(rows: list[list[int]], p: int) -> list[list[int]]:
    """Basis of {c : sum_i c_i * rows[i] = 0 (mod p)}."""
    m = len(rows)
    if m == 0:
        return []
    n = len(rows[0])
    # transpose and find the right kernel of the n x m matrix
    a = [[rows[i][j] % p for i in range(m)] for j in range(n)]
    pivots = []
    r = 0
    for col in range(m):
        piv = next((i for i in range(r, n) if a[i][col]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][col], -1, p)
        a[r] = [x * inv % p for x in a[r]]
        for i in range(n):
            if i != r and a[i][col]:
                f = a[i][col]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == n:
            break
    free = [c for c in range(m) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * m
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-a[i][fc]) % p
        basis.append(v)
    return basis


# --- integer lattices ---------------------------------------------------------

def hnf(rows: list[list[int]]) -> list[list[int]]:
    """Row Hermite normal form of a full-rank integer lattice.

    Result is square, upper triangular with positive pivots; entries above a
    pivot lie in [0, pivot).
    """
    a = [list(r) for r in rows if any(r)]
    n = len(a[0]) if a else 0
    out: list[list[int]] = []
    for col in range(n):
        # gcd-combine all remaining rows on this column
        while True:
            nz = [r for r in a if r[col] != 0]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            for r in nz[1:]:
                q = r[col] // piv[col]
                for k in range(n):
                    r[k] -= q * piv[k]
            a = [r for r in a if any(r)]
        nz = [r for r in a if r[col] != 0]
        if not nz:
            raise ValueError("lattice is not full rank")
        piv = nz[0]
        a = [r for r in a if r is not piv]
        if piv[col] < 0:
            piv = [-x for x in piv]
        out.append(piv)
    # reduce above pivots
    for i in range(n):
        for j in range(i):
            q = out[j][i] // out[i][i]
            if q:
                out[j] = [x - q * y for x, y in zip(out[j], out[i])]
    return out


def content(v) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g
