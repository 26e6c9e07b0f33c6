"""Exact linear algebra over the integers and rationals.

All matrices are tuples of tuples of Python ints; intermediate rational work
uses fractions.Fraction.  Nothing here touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Mat = tuple[tuple[int, ...], ...]


def freeze(rows: Sequence[Sequence[int]]) -> Mat:
    return tuple(tuple(int(x) for x in row) for row in rows)


def identity(n: int) -> Mat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(m: Mat) -> Mat:
    return tuple(zip(*m)) if m else ()


def add(a: Mat, b: Mat) -> Mat:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def sub(a: Mat, b: Mat) -> Mat:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def neg(a: Mat) -> Mat:
    return tuple(tuple(-x for x in row) for row in a)


def scal(c: int, a: Mat) -> Mat:
    return tuple(tuple(c * x for x in row) for row in a)


def mul(a: Mat, b: Mat) -> Mat:
    bt = transpose(b)
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_vec(a: Mat, v: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def trace(a: Mat) -> int:
    return sum(a[i][i] for i in range(len(a)))


def det(a: Mat) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def rank(a: Mat) -> int:
    """Rank over Q by exact Gaussian elimination."""
    if not a:
        return 0
    m = [[Fraction(x) for x in row] for row in a]
    n_rows, n_cols = len(m), len(m[0])
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == n_rows:
            break
    return r


def inverse_unimodular(a: Mat) -> Mat:
    """Inverse of an integer matrix with determinant +-1 (exact, integral)."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        m[c], m[pivot] = m[pivot], m[c]
        inv = m[c][c]
        m[c] = [x / inv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    out = []
    for i in range(n):
        row = m[i][n:]
        if any(x.denominator != 1 for x in row):
            raise ValueError("matrix inverse is not integral")
        out.append(tuple(int(x) for x in row))
    return tuple(out)


def charpoly(a: Mat) -> tuple[int, ...]:
    """Characteristic polynomial det(tI - M), coefficients by descending power.

    Faddeev-LeVerrier over Q; the result is asserted integral.
    """
    n = len(a)
    coeffs: list[Fraction] = [Fraction(1)]
    m = [[Fraction(x) for x in row] for row in a]
    work = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # work <- M @ (work + c_{k-1} I)
        for i in range(n):
            work[i][i] += coeffs[k - 1]
        nxt = [
            [sum(m[i][l] * work[l][j] for l in range(n)) for j in range(n)]
            for i in range(n)
        ]
        work = nxt
        c = -sum(work[i][i] for i in range(n)) / k
        coeffs.append(c)
    if any(c.denominator != 1 for c in coeffs):
        raise ValueError("characteristic polynomial is not integral")
    return tuple(int(c) for c in coeffs)


def matrix_order(m: Mat, max_power: int) -> int | None:
    """Smallest k <= max_power with m^k = identity, else None."""
    n = len(m)
    ident = identity(n)
    power = m
    for k in range(1, max_power + 1):
        if power == ident:
            return k
        power = mul(power, m)
    return None


def perm_matrix(perm: Sequence[int]) -> Mat:
    """Matrix P with P e_old = e_new for perm[old] = new (0-based)."""
    n = len(perm)
    return tuple(
        tuple(1 if perm[j] == i else 0 for j in range(n)) for i in range(n)
    )


def conjugate_by_perm(a: Mat, perm: Sequence[int]) -> Mat:
    """P A P^T, i.e. A with rows and columns relabeled by perm."""
    n = len(perm)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            out[perm[i]][perm[j]] = a[i][j]
    return freeze(out)
