"""Exact Hermite and Smith normal forms over the integers.

Matrices are plain lists of lists of Python ints, so entries never
overflow. Ranks in this package stay below 25, which keeps the simple
elimination schemes below fast enough.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

Matrix = list[list[int]]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def as_int_matrix(rows) -> Matrix:
    return [[int(v) for v in row] for row in rows]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def determinant(a: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by Bareiss elimination."""
    m = as_int_matrix(a)
    n = len(m)
    if n == 0:
        return 1
    if any(len(row) != n for row in m):
        raise ValueError("determinant needs a square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def _combine_rows(a: Matrix, i: int, j: int, x: int, y: int, u: int, v: int) -> None:
    # rows (i, j) <- (x*ri + y*rj, u*ri + v*rj)
    ri, rj = a[i], a[j]
    a[i] = [x * p + y * q for p, q in zip(ri, rj)]
    a[j] = [u * p + v * q for p, q in zip(ri, rj)]


def hermite_normal_form(rows) -> tuple[Matrix, Matrix, int]:
    """Row-style Hermite normal form.

    Returns ``(H, T, rank)`` with ``T @ A == H``, ``T`` unimodular. The first
    ``rank`` rows of ``H`` are in echelon form with positive pivots and
    entries above each pivot reduced into ``[0, pivot)``; the remaining rows
    are zero. The nonzero part of ``H`` is a canonical basis of the row
    lattice of ``A``.
    """
    a = as_int_matrix(rows)
    m = len(a)
    n = len(a[0]) if m else 0
    t = identity(m)
    row = 0
    for col in range(n):
        if row == m:
            break
        for i in range(row + 1, m):
            b = a[i][col]
            if b == 0:
                continue
            p = a[row][col]
            g, x, y = xgcd(p, b)
            u, v = -b // g, p // g
            _combine_rows(a, row, i, x, y, u, v)
            _combine_rows(t, row, i, x, y, u, v)
        p = a[row][col]
        if p == 0:
            continue
        if p < 0:
            a[row] = [-v for v in a[row]]
            t[row] = [-v for v in t[row]]
            p = -p
        for i in range(row):
            q = a[i][col] // p
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[row])]
                t[i] = [x - q * y for x, y in zip(t[i], t[row])]
        row += 1
    return a, t, row


def smith_normal_form(rows) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form ``U @ M @ V == D``.

    ``U`` and ``V`` are unimodular, ``D`` is diagonal with nonnegative
    entries ``d_1 | d_2 | ...`` (zeros last).
    """
    d = as_int_matrix(rows)
    m = len(d)
    n = len(d[0]) if m else 0
    u = identity(m)
    v = identity(n)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for mat in (d, v):
            for row in mat:
                row[i], row[j] = row[j], row[i]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    e = d[i][j]
                    if e and (best is None or abs(e) < best[0]):
                        best = (abs(e), i, j)
            if best is None:
                break
            _, i, j = best
            if i != t:
                swap_rows(i, t)
            if j != t:
                swap_cols(j, t)
            p = d[t][t]
            dirty = False
            for i in range(t + 1, m):
                q = d[i][t] // p
                if q:
                    d[i] = [x - q * y for x, y in zip(d[i], d[t])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[t])]
                if d[i][t]:
                    dirty = True
            for j in range(t + 1, n):
                q = d[t][j] // p
                if q:
                    for mat in (d, v):
                        for row in mat:
                            row[j] -= q * row[t]
                if d[t][j]:
                    dirty = True
            if dirty:
                continue
            # pivot must divide the remaining block
            bad = next(
                (i for i in range(t + 1, m) if any(d[i][j] % p for j in range(t + 1, n))),
                None,
            )
            if bad is None:
                break
            d[t] = [x + y for x, y in zip(d[t], d[bad])]
            u[t] = [x + y for x, y in zip(u[t], u[bad])]
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
    return u, d, v


def smith_invariants(rows) -> list[int]:
    """Diagonal of the Smith normal form (length ``min(m, n)``)."""
    _, d, _ = smith_normal_form(rows)
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]


def solve_row_combination(rows, target) -> list[int] | None:
    """Integer ``y`` with ``sum(y[i] * rows[i]) == target``, or ``None``."""
    h, t, rank = hermite_normal_form(rows)
    residual = [int(x) for x in target]
    coeffs = [0] * rank
    for r in range(rank):
        col = next(c for c, x in enumerate(h[r]) if x)
        if any(residual[:col]):
            return None
        q, rem = divmod(residual[col], h[r][col])
        if rem:
            return None
        coeffs[r] = q
        residual = [x - q * y for x, y in zip(residual, h[r])]
    if any(residual):
        return None
    return [sum(c * t[r][i] for r, c in enumerate(coeffs)) for i in range(len(t))]


def common_denominator(values) -> int:
    den = 1
    for x in values:
        den = lcm(den, Fraction(x).denominator)
    return den
