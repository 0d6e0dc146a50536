"""Exact linear algebra over Q on lists of Fractions/ints."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def _to_fractions(m):
    return [[Fraction(x) for x in row] for row in m]


def row_echelon(m):
    """Reduced row echelon form. Returns (matrix, pivot columns)."""
    a = _to_fractions(m)
    if not a:
        return a, []
    n_rows, n_cols = len(a), len(a[0])
    pivots = []
    r = 0
    for c in range(n_cols):
        pr = next((i for i in range(r, n_rows) if a[i][c] != 0), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        p = a[r][c]
        a[r] = [x / p for x in a[r]]
        for i in range(n_rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return a, pivots


def rank(m: Sequence[Sequence]) -> int:
    """Rank over Q, by fraction-free elimination on integer rows."""
    rows = [list(row) for row in m if any(row)]
    if not rows:
        return 0
    if all(isinstance(x, int) for row in rows for x in row):
        return _int_rank(rows)
    return len(row_echelon(rows)[1])


def _int_rank(rows):
    # Bareiss-style elimination keeps everything integral.
    rows = [r[:] for r in rows]
    n_cols = len(rows[0])
    rk = 0
    for c in range(n_cols):
        pr = next((i for i in range(rk, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[rk], rows[pr] = rows[pr], rows[rk]
        p = rows[rk][c]
        for i in range(rk + 1, len(rows)):
            f = rows[i][c]
            if f:
                rows[i] = [p * x - f * y for x, y in zip(rows[i], rows[rk])]
        rk += 1
        if rk == len(rows):
            break
    return rk


def solve(a: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """Solve ``a @ x = b`` exactly; None if inconsistent.

    ``a`` must have full column rank for the solution to be unique; free
    variables, if any, are set to zero.
    """
    n_cols = len(a[0]) if a else 0
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    red, pivots = row_echelon(aug)
    if n_cols in pivots:
        return None
    x = [Fraction(0)] * n_cols
    for i, c in enumerate(pivots):
        x[c] = red[i][n_cols]
    return x


def inverse(a: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(a)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(a)]
    red, pivots = row_echelon(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


def matmul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def matvec(a, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def determinant(a: Sequence[Sequence]) -> Fraction:
    """Exact determinant of a square matrix."""
    m = _to_fractions(a)
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    det = Fraction(1)
    for c in range(n):
        pr = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pr is None:
            return Fraction(0)
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            det = -det
        det *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return det
