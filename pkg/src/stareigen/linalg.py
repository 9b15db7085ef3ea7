"""Exact integer/rational linear algebra on small dense matrices (lists of rows)."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import PreconditionError, SizeError


def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free (Bareiss) elimination; every division is exact."""
    a = [[int(x) for x in row] for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise SizeError("determinant needs a square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def _echelon(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    a = [r[:] for r in rows]
    pivots = []
    r = 0
    ncols = len(a[0]) if a else 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a, pivots


def rank(matrix: Sequence[Sequence]) -> int:
    rows = [[Fraction(x) for x in row] for row in matrix]
    if not rows:
        return 0
    return len(_echelon(rows)[1])


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    """Solve A x = b over the rationals for a non-singular square A."""
    n = len(matrix)
    if len(rhs) != n or any(len(row) != n for row in matrix):
        raise SizeError("solve needs a square matrix and a matching right-hand side")
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    red, pivots = _echelon(aug)
    if pivots != list(range(n)):
        raise PreconditionError("matrix is singular")
    return [red[i][n] for i in range(n)]


def transpose(matrix: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*matrix)]
