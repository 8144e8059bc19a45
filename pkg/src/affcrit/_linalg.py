from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]


def inverse(m: Sequence[Sequence[int | Fraction]]) -> Matrix:
    """Exact inverse of a square matrix by Gauss-Jordan elimination."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def matvec(m: Sequence[Sequence[int | Fraction]], v: Sequence[int | Fraction]) -> tuple[Fraction, ...]:
    return tuple(sum((Fraction(x) * y for x, y in zip(row, v)), Fraction(0)) for row in m)
