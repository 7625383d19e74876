"""Small dense linear algebra over any field-like number type.

Matrices are lists of rows. Everything works for ``Fraction`` (exactly) and
for ``complex``/``float`` (with magnitude pivoting).
"""
from __future__ import annotations

from fractions import Fraction


def identity(n: int) -> list[list]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def matmul(a: list[list], b: list[list]) -> list[list]:
    # row-by-row accumulation skipping zeros; R-matrices and Kronecker products are mostly zero
    width = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [Fraction(0)] * width
        for x, brow in zip(row, b):
            if x:
                for k, y in enumerate(brow):
                    if y:
                        acc[k] += x * y
        out.append(acc)
    return out


def kron(a: list[list], b: list[list]) -> list[list]:
    return [[x * y for x in ra for y in rb] for ra in a for rb in b]


def det(matrix: list[list]):
    """Determinant by Gaussian elimination (exact on Fractions)."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    m = [list(row) for row in matrix]
    sign = 1
    result = Fraction(1)
    for col in range(n):
        pivot = max(range(col, n), key=lambda r: abs(m[r][col]))
        if m[pivot][col] == 0:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        p = m[col][col]
        result *= p
        for r in range(col + 1, n):
            factor = m[r][col] / p
            if factor == 0:
                continue
            row, top = m[r], m[col]
            for k in range(col + 1, n):
                row[k] -= factor * top[k]
    return result * sign


def inverse(matrix: list[list]) -> list[list]:
    """Gauss-Jordan inverse; raises ZeroDivisionError on singular input."""
    n = len(matrix)
    m = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = max(range(col, n), key=lambda r: abs(m[r][col]))
        if m[pivot][col] == 0:
            raise ZeroDivisionError("singular matrix")
        m[col], m[pivot] = m[pivot], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]
