# toeplitz/determinant.py
# Exact determinants of small rational matrices.

from fractions import Fraction
from math import lcm
from typing import List, Sequence

from core.errors import DomainError

Matrix = Sequence[Sequence[Fraction]]


def _check_square(matrix: Matrix) -> int:
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise DomainError(f"Determinant needs a square matrix, got {n} rows of lengths {[len(r) for r in matrix]}")
    return n


def determinant(matrix: Matrix) -> Fraction:
    """Bareiss fraction-free elimination after clearing row denominators."""
    n = _check_square(matrix)
    if n == 0:
        return Fraction(1)

    scale = 1
    rows: List[List[int]] = []
    for row in matrix:
        den = lcm(*(Fraction(x).denominator for x in row))
        scale *= den
        rows.append([int(Fraction(x) * den) for x in row])
    return Fraction(integer_determinant(rows), scale)


def integer_determinant(rows: List[List[int]]) -> int:
    """Bareiss elimination in place on an integer matrix."""
    n = len(rows)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if rows[i][k] != 0), None)
            if pivot is None:
                return 0
            rows[k], rows[pivot] = rows[pivot], rows[k]
            sign = -sign
        pk = rows[k][k]
        for i in range(k + 1, n):
            rik = rows[i][k]
            row_i = rows[i]
            row_k = rows[k]
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                row_i[j] = (pk * row_i[j] - rik * row_k[j]) // prev
            row_i[k] = 0
        prev = pk
    return sign * rows[n - 1][n - 1]


def cofactor_determinant(matrix: Matrix) -> Fraction:
    """Laplace expansion along the first row; the reference oracle."""
    n = _check_square(matrix)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(matrix[0][0])
    total = Fraction(0)
    for j, entry in enumerate(matrix[0]):
        if entry == 0:
            continue
        sub = [list(row[:j]) + list(row[j + 1:]) for row in matrix[1:]]
        term = Fraction(entry) * cofactor_determinant(sub)
        total += term if j % 2 == 0 else -term
    return total
