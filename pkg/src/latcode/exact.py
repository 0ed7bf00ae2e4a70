"""Exact rational matrix helpers.

Matrices are plain lists (or tuples) of rows holding ``Fraction`` or ``int``.
Sizes here never exceed a few dozen rows, so Gaussian elimination over
``Fraction`` is fast enough and keeps every certification path exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

Matrix = Sequence[Sequence[Fraction | int]]


def to_fractions(A: Matrix) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in A]


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def transpose(A: Matrix) -> list[list]:
    return [list(col) for col in zip(*A)]


def matmul(A: Matrix, B: Matrix) -> list[list[Fraction]]:
    Bt = transpose(B)
    return [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in Bt] for row in A]


def det(A: Matrix) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination."""
    M = to_fractions(A)
    n = len(M)
    result = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            result = -result
        pc = M[c][c]
        result *= pc
        for r in range(c + 1, n):
            f = M[r][c] / pc
            if f:
                Mr, Mc = M[r], M[c]
                for j in range(c, n):
                    Mr[j] -= f * Mc[j]
    return result


def inverse(A: Matrix) -> list[list[Fraction]]:
    n = len(A)
    M = [row + ident for row, ident in zip(to_fractions(A), identity(n))]
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        M[c], M[piv] = M[piv], M[c]
        pc = M[c][c]
        M[c] = [x / pc for x in M[c]]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return [row[n:] for row in M]


def ldl_pivots(A: Matrix) -> list[Fraction]:
    """Diagonal of the exact LDL^T factorisation of a symmetric matrix.

    Stops early (returning the pivots computed so far) at the first
    non-positive pivot, which is all a definiteness test needs.
    """
    M = to_fractions(A)
    n = len(M)
    pivots = []
    for c in range(n):
        pc = M[c][c]
        pivots.append(pc)
        if pc <= 0:
            break
        for r in range(c + 1, n):
            f = M[r][c] / pc
            if f:
                Mr, Mc = M[r], M[c]
                for j in range(c + 1, n):
                    Mr[j] -= f * Mc[j]
    return pivots


def is_positive_definite(A: Matrix) -> bool:
    piv = ldl_pivots(A)
    return len(piv) == len(A) and all(x > 0 for x in piv)


def is_symmetric(A: Matrix) -> bool:
    n = len(A)
    return all(A[i][j] == A[j][i] for i in range(n) for j in range(i + 1, n))


def is_integer_matrix(A: Matrix) -> bool:
    return all(Fraction(x).denominator == 1 for row in A for x in row)


def common_denominator(A: Matrix) -> int:
    return lcm(1, *(Fraction(x).denominator for row in A for x in row))


def hnf(A: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row Hermite normal form of an integer matrix of full column rank.

    Upper triangular with positive pivots and entries above each pivot
    reduced into ``[0, pivot)``; zero rows are dropped.
    """
    M = [list(map(int, row)) for row in A]
    rows, cols = len(M), len(M[0]) if M else 0
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        # Euclid on column c below row r
        while True:
            nz = [i for i in range(r, rows) if M[i][c] != 0]
            if not nz:
                break
            i_min = min(nz, key=lambda i: abs(M[i][c]))
            M[r], M[i_min] = M[i_min], M[r]
            done = True
            for i in range(r + 1, rows):
                q = M[i][c] // M[r][c]
                if q:
                    M[i] = [x - q * y for x, y in zip(M[i], M[r])]
                if M[i][c] != 0:
                    done = False
            if done:
                break
        if M[r][c] == 0:
            continue
        if M[r][c] < 0:
            M[r] = [-x for x in M[r]]
        for i in range(r):
            q = M[i][c] // M[r][c]
            if q:
                M[i] = [x - q * y for x, y in zip(M[i], M[r])]
        r += 1
    return [row for row in M[:r]]
