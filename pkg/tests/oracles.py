"""Independent brute-force references used to check the library.

Nothing here calls into the code under test beyond plain data access; each
helper recomputes its answer from first principles.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction


def squares_mod(p: int) -> set[int]:
    return {(x * x) % p for x in range(1, p)}


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if a in squares_mod(p) else -1


def norm_coords(D: int, x: int, y: int) -> Fraction:
    """Norm of x + y*v with v = (1+sqrt D)/2 or sqrt D."""
    if D % 4 == 1:
        a, b = Fraction(2 * x + y, 2), Fraction(y, 2)
    else:
        a, b = Fraction(x), Fraction(y)
    return a * a - b * b * D


def ideal_residues(D: int, p: int, ramified: bool) -> set[tuple[int, int]]:
    """Coordinates mod p of O_K elements lying in the prime above p.

    Inert: the prime is pO_K.  Ramified: P^2 = (p) so z in P iff p | N(z).
    """
    out = set()
    for x in range(p):
        for y in range(p):
            if ramified:
                if norm_coords(D, x, y) % p == 0:
                    out.add((x, y))
            elif x == 0 and y == 0:
                out.add((x, y))
    return out


def span_mod(rows, p: int) -> set[tuple[int, int]]:
    return {((u * rows[0][0] + w * rows[1][0]) % p, (u * rows[0][1] + w * rows[1][1]) % p)
            for u in range(p) for w in range(p)}


class PolyField:
    """F_p[w]/(w^2 - c1 w - c0) written out with tuples, for cross-checks."""

    def __init__(self, p: int, c0: int, c1: int):
        self.p, self.c0, self.c1 = p, c0 % p, c1 % p

    def elements(self):
        return [(s, t) for t in range(self.p) for s in range(self.p)]

    def add(self, x, y):
        return ((x[0] + y[0]) % self.p, (x[1] + y[1]) % self.p)

    def mul(self, x, y):
        s1, t1 = x
        s2, t2 = y
        tt = t1 * t2
        return ((s1 * s2 + tt * self.c0) % self.p, (s1 * t2 + t1 * s2 + tt * self.c1) % self.p)


def brute_selfdual_length2(F: PolyField) -> bool:
    """Is there a self-dual [2,1] code generated by (1, a)?  ((0,1) never is.)"""
    one = (1, 0)
    return any(F.add(one, F.mul(a, a)) == (0, 0) for a in F.elements())


def brute_theta(gram, M: int, radius: int) -> list[int]:
    """Count integer vectors with |x_i| <= radius and x^T G x = m for m <= M."""
    n = len(gram)
    G = [[Fraction(x) for x in row] for row in gram]
    counts = [0] * (M + 1)
    for x in itertools.product(range(-radius, radius + 1), repeat=n):
        v = sum(G[i][j] * x[i] * x[j] for i in range(n) for j in range(n))
        if v <= M and v.denominator == 1:
            counts[int(v)] += 1
    return counts


def det_fraction(A) -> Fraction:
    """Laplace expansion; only for tiny matrices."""
    n = len(A)
    if n == 1:
        return Fraction(A[0][0])
    return sum((-1) ** j * Fraction(A[0][j]) * det_fraction([row[:j] + row[j + 1:] for row in A[1:]])
               for j in range(n))


def gaussian_sum(terms: int = 30) -> float:
    return sum(math.exp(-math.pi * k * k) for k in range(-terms, terms + 1))


def discriminant_formula(D: int, p: int, N: int, k: int, f: int, alpha: Fraction) -> Fraction:
    d = abs(D)
    if D > 0:
        disc = d if d % 4 == 1 else 4 * d
    else:
        disc = 4 * d if d % 4 in (1, 2) else d
    return Fraction(disc) ** N * Fraction(p) ** (2 * f * (N - k)) * alpha ** (2 * N)
