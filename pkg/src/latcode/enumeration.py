"""Fincke-Pohst enumeration of short lattice vectors with exact verification.

The search tree is pruned with a floating Cholesky factorisation; every
candidate's norm is then recomputed in exact integer arithmetic from the
(scaled) Gram matrix before it is counted.  Only one of each pair ``+-x`` is
generated (the last nonzero coordinate is positive); counts are doubled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import exact
from .errors import NotPositiveDefinite

PIVOT_TOL = 1e-10
RADIUS_SLACK = 1e-6


@dataclass(frozen=True)
class ScaledGram:
    """Integer Gram ``s * G`` together with the scale ``s``."""

    G: np.ndarray
    scale: int

    @classmethod
    def from_gram(cls, gram: Sequence[Sequence]) -> "ScaledGram":
        s = exact.common_denominator(gram)
        G = np.array([[int(Fraction(x) * s) for x in row] for row in gram], dtype=object)
        if G.size and max(abs(int(x)) for x in G.ravel()) < 2 ** 40:
            G = G.astype(np.int64)
        return cls(G, s)


def _check_pd(gram) -> None:
    if not exact.is_symmetric(gram) or not exact.is_positive_definite(gram):
        raise NotPositiveDefinite("Gram matrix is not symmetric positive definite")


def _cholesky(G: np.ndarray) -> tuple[list[float], list[list[float]]]:
    """Diagonal ``q_i`` and multipliers ``mu[i][j]`` with Q(x) = sum q_i (x_i + sum_j mu_ij x_j)^2."""
    L = np.linalg.cholesky(np.asarray(G, dtype=float))
    R = L.T
    d = np.diag(R)
    q = (d * d).tolist()
    if min(q) < PIVOT_TOL:
        raise NotPositiveDefinite(f"Cholesky pivot below {PIVOT_TOL}")
    mu = (R / d[:, None]).tolist()
    return q, mu


def _leaves(q, mu, bound: float):
    """DFS over levels n-1..1; yields (rest, lo, hi) for the level-0 ranges."""
    n = len(q)
    x = [0] * n
    centers = [0.0] * n  # centers[i] = -sum_{j>i} mu[i][j] x_j
    rests, los, his = [], [], []

    def descend(i: int, remaining: float, all_zero: bool):
        c = centers[i]
        width = math.sqrt(max(remaining, 0.0) / q[i])
        lo = math.ceil(c - width)
        hi = math.floor(c + width)
        if all_zero:
            lo = max(lo, 0)
        if i == 0:
            if all_zero:
                lo = max(lo, 1)
            if lo <= hi:
                rests.append(tuple(x[1:]))
                los.append(lo)
                his.append(hi)
            return
        mui = [mu[r][i] for r in range(i)]
        for v in range(lo, hi + 1):
            t = v - c
            rem = remaining - q[i] * t * t
            if rem < 0:
                continue
            x[i] = v
            for r in range(i):
                centers[r] -= mui[r] * v
            descend(i - 1, rem, all_zero and v == 0)
            for r in range(i):
                centers[r] += mui[r] * v
        x[i] = 0

    descend(n - 1, bound, True)
    return rests, los, his


def enumerate_short(gram, bound) -> tuple[np.ndarray, np.ndarray]:
    """All nonzero ``x`` (one per +-pair) with ``x^T G x <= bound``, with exact norms.

    Returns ``(vectors, norms)`` where norms are exact ``Fraction``-valued when
    the Gram matrix is not integral and ``int64`` otherwise.
    """
    _check_pd(gram)
    n = len(gram)
    if n == 0:
        return np.zeros((0, 0), dtype=np.int64), np.zeros(0, dtype=np.int64)
    sg = ScaledGram.from_gram(gram)
    ibound = math.floor(Fraction(bound) * sg.scale)
    q, mu = _cholesky(sg.G)
    fbound = ibound * (1 + RADIUS_SLACK) + 1e-9
    rests, los, his = _leaves(q, mu, fbound)
    if not rests:
        return np.zeros((0, n), dtype=np.int64), np.zeros(0, dtype=np.int64)
    G = sg.G
    rest = np.array(rests, dtype=np.int64).reshape(len(rests), n - 1)
    lo = np.array(los, dtype=np.int64)
    cnt = np.array(his, dtype=np.int64) - lo + 1
    idx = np.repeat(np.arange(len(lo)), cnt)
    offs = np.arange(cnt.sum()) - np.repeat(np.cumsum(cnt) - cnt, cnt)
    x0 = lo[idx] + offs
    R = rest[idx]
    if G.dtype == object:
        Gr = G[1:, 1:]
        b = R.astype(object) @ G[0, 1:]
        c = np.einsum("ij,jk,ik->i", R.astype(object), Gr, R.astype(object))
        norms = G[0, 0] * x0.astype(object) ** 2 + 2 * b * x0.astype(object) + c
    else:
        b = R @ G[0, 1:]
        c = np.einsum("ij,jk,ik->i", R, G[1:, 1:], R)
        norms = G[0, 0] * x0 * x0 + 2 * b * x0 + c
    keep = norms <= ibound
    vecs = np.column_stack([x0[keep], R[keep]])
    norms = norms[keep]
    if sg.scale != 1:
        norms = np.array([Fraction(int(v), sg.scale) for v in norms], dtype=object)
    return vecs, norms


def shortest_vectors(gram, upper_bound=None) -> tuple:
    """Exact minimum and number of minimal vectors (x and -x counted separately)."""
    _check_pd(gram)
    n = len(gram)
    if n == 0:
        raise ValueError("zero-dimensional lattice has no nonzero vectors")
    if upper_bound is None:
        upper_bound = min(Fraction(gram[i][i]) for i in range(n))
    _, norms = enumerate_short(gram, upper_bound)
    if len(norms) == 0:
        raise ValueError(f"no nonzero vector of norm <= {upper_bound}")
    mu = min(norms)
    kissing = 2 * int(sum(1 for v in norms if v == mu))
    mu = Fraction(mu)
    return (int(mu) if mu.denominator == 1 else mu), kissing


@dataclass(frozen=True)
class ThetaPrefix:
    M: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.M + 1:
            raise ValueError("counts must hold A_0..A_M")

    @property
    def minimum(self) -> int | None:
        return next((m for m in range(1, self.M + 1) if self.counts[m]), None)

    @property
    def kissing(self) -> int | None:
        m = self.minimum
        return None if m is None else self.counts[m]


def theta_prefix(gram, M: int) -> ThetaPrefix:
    """Counts ``A_0..A_M`` of lattice vectors of each integral norm."""
    if len(gram) == 0:
        return ThetaPrefix(M, (1,) + (0,) * M)
    _check_pd(gram)
    if not exact.is_integer_matrix(gram):
        raise ValueError("theta prefix needs an integral Gram matrix")
    _, norms = enumerate_short(gram, M)
    counts = np.bincount(np.asarray(norms, dtype=np.int64), minlength=M + 1)[: M + 1] * 2
    counts[0] = 1
    return ThetaPrefix(M, tuple(int(c) for c in counts))


def box_theta(gram, M: int) -> ThetaPrefix:
    """Brute-force theta prefix over a coordinate box (independent oracle).

    ``|x_i| <= sqrt(M * (G^-1)_ii)`` holds for every x with ``x^T G x <= M``
    (Cauchy-Schwarz in the dual basis); the smallest-eigenvalue radius
    ``sqrt(M / lambda_min)`` is used when it is tighter.
    """
    n = len(gram)
    if n == 0:
        return ThetaPrefix(M, (1,) + (0,) * M)
    G = np.array(gram, dtype=float)
    Gi = np.array(exact.to_fractions(gram), dtype=object)
    lam = np.linalg.eigvalsh(G)[0]
    inv_diag = np.diag(np.linalg.inv(G))
    radii = [int(math.floor(min(math.sqrt(M * t), math.sqrt(M / lam)) + 1e-9)) for t in inv_diag]
    axes = [np.arange(-r, r + 1) for r in radii]
    counts = [0] * (M + 1)
    Gint = np.array([[int(v) for v in row] for row in Gi], dtype=np.int64)
    # iterate over the first coordinate block to bound memory
    head, tail = axes[0], axes[1:]
    tail_grid = np.stack(np.meshgrid(*tail, indexing="ij"), -1).reshape(-1, n - 1) if tail else \
        np.zeros((1, 0), dtype=np.int64)
    for h in head:
        X = np.column_stack([np.full(len(tail_grid), h), tail_grid]).astype(np.int64)
        norms = np.einsum("ij,jk,ik->i", X, Gint, X)
        norms = norms[norms <= M]
        for m, c in zip(*np.unique(norms, return_counts=True)):
            counts[int(m)] += int(c)
    return ThetaPrefix(M, tuple(counts))
