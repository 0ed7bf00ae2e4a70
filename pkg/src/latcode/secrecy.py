"""Weak secrecy gain of a d-modular lattice from a theta-series prefix."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .enumeration import ThetaPrefix, theta_prefix
from .errors import NeedLargerPrefix

GAUSS_TERMS = 8
DEFAULT_TOL = 1e-6


def gaussian_sum_1d() -> float:
    """sum over k in Z of exp(-pi k^2); terms beyond |k| = 8 are below 1e-80."""
    return 1.0 + 2.0 * sum(math.exp(-math.pi * k * k) for k in range(1, GAUSS_TERMS + 1))


@dataclass(frozen=True)
class SecrecyReport:
    n: int
    d: int
    numerator: float
    denominator: float
    chi: float
    M: int
    tail_estimate: float
    growth_factor: float


def _growth_factor(counts) -> float:
    nz = [c for c in counts[1:] if c]
    last = nz[-4:]
    ratios = [b / a for a, b in zip(last, last[1:])]
    return max([1.0] + ratios)


def _tail(counts, d: int, M: int, growth: float) -> float:
    """Heuristic bound on the theta mass beyond norm M."""
    q = math.exp(-math.pi / math.sqrt(d))
    a_last = next((c for c in reversed(counts[1:]) if c), 0)
    return a_last * q ** (M + 1) / (1 - q) * growth


def weak_secrecy_gain(theta: ThetaPrefix, d: int, n: int, tol: float = DEFAULT_TOL) -> SecrecyReport:
    """Ratio of the theta series of d^(1/4) Z^n to that of L at tau = i/sqrt(d).

    ``tail_estimate`` bounds the error on ``chi`` from truncating the theta
    series at norm ``theta.M``; a prefix whose estimate is not below ``tol``
    raises :class:`NeedLargerPrefix` with a suggested cutoff.
    """
    counts = theta.counts
    if sum(1 for c in counts[1:] if c) < 2:
        raise NeedLargerPrefix("need at least two nonzero theta coefficients", theta.M + 4)
    q = math.exp(-math.pi / math.sqrt(d))
    num = gaussian_sum_1d() ** n
    den = sum(c * q ** m for m, c in enumerate(counts))
    chi = num / den
    growth = _growth_factor(counts)
    tail = chi * _tail(counts, d, theta.M, growth) / den
    if not tail < tol:
        suggestion = theta.M + 1
        # extrapolate the last coefficient with the same growth per step
        while suggestion < theta.M + 400:
            steps = suggestion - theta.M
            a_last = next(c for c in reversed(counts[1:]) if c)
            est = chi * a_last * growth ** steps * q ** (suggestion + 1) / (1 - q) * growth / den
            if est < tol:
                break
            suggestion += 1
        raise NeedLargerPrefix(
            f"truncation error estimate {tail:.3g} exceeds tolerance {tol:g}", suggestion)
    return SecrecyReport(n=n, d=d, numerator=num, denominator=den, chi=chi, M=theta.M,
                         tail_estimate=tail, growth_factor=growth)


def secrecy_gain(gram, d: int, tol: float = DEFAULT_TOL, M: int = 10, max_M: int = 60,
                 theta: ThetaPrefix | None = None) -> tuple[SecrecyReport, ThetaPrefix]:
    """Grow the theta prefix until :func:`weak_secrecy_gain` accepts it.

    ``theta`` may hold an already computed prefix to try first.  Raises
    :class:`NeedLargerPrefix` if the cutoff would have to exceed ``max_M``.
    """
    n = len(gram)
    if theta is not None:
        M = theta.M
    while True:
        if theta is None or theta.M != M:
            theta = theta_prefix(gram, M)
        try:
            return weak_secrecy_gain(theta, d, n, tol), theta
        except NeedLargerPrefix as exc:
            if M >= max_M:
                raise
            M = min(max_M, max(M + 2, min(exc.suggested_M, M + 6)))
