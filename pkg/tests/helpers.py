"""Shared builders for random codes and lattices in the test-suite."""

from __future__ import annotations

import numpy as np

from latcode.codes import FiniteField, LinearCode, search_self_dual
from latcode.construction import ConstructionInput, build_lattice
from latcode.qfield import QuadField

# (D, p): real fields with p inert, imaginary fields with p ramified
CASES = [(5, 2), (2, 3), (2, 5), (-3, 3)]


def residue(D: int, p: int) -> tuple[QuadField, FiniteField]:
    K = QuadField(D)
    return K, FiniteField.residue_field(K, p)


def random_code(F: FiniteField, N: int, k: int, rng: np.random.Generator) -> LinearCode:
    return LinearCode(F, N, k, rng.integers(0, F.q, size=(k, N - k)))


def lattice_of(D: int, p: int, code: LinearCode, alpha=None):
    K = QuadField(D)
    return build_lattice(ConstructionInput.make(K, p, code, alpha))


def self_orthogonal_subcode(C: LinearCode, j: int) -> LinearCode:
    """First j rows of a self-dual (I | A): generator (I_j | 0 | A[:j])."""
    F, N, k = C.field, C.N, C.k
    A = np.hstack([np.zeros((j, k - j), dtype=np.int64), C.A[:j]])
    return LinearCode(F, N, j, A)


def searched(F: FiniteField, N: int, seed: int) -> LinearCode:
    return search_self_dual(F, N, seed=seed)
