"""Certificates for Construction-A lattices: integrality, parity, modularity, minimum."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import exact
from .codes import code_norm_table, is_self_dual
from .construction import ConstructionInput, KVector, LatticeDesc, pairing
from .errors import PreconditionFailed, Unsupported
from .qfield import QElem, SplitKind

CODE_ENUM_LIMIT = 10 ** 7


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"


class Verdict(enum.Enum):
    CERTIFIED = "certified"
    NOT_THIS_SIMILARITY = "not certified by the canonical similarity"


@dataclass(frozen=True)
class ModularityCertificate:
    """Outcome of testing ``L* = (1/sqrt(d)) L`` through the map ``x -> x/sqrt(d)``.

    ``T[i][j] = b(h(e_i), e_j)`` expresses the rescaled basis in the dual
    basis, so an integral ``T`` with ``|det T| = 1`` proves the equality.
    ``T`` is ``None`` when ``sqrt(d)`` does not live in the field.
    """

    level: int
    T: tuple[tuple[Fraction, ...], ...] | None
    verdict: Verdict
    reason: str = ""

    @property
    def certified(self) -> bool:
        return self.verdict is Verdict.CERTIFIED


def is_integral(latt: LatticeDesc) -> bool:
    return exact.is_integer_matrix(latt.gram)


def parity(latt: LatticeDesc) -> Parity:
    if not is_integral(latt):
        raise PreconditionFailed("parity is only defined for integral lattices")
    even = all(latt.gram[i][i] % 2 == 0 for i in range(latt.dim))
    return Parity.EVEN if even else Parity.ODD


def is_unimodular(latt: LatticeDesc) -> bool:
    return is_integral(latt) and latt.det == 1


def dual_membership(latt: LatticeDesc, x: KVector) -> bool:
    alpha = latt.meta.alpha
    return all(pairing(alpha, x, b).denominator == 1 for b in latt.kbasis)


def predict_evenness(inp: ConstructionInput) -> bool:
    """Evenness predicted from the code: d = 5 mod 8, p = 2, diag(I + A A^T) in 4 O_K."""
    K = inp.field
    if not K.is_real:
        raise Unsupported("evenness criterion is stated for real quadratic fields")
    if not is_self_dual(inp.code):
        raise PreconditionFailed("evenness criterion needs a self-dual code")
    if K.D % 8 != 5 or inp.p != 2:
        return False
    A = inp.lifted_A
    for row in A:
        diag = K(1) + sum((a * a for a in row), K(0))
        if not K.is_integral(diag * Fraction(1, 4)):
            return False
    return True


def _similarity_multiplier(latt: LatticeDesc, d: int) -> QElem | None:
    """Element s of K with s * conj(s) = 1/d, or None when sqrt(d) is not in K."""
    K = latt.meta.field
    r = math.isqrt(d)
    if r * r == d:
        return K(Fraction(1, r))
    ratio = Fraction(d, K.d)
    rn, rd = math.isqrt(ratio.numerator), math.isqrt(ratio.denominator)
    if rn * rn == ratio.numerator and rd * rd == ratio.denominator:
        # r * sqrt(D) has absolute value sqrt(d)
        return 1 / (K.sqrtD * Fraction(rn, rd))
    return None


def modularity_certificate(latt: LatticeDesc, d: int) -> ModularityCertificate:
    if d < 1:
        raise ValueError("level must be a positive integer")
    if not is_integral(latt):
        raise PreconditionFailed("modularity is only defined for integral lattices")
    s = _similarity_multiplier(latt, d)
    if s is None:
        return ModularityCertificate(d, None, Verdict.NOT_THIS_SIMILARITY,
                                     f"sqrt({d}) is not in Q(sqrt({latt.meta.field.D}))")
    alpha = latt.meta.alpha
    basis = latt.kbasis
    T = [[pairing(alpha, tuple(s * z for z in bi), bj) for bj in basis] for bi in basis]
    if not exact.is_integer_matrix(T):
        return ModularityCertificate(d, tuple(map(tuple, T)), Verdict.NOT_THIS_SIMILARITY,
                                     "rescaled lattice is not contained in the dual")
    det = exact.det(T)
    if abs(det) != 1:
        return ModularityCertificate(d, tuple(map(tuple, T)), Verdict.NOT_THIS_SIMILARITY,
                                     f"rescaled lattice has index {abs(det)} in the dual")
    return ModularityCertificate(d, tuple(map(tuple, T)), Verdict.CERTIFIED)


def code_minimum_formula(inp: ConstructionInput) -> Fraction:
    """``min(p, min over nonzero codewords of b(c_hat, c_hat))`` with balanced lifts."""
    table = code_norm_table(inp.code.field, inp.alpha)
    scale = math.lcm(*(t.denominator for t in table))
    itab = np.array([int(t * scale) for t in table], dtype=np.int64)
    best = None
    for words in inp.code.iter_codewords():
        w = itab[words].sum(axis=1)
        w = w[words.any(axis=1)]
        if len(w):
            m = int(w.min())
            best = m if best is None else min(best, m)
    code_min = Fraction(best, scale) if best is not None else None
    return Fraction(inp.p) if code_min is None else min(Fraction(inp.p), code_min)


def minimum_via_code(inp: ConstructionInput) -> int | Fraction:
    K = inp.field
    if not K.is_real or K.D % 4 not in (2, 3):
        raise Unsupported("code-based minimum needs a real field with d = 2, 3 mod 4")
    if inp.split.kind is not SplitKind.INERT or not is_self_dual(inp.code):
        raise Unsupported("code-based minimum needs a self-dual code over an inert prime")
    if inp.alpha != Fraction(1, 2 * inp.p):
        raise Unsupported("code-based minimum assumes alpha = 1/(2p)")
    if inp.code.size > CODE_ENUM_LIMIT:
        raise Unsupported(f"code has {inp.code.size} codewords, above the enumeration limit")
    m = code_minimum_formula(inp)
    return int(m) if m.denominator == 1 else m
