"""Construction A over a quadratic field: bases, exact Gram matrices, generator matrices."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import numpy as np

from . import exact
from .codes import LinearCode, is_self_dual, lift_matrix
from .errors import InternalInconsistency, InvalidInput, PreconditionFailed
from .qfield import (
    IdealZBasis,
    PrimeSplit,
    QElem,
    QuadField,
    SplitKind,
    embed,
    ideal_basis_above,
    splitting_type,
)

KVector = tuple[QElem, ...]


def alpha_default(field: QuadField, p: int) -> Fraction:
    """1/p when O_K = Z[(1+sqrt(D))/2], else 1/(2p)."""
    if field.D % 4 == 1:
        return Fraction(1, p)
    return Fraction(1, 2 * p)


def _hconj(z: QElem) -> QElem:
    # b_alpha conjugates only in the CM case
    return z if z.field.is_real else z.conj()


def pairing(alpha: Fraction, x: KVector, y: KVector) -> Fraction:
    """The trace form sum_i Tr(alpha * x_i * conj(y_i))."""
    total = Fraction(0)
    for xi, yi in zip(x, y):
        if xi and yi:
            total += (xi * _hconj(yi)).trace()
    return alpha * total


@dataclass(frozen=True)
class ConstructionInput:
    field: QuadField
    p: int
    code: LinearCode
    alpha: Fraction
    split: PrimeSplit
    ideal: IdealZBasis

    @classmethod
    def make(cls, field: QuadField, p: int, code: LinearCode, alpha=None) -> "ConstructionInput":
        split = splitting_type(field, p)
        ideal = ideal_basis_above(field, p)  # rejects split primes
        if field.is_real and split.kind is not SplitKind.INERT:
            raise InvalidInput(f"real quadratic construction needs an inert prime; {p} is {split.kind.value}")
        if not field.is_real and split.kind is not SplitKind.RAMIFIED:
            raise InvalidInput(f"imaginary construction needs a ramified prime; {p} is {split.kind.value}")
        F = code.field
        if F.p != p or F.q != p ** split.f:
            raise InvalidInput(f"code over F_{F.q} does not match residue field of size {p ** split.f}")
        if F.base != field:
            raise InvalidInput("code field is not bound to the construction field (use FiniteField.residue_field)")
        alpha = alpha_default(field, p) if alpha is None else Fraction(alpha)
        if alpha <= 0:
            raise InvalidInput("alpha must be a positive rational")
        return cls(field, p, code, alpha, split, ideal)

    @property
    def N(self) -> int:
        return self.code.N

    @property
    def k(self) -> int:
        return self.code.k

    @cached_property
    def lifted_A(self) -> list[list[QElem]]:
        return lift_matrix(self.code)


@dataclass(frozen=True)
class BackendMatrices:
    """Per-field 2x2 blocks: O_K basis, ideal basis, and sqrt(alpha) scaling."""

    M: np.ndarray
    Mp: np.ndarray
    Dalpha: np.ndarray

    @classmethod
    def for_input(cls, inp: ConstructionInput) -> "BackendMatrices":
        K = inp.field
        M = np.array([embed(K(1)), embed(K.v)])
        Mp = np.array([embed(w) for w in inp.ideal.gens])
        Da = np.diag([float(inp.alpha) ** 0.5] * 2)
        return cls(M, Mp, Da)


@dataclass(frozen=True, eq=False)
class LatticeDesc:
    dim: int
    kbasis: tuple[KVector, ...]
    gram: tuple[tuple[Fraction, ...], ...]
    genmat: np.ndarray
    meta: ConstructionInput | None = field(default=None, repr=False)

    @cached_property
    def coords(self) -> list[list[Fraction]]:
        """Basis vectors as rows of {1, v}-coordinates, two per position."""
        K = self.meta.field
        return [[c for z in vec for c in K.coords(z)] for vec in self.kbasis]

    @cached_property
    def det(self) -> Fraction:
        return exact.det(self.gram)


def construction_kbasis(inp: ConstructionInput) -> list[KVector]:
    K, N, k = inp.field, inp.N, inp.k
    A = inp.lifted_A
    zero = K(0)
    basis = []
    for i in range(k):
        for beta in (K(1), K.v):
            vec = [zero] * N
            vec[i] = beta
            for j in range(N - k):
                vec[k + j] = beta * A[i][j]
            basis.append(tuple(vec))
    for j in range(N - k):
        for w in inp.ideal.gens:
            vec = [zero] * N
            vec[k + j] = w
            basis.append(tuple(vec))
    return basis


def pairing_gram(alpha: Fraction, basis) -> list[list[Fraction]]:
    n = len(basis)
    G = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            G[i][j] = G[j][i] = pairing(alpha, basis[i], basis[j])
    return G


def embedding_rows(alpha: Fraction, basis) -> np.ndarray:
    s = float(alpha) ** 0.5
    return np.array([[c for z in vec for c in embed(z)] for vec in basis], dtype=float).reshape(
        len(basis), -1) * s


def assemble_generator(inp: ConstructionInput) -> np.ndarray:
    """Block generator matrix [[I (x) M, A (x)~ M], [0, I (x) Mp]] (I (x) D_alpha).

    The column order inside the A-block is the one forced by requiring the
    product with its transpose to reproduce the closed-form Gram blocks: the
    parity coordinate j of the row for (message i, basis element a) carries
    the embedding of ``A_ij * v_a``.  Real case: ``(s1(A_ij) M[a,0],
    s2(A_ij) M[a,1])``.  CM case with the (Re, -Im) convention:
    ``(Re A_ij M[a,0] + Im A_ij M[a,1], Re A_ij M[a,1] - Im A_ij M[a,0])``.
    """
    bm = BackendMatrices.for_input(inp)
    K, N, k = inp.field, inp.N, inp.k
    A = inp.lifted_A
    n = 2 * N
    G = np.zeros((n, n))
    for i in range(k):
        G[2 * i:2 * i + 2, 2 * i:2 * i + 2] = bm.M
        for j in range(N - k):
            a = A[i][j]
            c = 2 * (k + j)
            if K.is_real:
                s1, s2 = embed(a)
                blk = np.column_stack([s1 * bm.M[:, 0], s2 * bm.M[:, 1]])
            else:
                re = float(a.a)
                im = float(a.b) * K.d ** 0.5
                blk = np.column_stack([re * bm.M[:, 0] + im * bm.M[:, 1],
                                       re * bm.M[:, 1] - im * bm.M[:, 0]])
            G[2 * i:2 * i + 2, c:c + 2] = blk
    for j in range(N - k):
        r = 2 * (k + j)
        G[r:r + 2, r:r + 2] = bm.Mp
    return G @ np.kron(np.eye(N), bm.Dalpha)


def build_lattice(inp: ConstructionInput) -> LatticeDesc:
    basis = construction_kbasis(inp)
    gram = pairing_gram(inp.alpha, basis)
    genmat = assemble_generator(inp)
    if not np.allclose(genmat, embedding_rows(inp.alpha, basis), atol=1e-9, rtol=0):
        raise InternalInconsistency("block generator matrix disagrees with the embedded basis")
    if gram and not np.allclose(genmat @ genmat.T, np.array(gram, dtype=float), atol=1e-8, rtol=0):
        raise InternalInconsistency("genmat genmat^T does not match the exact Gram matrix")
    return LatticeDesc(
        dim=2 * inp.N,
        kbasis=tuple(basis),
        gram=tuple(tuple(row) for row in gram),
        genmat=genmat,
        meta=inp,
    )


def gram_exact(inp: ConstructionInput) -> list[list[Fraction]]:
    """Gram matrix from the closed-form block formulas, checked against the pairing.

    Blocks (indices i,j over messages/parities, a,b over {1,v} or the ideal basis):
    ``Tr(alpha (I + A A^h)_ij v_a v_b^h)``, ``Tr(alpha A_ij v_a w_b^h)`` and
    ``Tr(alpha delta_ij w_a w_b^h)``, with ``^h`` the conjugate only for CM fields.
    """
    K, N, k, alpha = inp.field, inp.N, inp.k, inp.alpha
    A = inp.lifted_A
    vs = (K(1), K.v)
    ws = inp.ideal.gens
    m = N - k
    IAA = [[K(int(i == j)) + sum((A[i][l] * _hconj(A[j][l]) for l in range(m)), K(0))
            for j in range(k)] for i in range(k)]
    n = 2 * N
    G = [[Fraction(0)] * n for _ in range(n)]
    for i in range(k):
        for j in range(k):
            for a in range(2):
                for b in range(2):
                    G[2 * i + a][2 * j + b] = (alpha * IAA[i][j] * vs[a] * _hconj(vs[b])).trace()
        for j in range(m):
            for a in range(2):
                for b in range(2):
                    val = (alpha * A[i][j] * vs[a] * _hconj(ws[b])).trace()
                    G[2 * i + a][2 * (k + j) + b] = val
                    G[2 * (k + j) + b][2 * i + a] = val
    for j in range(m):
        for a in range(2):
            for b in range(2):
                G[2 * (k + j) + a][2 * (k + j) + b] = (alpha * ws[a] * _hconj(ws[b])).trace()
    reference = pairing_gram(alpha, construction_kbasis(inp))
    if G != reference:
        raise InternalInconsistency("closed-form Gram differs from the trace-form pairing")
    return G


def alt_kbasis_selfdual(inp: ConstructionInput) -> list[KVector]:
    """Basis rows of [[-A^T (x)~ M, I (x) M], [I (x) pM, 0]] as vectors of K^N."""
    if not inp.field.is_real:
        raise PreconditionFailed("the alternative generator is only defined for real quadratic fields")
    if inp.split.kind is not SplitKind.INERT or not is_self_dual(inp.code) or inp.k == 0:
        raise PreconditionFailed("the alternative generator needs a self-dual code over an inert prime")
    K, N, k, p = inp.field, inp.N, inp.k, inp.p
    A = inp.lifted_A
    zero = K(0)
    basis = []
    for i in range(k):
        for beta in (K(1), K.v):
            vec = [zero] * N
            for j in range(k):
                vec[j] = -(beta * A[j][i])
            vec[k + i] = beta
            basis.append(tuple(vec))
    for i in range(k):
        for beta in (K(1), K.v):
            vec = [zero] * N
            vec[i] = beta * p
            basis.append(tuple(vec))
    return basis


def alt_generator_selfdual(inp: ConstructionInput) -> np.ndarray:
    return embedding_rows(inp.alpha, alt_kbasis_selfdual(inp))


def change_of_basis(field: QuadField, basis_from, basis_to) -> list[list[Fraction]]:
    """Rational T with ``basis_from = T * basis_to`` (rows in {1,v}-coordinates)."""
    B1 = [[c for z in vec for c in field.coords(z)] for vec in basis_from]
    B2 = [[c for z in vec for c in field.coords(z)] for vec in basis_to]
    return exact.matmul(B1, exact.inverse(B2))


def same_lattice(field: QuadField, basis_a, basis_b) -> bool:
    """True when both bases span the same Z-module (integral unimodular change of basis)."""
    T = change_of_basis(field, basis_a, basis_b)
    return exact.is_integer_matrix(T) and abs(exact.det(T)) == 1


def expected_discriminant(inp: ConstructionInput) -> Fraction:
    N, k, f = inp.N, inp.k, inp.split.f
    norm_alpha = inp.alpha ** 2
    return Fraction(inp.field.disc) ** N * Fraction(inp.p) ** (2 * f * (N - k)) * norm_alpha ** N


def check_volume(latt: LatticeDesc) -> bool:
    return latt.det == expected_discriminant(latt.meta)
