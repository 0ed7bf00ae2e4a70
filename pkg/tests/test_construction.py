from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from latcode import exact
from latcode.analysis import dual_membership, is_integral
from latcode.catalog import EXAMPLES
from latcode.codes import FiniteField, LinearCode, ff_matmul, is_self_orthogonal, lift, rho
from latcode.construction import (
    BackendMatrices,
    ConstructionInput,
    alpha_default,
    alt_generator_selfdual,
    alt_kbasis_selfdual,
    build_lattice,
    check_volume,
    expected_discriminant,
    gram_exact,
    pairing,
    same_lattice,
)
from latcode.errors import InvalidInput, PreconditionFailed
from latcode.qfield import QuadField

from helpers import CASES, random_code, residue, searched
from oracles import det_fraction, discriminant_formula


def test_alpha_default_examples():
    assert alpha_default(QuadField(5), 2) == Fraction(1, 2)
    assert alpha_default(QuadField(6), 7) == Fraction(1, 14)
    assert alpha_default(QuadField(-3), 3) == Fraction(1, 3)
    assert alpha_default(QuadField(-1), 2) == Fraction(1, 4)
    assert alpha_default(QuadField(-7), 7) == Fraction(1, 7)


def test_extremal_lattice_volume():
    L = EXAMPLES["extremal12"].lattice()
    assert L.dim == 12 and L.det == 5 ** 6 and check_volume(L)
    assert expected_discriminant(L.meta) == Fraction(1, 4) ** 6 * 5 ** 6 * 4 ** 6


def test_e8_volume():
    L = EXAMPLES["e8"].lattice()
    assert L.dim == 8 and L.det == 1 and check_volume(L)


def test_full_space_is_block_diagonal():
    K, F = residue(2, 3)
    C = LinearCode(F, 3, 3, np.zeros((3, 0)))
    L = build_lattice(ConstructionInput.make(K, 3, C))
    a = Fraction(1, 6)
    block = [[a * (x * y).trace() for y in (K(1), K.v)] for x in (K(1), K.v)]
    for i in range(6):
        for j in range(6):
            want = block[i % 2][j % 2] if i // 2 == j // 2 else 0
            assert L.gram[i][j] == want


def test_zero_code_is_ideal_power():
    K, F = residue(5, 2)
    C = LinearCode(F, 2, 0, np.zeros((0, 2)))
    L = build_lattice(ConstructionInput.make(K, 2, C))
    assert is_integral(L) and check_volume(L)


def test_gram_exact_examples():
    K, F = residue(5, 2)
    C = LinearCode(F, 1, 1, np.zeros((1, 0)))
    assert gram_exact(ConstructionInput.make(K, 2, C, alpha=1)) == [[2, 1], [1, 3]]
    K, F = residue(-3, 3)
    C = LinearCode(F, 1, 1, np.zeros((1, 0)))
    assert gram_exact(ConstructionInput.make(K, 3, C, alpha=1)) == [[2, 1], [1, 2]]


@pytest.mark.parametrize("name", list(EXAMPLES))
def test_gram_exact_on_examples(name):
    inp = EXAMPLES[name].construction()
    G = gram_exact(inp)
    assert G == exact.transpose(G)
    assert exact.is_positive_definite(G)


def test_ok_lattice_volume():
    K, F = residue(5, 2)
    C = LinearCode(F, 1, 1, np.zeros((1, 0)))
    L = build_lattice(ConstructionInput.make(K, 2, C, alpha=1))
    assert L.det == 5 == K.disc


def test_backend_determinants():
    for D, p in CASES + [(6, 7)]:
        K, F = residue(D, p)
        inp = ConstructionInput.make(K, p, LinearCode(F, 1, 1, np.zeros((1, 0))))
        bm = BackendMatrices.for_input(inp)
        f = inp.split.f
        assert abs(abs(np.linalg.det(bm.M)) - K.disc ** 0.5) < 1e-9
        assert abs(abs(np.linalg.det(bm.Mp)) - K.disc ** 0.5 * p ** f) < 1e-9


def test_alt_generator_extremal():
    inp = EXAMPLES["extremal12"].construction()
    L = build_lattice(inp)
    assert same_lattice(inp.field, alt_kbasis_selfdual(inp), L.kbasis)
    G = alt_generator_selfdual(inp)
    assert abs(np.linalg.det(G @ G.T) - 5 ** 6) < 1e-6


def test_alt_generator_random_f9():
    K, F = residue(2, 3)
    for seed in range(4):
        C = searched(F, 4, seed)
        inp = ConstructionInput.make(K, 3, C)
        L = build_lattice(inp)
        assert same_lattice(K, alt_kbasis_selfdual(inp), L.kbasis)


def test_alt_generator_preconditions():
    K, F = residue(5, 2)
    C = LinearCode(F, 2, 0, np.zeros((0, 2)))
    with pytest.raises(PreconditionFailed):
        alt_generator_selfdual(ConstructionInput.make(K, 2, C))
    with pytest.raises(PreconditionFailed):
        alt_generator_selfdual(EXAMPLES["e8"].construction())


def test_invalid_inputs():
    K = QuadField(5)
    with pytest.raises(InvalidInput):  # 5 ramifies in Q(sqrt 5)
        ConstructionInput.make(K, 5, LinearCode(FiniteField.prime(5, base=K), 1, 1, np.zeros((1, 0))))
    E = QuadField(-3)
    F4 = FiniteField.residue_field(E, 2)  # 2 is inert in Q(sqrt -3)
    with pytest.raises(InvalidInput):
        ConstructionInput.make(E, 2, LinearCode(F4, 1, 1, np.zeros((1, 0))))
    _, F = residue(2, 3)
    with pytest.raises(InvalidInput):  # code over the wrong residue field
        ConstructionInput.make(QuadField(5), 2, LinearCode(F, 1, 1, np.zeros((1, 0))))
    with pytest.raises(InvalidInput):
        ConstructionInput.make(K, 2, LinearCode(residue(5, 2)[1], 1, 1, np.zeros((1, 0))), alpha=-1)


def _in_span(latt, vec) -> bool:
    K = latt.meta.field
    x = [[c for z in vec for c in K.coords(z)]]
    coeffs = exact.matmul(x, exact.inverse(latt.coords))
    return exact.is_integer_matrix(coeffs)


@settings(max_examples=40, deadline=None)
@given(case=st.sampled_from(CASES), N=st.integers(1, 4), data=st.data())
def test_construction_invariants(case, N, data):
    D, p = case
    K, F = residue(D, p)
    k = data.draw(st.integers(0, N))
    rng = np.random.default_rng(data.draw(st.integers(0, 2 ** 32 - 1)))
    C = random_code(F, N, k, rng)
    inp = ConstructionInput.make(K, p, C)
    L = build_lattice(inp)  # also checks genmat genmat^T against the exact Gram
    assert np.allclose(L.genmat @ L.genmat.T, np.array(L.gram, dtype=float), atol=1e-8)
    assert exact.is_positive_definite(L.gram)
    assert L.det == discriminant_formula(D, p, N, k, inp.split.f, inp.alpha)
    for b in L.kbasis:
        assert C.contains(rho(F, b))
    for row in C.generator():
        assert _in_span(L, lift(C, row))
    # dual code lifts pair integrally with the lattice
    H = C.parity_check()
    for _ in range(5):
        w = ff_matmul(F, rng.integers(0, F.q, size=(1, N - k)), H)[0]
        assert dual_membership(L, tuple(F.lift(int(x)) for x in w))
    assert is_integral(L) == is_self_orthogonal(C)
    if N <= 2:
        assert det_fraction([list(r) for r in L.gram]) == L.det


def test_pairing_is_symmetric_hermitian():
    K = QuadField(-7)
    x, y = (K(1, 2), K(3, -1)), (K(0, 1), K(2, 2))
    assert pairing(Fraction(1, 7), x, y) == pairing(Fraction(1, 7), y, x)
