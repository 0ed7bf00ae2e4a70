import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from latcode.codes import (
    FiniteField,
    LinearCode,
    code_from_rows,
    dual_code,
    ff_matmul,
    ff_rref,
    format_code,
    is_self_dual,
    is_self_orthogonal,
    lift,
    lift_matrix,
    parse_code,
    rho,
    search_self_dual,
    standard_form,
)
from latcode.errors import CodeParseError, DivisionByZero, NotSystematic, RankDeficient, SearchFailed
from latcode.qfield import QuadField

from helpers import CASES, random_code, residue
from oracles import PolyField, brute_selfdual_length2

ALL_FIELDS = [residue(D, p)[1] for D, p in CASES] + [
    FiniteField.quadratic(3, 2), FiniteField.quadratic(5, 2), FiniteField.prime(7),
    residue(6, 7)[1], residue(3, 5)[1]]


def test_f4_omega_squared():
    F = residue(5, 2)[1]
    w = F.omega
    assert w * w == w + 1
    assert w * w + w + 1 == F(0)


def test_f25_omega_squared():
    F = FiniteField.quadratic(5, 2)
    assert F.omega * F.omega == F(2)


@pytest.mark.parametrize("F", ALL_FIELDS, ids=repr)
def test_field_tables_against_polynomial_oracle(F):
    c0, c1 = F.modulus if F.f == 2 else (0, 0)
    P = PolyField(F.p, c0, c1)
    for x in range(F.q):
        assert F.mul(x, F.inv(x)) == 1 if x else True
        for y in range(F.q):
            sx, sy = F.coords(x), F.coords(y)
            assert F.coords(F.add(x, y)) == P.add(sx, sy)
            assert F.coords(F.mul(x, y)) == P.mul(sx, sy)


def test_inverse_of_zero():
    F = residue(5, 2)[1]
    with pytest.raises(DivisionByZero):
        F.inv(0)
    with pytest.raises(ZeroDivisionError):
        F(0).inv()


def test_reducible_modulus_rejected():
    with pytest.raises(ValueError):
        FiniteField.quadratic(5, 4)


def test_standard_form_examples():
    F = residue(-3, 3)[1]
    C = standard_form(F, [[1, 0, 2, 1], [0, 1, 2, 2]])
    assert C.k == 2 and C.A.tolist() == [[2, 1], [2, 2]]
    # already systematic input is unchanged
    G = C.generator()
    assert np.array_equal(standard_form(F, G).generator(), G)
    # a non-reduced generator of the same code gives the same form
    assert standard_form(F, [[1, 1, 1, 0], [0, 1, 2, 2]]) == C
    with pytest.raises(RankDeficient):
        standard_form(F, [[1, 0, 2, 1], [1, 0, 2, 1]])
    with pytest.raises(NotSystematic):
        standard_form(F, [[0, 1, 2, 1], [0, 0, 1, 2]])


def test_dual_examples():
    F = FiniteField.prime(5)
    full = LinearCode(F, 3, 3, np.zeros((3, 0)))
    D = dual_code(full)
    assert D.k == 0 and D.size == 1
    E8code = code_from_rows(residue(-3, 3)[1], [[1, 0, 2, 1], [0, 1, 2, 2]])
    assert dual_code(E8code) == E8code
    assert is_self_dual(E8code)


def test_self_orthogonality_examples():
    F = residue(5, 2)[1]
    ext = code_from_rows(F, [["1", "0", "0", "w", "1", "w"],
                             ["0", "1", "0", "0", "w+1", "w"],
                             ["0", "0", "1", "w+1", "w+1", "1"]])
    assert is_self_dual(ext) and is_self_orthogonal(ext)
    zero = LinearCode(F, 4, 0, np.zeros((0, 4)))
    assert is_self_orthogonal(zero) and not is_self_dual(zero)
    full = LinearCode(FiniteField.prime(3), 2, 2, np.zeros((2, 0)))
    assert not is_self_orthogonal(full)


def test_lift_examples():
    K, F = residue(2, 5)
    assert F.lift(F.parse("3+4*w")) == K(-2, -1)
    assert F.lift(0) == K(0)
    K, F = residue(5, 2)
    assert F.lift(F.parse("w+1")) == K(1) + K.v == K(1.5, 0.5)


def test_rho_examples():
    K, F = residue(-3, 3)
    assert F.reduce(K(0, 1)) == 0
    K, F = residue(2, 5)
    assert not rho(F, [K(5), K(10, 15), K(0, 5)]).any()


@pytest.mark.parametrize("D,p", CASES + [(6, 7), (3, 5), (7, 5)])
def test_rho_is_ring_homomorphism(D, p):
    K, F = residue(D, p)
    rng = np.random.default_rng(abs(D) * 100 + p)
    for _ in range(50):
        x = K.from_basis(*rng.integers(-30, 30, 2).tolist())
        y = K.from_basis(*rng.integers(-30, 30, 2).tolist())
        assert F.reduce(x + y) == F.add(F.reduce(x), F.reduce(y))
        assert F.reduce(x * y) == F.mul(F.reduce(x), F.reduce(y))
    assert all(F.reduce(F.lift(x)) == x for x in range(F.q))


def test_lift_is_balanced():
    K, F = residue(6, 7)
    for x in range(F.q):
        a, b = K.coords(F.lift(x))
        assert -3 <= a <= 3 and -3 <= b <= 3


def test_search_examples():
    F = residue(5, 2)[1]
    C = search_self_dual(F, 4, seed=3)
    assert is_self_dual(C)
    F9 = FiniteField.quadratic(3, 2)
    assert brute_selfdual_length2(PolyField(3, 2, 0))
    assert is_self_dual(search_self_dual(F9, 2, seed=0))
    with pytest.raises(SearchFailed):
        search_self_dual(FiniteField.prime(3), 2)


def test_search_f3_length2_oracle():
    # over F_3 the only candidates (1, a) need 1 + a^2 = 0
    assert not any((1 + a * a) % 3 == 0 for a in range(3))


def test_search_is_deterministic():
    F = residue(2, 5)[1]
    assert search_self_dual(F, 6, seed=11) == search_self_dual(F, 6, seed=11)


def test_code_text_round_trip():
    F = residue(2, 5)[1]
    C = search_self_dual(F, 6, seed=2)
    text = format_code(C)
    assert parse_code("# comment\n" + text, F) == C


@pytest.mark.parametrize("text,line", [
    ("4 2\n1 w\n", 1),
    ("4 2 1\n1 w w\n", 2),
    ("4 2 1\n1 q\n", 2),
    ("9 2 1\n1 w\n", 1),
    ("4 3 2\n1 0 w\n", 2),
])
def test_code_parse_errors(text, line):
    F = residue(5, 2)[1]
    with pytest.raises(CodeParseError) as err:
        parse_code(text, F)
    assert err.value.line == line
    assert f"line {line}" in str(err.value)


def test_parse_rejects_typo_symbol():
    F = residue(2, 5)[1]
    with pytest.raises(ValueError):
        F.parse("4a+4")
    assert F.parse("4*w+4") == F.parse("4+4w") == F.elem(4, 4)


codes = st.tuples(st.sampled_from(range(len(ALL_FIELDS))), st.integers(1, 5), st.data())


@settings(max_examples=60, deadline=None)
@given(case=codes)
def test_code_properties(case):
    fi, N, data = case
    F = ALL_FIELDS[fi]
    if F.q ** N > 20000:
        N = 2
    k = data.draw(st.integers(0, N))
    rng = np.random.default_rng(data.draw(st.integers(0, 2 ** 32 - 1)))
    C = random_code(F, N, k, rng)
    words = C.codewords()
    H = C.parity_check()
    assert not ff_matmul(F, H, C.generator().T).any()
    try:
        Dl = dual_code(C)
    except NotSystematic:
        # the dual has no generator of the form (I | B)
        _, pivots = ff_rref(F, H)
        assert list(pivots) != list(range(N - k))
    else:
        assert C.size * Dl.size == F.q ** N
        assert dual_code(Dl) == C
        assert all(dual_code(Dl).contains(w) for w in words)
    if F.base is not None:
        for w in words[:20]:
            assert np.array_equal(rho(F, lift(C, w)), w)
    if is_self_dual(C):
        assert is_self_orthogonal(C)
    if F.base is not None:
        assert len(lift_matrix(C)) == k
