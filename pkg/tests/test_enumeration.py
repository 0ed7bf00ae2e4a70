from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from latcode.catalog import EXAMPLES
from latcode.enumeration import box_theta, enumerate_short, shortest_vectors, theta_prefix
from latcode.errors import NotPositiveDefinite

from oracles import brute_theta


def test_identity_gram():
    for n in range(1, 6):
        assert shortest_vectors(np.eye(n, dtype=int).tolist()) == (1, 2 * n)


def test_zero_dimensional_theta():
    t = theta_prefix([], 5)
    assert t.counts == (1, 0, 0, 0, 0, 0) and t.minimum is None


def test_not_positive_definite():
    with pytest.raises(NotPositiveDefinite):
        shortest_vectors([[1, 2], [2, 1]])
    with pytest.raises(NotPositiveDefinite):
        theta_prefix([[1, 0], [0, 0]], 3)


def test_rational_gram_minimum():
    G = [[Fraction(1, 2), 0], [0, Fraction(3, 2)]]
    assert shortest_vectors(G) == (Fraction(1, 2), 2)
    vecs, norms = enumerate_short(G, 2)
    # one of each +-pair: (1,0), (0,1), (1,1), (-1,1), (2,0)
    assert sorted(norms) == [Fraction(1, 2), Fraction(3, 2), 2, 2, 2]


def test_hexagonal_and_d4():
    assert theta_prefix([[2, 1], [1, 2]], 8).counts == (1, 0, 6, 0, 0, 0, 6, 0, 6)
    D4 = [[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]]
    assert theta_prefix(D4, 6).counts == (1, 0, 24, 0, 24, 0, 96)


@pytest.mark.parametrize("name,M", [("q8_1", 9), ("o6", 9), ("extremal12", 9), ("e8", 4)])
def test_theta_of_examples(name, M):
    ex = EXAMPLES[name]
    t = theta_prefix(ex.lattice().gram, M)
    assert t.counts == tuple(ex.expected["theta"][:M + 1])
    assert (t.minimum, t.kissing) == (ex.expected["mu"], ex.expected["kissing"])


def test_box_oracle_against_plain_product():
    G = [[2, 1, 0], [1, 3, 1], [0, 1, 2]]
    assert list(box_theta(G, 6).counts) == brute_theta(G, 6, 4)


@settings(max_examples=30, deadline=None)
@given(n=st.integers(1, 4), seed=st.integers(0, 10 ** 6))
def test_theta_matches_brute_force(n, seed):
    rng = np.random.default_rng(seed)
    B = np.eye(n, dtype=int) + np.tril(rng.integers(-1, 2, size=(n, n)), -1)
    G = (B @ B.T).tolist()
    t = theta_prefix(G, 5)
    assert all(c % 2 == 0 for c in t.counts[1:])
    radius = int(np.ceil(np.sqrt(5 / np.linalg.eigvalsh(np.array(G, float))[0])))
    assume((2 * radius + 1) ** n <= 5000)
    assert list(t.counts) == brute_theta(G, 5, radius)
