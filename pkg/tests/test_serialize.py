import json
from fractions import Fraction

import pytest

from latcode.catalog import EXAMPLES
from latcode.errors import LatticeFormatError
from latcode.serialize import dumps_lattice, frac_str, lattice_to_dict, loads_lattice


@pytest.mark.parametrize("name", ["extremal12", "e8", "o6"])
def test_round_trip(name):
    L = EXAMPLES[name].lattice()
    text = dumps_lattice(L)
    L2 = loads_lattice(text)
    assert L2.gram == L.gram and L2.meta.alpha == L.meta.alpha
    assert dumps_lattice(L2) == text


def test_gram_strings():
    d = lattice_to_dict(EXAMPLES["e8"].lattice())
    assert all("/" in x for row in d["gram"] for x in row)
    assert d["dim"] == 8 and d["det"] == "1/1"
    assert [[Fraction(x) for x in row] for row in d["gram"]][0][0] == 2
    assert frac_str(Fraction(-3, 6)) == "-1/2"


def test_tampered_gram_rejected():
    obj = json.loads(dumps_lattice(EXAMPLES["e8"].lattice()))
    obj["gram"][0][1] = "2/1"
    with pytest.raises(LatticeFormatError):
        loads_lattice(json.dumps(obj))


@pytest.mark.parametrize("text", ["not json", "[1, 2]", '{"D": 5}', '{"D": 5, "p": 2, "alpha": "x", "gram": [], "dim": 0, "code": {}}'])
def test_malformed_files(text):
    with pytest.raises(LatticeFormatError):
        loads_lattice(text)
