"""JSON serialization of lattices and analysis reports.

A lattice file stores the construction data (field, prime, alpha, code) and
the exact Gram matrix as ``"num/den"`` strings.  Reading rebuilds the lattice
from the construction data and refuses files whose Gram disagrees.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

import numpy as np

from .codes import FiniteField, LinearCode, code_from_rows
from .construction import ConstructionInput, LatticeDesc, build_lattice
from .errors import LatticeFormatError
from .qfield import QuadField

FORMAT_VERSION = 1


def frac_str(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_frac(s) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, TypeError, ZeroDivisionError):
        raise LatticeFormatError(f"not a rational number: {s!r}") from None


def code_to_json(C: LinearCode) -> dict:
    F = C.field
    return {
        "q": F.q,
        "N": C.N,
        "k": C.k,
        "rows": [[F.format(int(x)) for x in row] for row in C.generator()],
    }


def code_from_json(obj: dict, F: FiniteField) -> LinearCode:
    try:
        q, N, k, rows = int(obj["q"]), int(obj["N"]), int(obj["k"]), obj["rows"]
    except (KeyError, TypeError, ValueError) as exc:
        raise LatticeFormatError(f"bad code object: {exc}") from None
    if q != F.q:
        raise LatticeFormatError(f"code is over F_{q}, expected F_{F.q}")
    if len(rows) != k or any(len(r) != N for r in rows):
        raise LatticeFormatError(f"code rows do not form a {k} x {N} matrix")
    if k == 0:
        return LinearCode(F, N, 0, np.zeros((0, N), dtype=np.int64))
    try:
        return code_from_rows(F, rows)
    except ValueError as exc:
        raise LatticeFormatError(f"bad code entry: {exc}") from None


def lattice_to_dict(latt: LatticeDesc) -> dict:
    inp = latt.meta
    return {
        "format": FORMAT_VERSION,
        "D": inp.field.D,
        "p": inp.p,
        "alpha": frac_str(inp.alpha),
        "code": code_to_json(inp.code),
        "dim": latt.dim,
        "det": frac_str(latt.det),
        "gram": [[frac_str(x) for x in row] for row in latt.gram],
    }


def _dump(obj, indent: int = 0) -> str:
    """JSON with flat lists on one line, so Gram rows stay readable."""
    pad = " " * (indent + 1)
    if isinstance(obj, dict):
        items = [f"{pad}{json.dumps(k)}: {_dump(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + " " * indent + "}"
    if isinstance(obj, list) and any(isinstance(x, (list, dict)) for x in obj):
        items = [pad + _dump(x, indent + 1) for x in obj]
        return "[\n" + ",\n".join(items) + "\n" + " " * indent + "]"
    return json.dumps(obj, separators=(",", ":"))


def dumps_lattice(latt: LatticeDesc) -> str:
    return _dump(lattice_to_dict(latt)) + "\n"


def lattice_from_dict(obj: dict[str, Any]) -> LatticeDesc:
    try:
        D, p = int(obj["D"]), int(obj["p"])
        alpha = parse_frac(obj["alpha"])
        gram = [[parse_frac(x) for x in row] for row in obj["gram"]]
        dim = int(obj["dim"])
        code = obj["code"]
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, LatticeFormatError):
            raise
        raise LatticeFormatError(f"missing or malformed field: {exc}") from None
    K = QuadField(D)
    F = FiniteField.residue_field(K, p)
    C = code_from_json(code, F)
    latt = build_lattice(ConstructionInput.make(K, p, C, alpha))
    if latt.dim != dim:
        raise LatticeFormatError(f"dimension {dim} does not match the rebuilt lattice ({latt.dim})")
    if [list(r) for r in latt.gram] != gram:
        raise LatticeFormatError("stored Gram matrix does not match the rebuilt lattice")
    return latt


def loads_lattice(text: str) -> LatticeDesc:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise LatticeFormatError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise LatticeFormatError("lattice file must hold a JSON object")
    return lattice_from_dict(obj)


def dumps_report(report: dict) -> str:
    return _dump(report) + "\n"


__all__ = [
    "dumps_lattice",
    "dumps_report",
    "frac_str",
    "lattice_from_dict",
    "lattice_to_dict",
    "loads_lattice",
]
