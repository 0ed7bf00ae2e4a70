"""Built-in codes for the named lattices, with their reference statistics.

Each entry records the field, prime, the non-identity block ``A`` of the
generator matrix ``(I | A)`` and the reference values the construction is
expected to reproduce.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .codes import FiniteField, LinearCode, code_from_rows
from .construction import ConstructionInput, LatticeDesc, build_lattice
from .qfield import QuadField


@dataclass(frozen=True)
class Example:
    name: str
    D: int
    p: int
    A: tuple[tuple[str, ...], ...]
    source: str
    expected: dict = field(default_factory=dict)
    notes: tuple[str, ...] = ()

    @property
    def field(self) -> QuadField:
        return QuadField(self.D)

    def residue_field(self) -> FiniteField:
        return FiniteField.residue_field(self.field, self.p)

    def code(self) -> LinearCode:
        k = len(self.A)
        rows = [["1" if i == j else "0" for j in range(k)] + list(self.A[i]) for i in range(k)]
        return code_from_rows(self.residue_field(), rows)

    def construction(self) -> ConstructionInput:
        return ConstructionInput.make(self.field, self.p, self.code())

    def lattice(self) -> LatticeDesc:
        return build_lattice(self.construction())


EXAMPLES: dict[str, Example] = {}


def _register(ex: Example) -> Example:
    EXAMPLES[ex.name] = ex
    return ex


EXTREMAL12 = _register(Example(
    name="extremal12",
    D=5, p=2,
    A=(("w", "1", "w"),
       ("0", "w+1", "w"),
       ("w+1", "w+1", "1")),
    source="new extremal 5-modular lattice, dimension 12",
    expected=dict(dim=12, d=5, mu=4, kissing=60, parity="odd", modular=True,
                  theta=(1, 0, 0, 0, 60, 288, 520, 960, 1980, 3680), chi=1.6048),
))

Q8_1 = _register(Example(
    name="q8_1",
    D=5, p=2,
    # w^2 = w + 1 and -w = w in characteristic 2
    A=(("w+1", "w"),
       ("w", "w+1")),
    source="Q8(1), 5-modular, dimension 8",
    expected=dict(dim=8, d=5, mu=4, kissing=120, parity="even", modular=True,
                  theta=(1, 0, 0, 0, 120, 0, 240, 0, 600, 0), chi=1.2970),
    notes=("the reference data lists this lattice as both even and odd; the parity "
           "reported here is computed from the Gram matrix",),
))

O6 = _register(Example(
    name="o6",
    D=6, p=7,
    A=(("2+w", "2-w"),
       ("2-w", "-2-w")),
    source="O^(6), 6-modular, dimension 8",
    expected=dict(dim=8, d=6, mu=3, kissing=16, parity="odd", modular=True,
                  theta=(1, 0, 0, 16, 24, 48, 128, 144, 216, 400), chi=1.1753),
    notes=("reference matrix is given over F_25 with w^2 = 2, but p = 7 forces F_49; "
           "built with w^2 = 6 = d mod 7, which makes the reference matrix self-dual",),
))

O3 = _register(Example(
    name="o3",
    D=3, p=5,
    A=(("w+1", "2*w+2", "2"),
       ("2*w+1", "2", "-w+2"),
       ("-w+3", "w+1", "2*w+1")),
    source="O^(3), 3-modular, dimension 12",
    expected=dict(dim=12, d=3, mu=3, kissing=64, parity="odd", modular=True,
                  theta=(1, 0, 0, 64, 372, 960, 1984, 5184, 10428, 16192), chi=1.5806),
))

O2_BW16 = _register(Example(
    name="o2_bw16",
    D=2, p=5,
    A=(("2*w+1", "4*w+1", "4*w+3", "4*w+3"),
       ("w+3", "2", "0", "3*w+4"),
       ("3*w+3", "0", "2", "4*w+4"),
       ("3*w+2", "3*w+2", "3*w+1", "1")),
    source="odd Barnes-Wall lattice O^(2), 2-modular, dimension 16",
    expected=dict(dim=16, d=2, mu=3, parity="odd", modular=True),
    notes=("entry (3,4) is given as '4a + 4'; transcribed as 4w+4",),
))

E8 = _register(Example(
    name="e8",
    D=-3, p=3,
    A=(("2", "1"),
       ("2", "2")),
    source="E8 from a ternary self-dual code over Q(sqrt(-3))",
    expected=dict(dim=8, d=1, mu=2, kissing=240, parity="even", unimodular=True,
                  theta=(1, 0, 240, 0, 2160)),
))

# codes behind the minimum-via-code examples: both are d = 2, 3 mod 4 cases
MIN_EXAMPLES = ("o6", "o2_bw16")
