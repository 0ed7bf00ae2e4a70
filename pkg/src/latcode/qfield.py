"""Exact arithmetic in quadratic fields Q(sqrt(D)).

Elements are stored as ``a + b*sqrt(D)`` with ``Fraction`` components.
The ring of integers is ``Z[v]`` with ``v = (1 + sqrt(D))/2`` when
``D = 1 mod 4`` and ``v = sqrt(D)`` otherwise.  Floats only appear in
:func:`embed`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import FieldMismatch, InvalidField, NotPrime, UnsupportedSplitting
from .exact import hnf

Rational = int | Fraction

SQRT2 = math.sqrt(2.0)


def is_squarefree(n: int) -> bool:
    n = abs(n)
    if n == 0:
        return False
    f = 2
    while f * f <= n:
        if n % (f * f) == 0:
            return False
        f += 1
    return True


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class QuadField:
    """The field Q(sqrt(D)) for squarefree ``D`` not in {0, 1}."""

    D: int

    def __post_init__(self):
        if not isinstance(self.D, int) or self.D in (0, 1) or not is_squarefree(self.D):
            raise InvalidField(f"D={self.D!r} must be a squarefree integer other than 0 and 1")

    def __repr__(self):
        return f"QuadField({self.D})"

    @property
    def is_real(self) -> bool:
        return self.D > 0

    @property
    def d(self) -> int:
        return abs(self.D)

    @property
    def disc(self) -> int:
        """Absolute value of the field discriminant."""
        return self.d if self.D % 4 == 1 else 4 * self.d

    @cached_property
    def v(self) -> "QElem":
        if self.D % 4 == 1:
            return QElem(Fraction(1, 2), Fraction(1, 2), self)
        return QElem(Fraction(0), Fraction(1), self)

    # alias matching the data-model name
    @property
    def ok_gen(self) -> "QElem":
        return self.v

    @property
    def sqrtD(self) -> "QElem":
        return QElem(Fraction(0), Fraction(1), self)

    @property
    def v_minpoly(self) -> tuple[int, int]:
        """``(t, n)`` with ``v**2 = t*v - n``, i.e. trace and norm of v."""
        if self.D % 4 == 1:
            return 1, (1 - self.D) // 4
        return 0, -self.D

    def __call__(self, a: Rational = 0, b: Rational = 0) -> "QElem":
        return QElem(Fraction(a), Fraction(b), self)

    def from_basis(self, x: Rational, y: Rational) -> "QElem":
        """The element ``x + y*v``."""
        return self(x) + self.v * Fraction(y)

    def coords(self, z: "QElem") -> tuple[Fraction, Fraction]:
        """Coordinates of ``z`` in the basis {1, v}."""
        if self.D % 4 == 1:
            return z.a - z.b, 2 * z.b
        return z.a, z.b

    def is_integral(self, z: "QElem") -> bool:
        x, y = self.coords(z)
        return x.denominator == 1 and y.denominator == 1


@dataclass(frozen=True)
class QElem:
    a: Fraction
    b: Fraction
    field: QuadField

    def __post_init__(self):
        if not isinstance(self.a, Fraction):
            object.__setattr__(self, "a", Fraction(self.a))
        if not isinstance(self.b, Fraction):
            object.__setattr__(self, "b", Fraction(self.b))

    def _coerce(self, other) -> "QElem":
        if isinstance(other, QElem):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return QElem(Fraction(other), Fraction(0), self.field)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QElem(self.a + o.a, self.b + o.b, self.field)

    __radd__ = __add__

    def __neg__(self):
        return QElem(-self.a, -self.b, self.field)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QElem(self.a - o.a, self.b - o.b, self.field)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        D = self.field.D
        return QElem(self.a * o.a + D * self.b * o.b, self.a * o.b + self.b * o.a, self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in quadratic field")
        return self._scale(self * o.conj(), 1 / n)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    @staticmethod
    def _scale(z: "QElem", s: Fraction) -> "QElem":
        return QElem(z.a * s, z.b * s, z.field)

    def __pow__(self, e: int):
        if e < 0:
            return 1 / (self ** -e)
        out = self.field(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, QElem):
            return self.field == other.field and self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.field.D))

    def conj(self) -> "QElem":
        """Galois conjugate; for imaginary fields this is complex conjugation."""
        return QElem(self.a, -self.b, self.field)

    def trace(self) -> Fraction:
        return 2 * self.a

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.field.D

    def __repr__(self):
        return f"QElem({self.a} + {self.b}*sqrt({self.field.D}))"

    def __str__(self):
        if not self.b:
            return str(self.a)
        s = f"{self.b}*sqrt({self.field.D})"
        return s if not self.a else f"{self.a} + {s}"


def trace(x: QElem) -> Fraction:
    return x.trace()


def norm(x: QElem) -> Fraction:
    return x.norm()


def make_field(D: int) -> QuadField:
    return QuadField(D)


class SplitKind(enum.Enum):
    INERT = "inert"
    RAMIFIED = "ramified"
    SPLIT = "split"


@dataclass(frozen=True)
class PrimeSplit:
    p: int
    kind: SplitKind
    f: int
    e: int


def splitting_type(field: QuadField, p: int) -> PrimeSplit:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if field.disc % p == 0:
        return PrimeSplit(p, SplitKind.RAMIFIED, f=1, e=2)
    if p == 2:
        # only reached for D = 1 mod 4
        inert = field.D % 8 == 5
    else:
        inert = pow(field.D % p, (p - 1) // 2, p) == p - 1
    if inert:
        return PrimeSplit(p, SplitKind.INERT, f=2, e=1)
    return PrimeSplit(p, SplitKind.SPLIT, f=1, e=1)


def v_residues(field: QuadField, p: int) -> list[int]:
    """Roots of the minimal polynomial of v modulo p."""
    t, n = field.v_minpoly
    return [r for r in range(p) if (r * r - t * r + n) % p == 0]


@dataclass(frozen=True)
class IdealZBasis:
    """HNF Z-basis of the prime ideal above ``p`` in coordinates of {1, v}."""

    field: QuadField
    p: int
    matrix: tuple[tuple[int, int], tuple[int, int]]

    @property
    def gens(self) -> tuple[QElem, QElem]:
        K = self.field
        return tuple(K.from_basis(x, y) for x, y in self.matrix)

    @property
    def index(self) -> int:
        (a, b), (c, d) = self.matrix
        return abs(a * d - b * c)

    def contains(self, z: QElem) -> bool:
        if not self.field.is_integral(z):
            return False
        x, y = self.field.coords(z)
        (a, b), (_, d) = self.matrix
        # upper triangular: solve u*(a, b) + w*(0, d) = (x, y)
        if x % a:
            return False
        u = x // a
        return (y - u * b) % d == 0


def ideal_basis_above(field: QuadField, p: int) -> IdealZBasis:
    sp = splitting_type(field, p)
    if sp.kind is SplitKind.SPLIT:
        raise UnsupportedSplitting(f"{p} splits in Q(sqrt({field.D}))")
    if sp.kind is SplitKind.INERT:
        return IdealZBasis(field, p, ((p, 0), (0, p)))
    (r,) = set(v_residues(field, p))
    # kernel of O_K -> F_p sending v to r
    H = hnf([[p, 0], [-r, 1]])
    return IdealZBasis(field, p, (tuple(H[0]), tuple(H[1])))


def codifferent_contains(field: QuadField, x: QElem) -> bool:
    return (x.trace().denominator == 1) and ((x * field.v).trace().denominator == 1)


def embed(x: QElem) -> tuple[float, float]:
    """Minkowski-style coordinates whose dot product is Tr(x * conj(y)).

    Real fields give ``(sigma_1(x), sigma_2(x))``; imaginary fields give
    ``(sqrt2*Re x, -sqrt2*Im x)``.
    """
    K = x.field
    r = math.sqrt(K.d)
    a, b = float(x.a), float(x.b)
    if K.is_real:
        return a + b * r, a - b * r
    return SQRT2 * a, -SQRT2 * b * r
