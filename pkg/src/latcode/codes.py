"""Finite fields F_p / F_{p^2}, linear codes in standard form, lifting and reduction.

Field elements are encoded as integers ``s + t*p`` (meaning ``s + t*w``) so
that code matrices are small ``numpy`` integer arrays and all arithmetic is
table lookup.  :class:`FFElem` wraps one encoded value for scalar use.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from .errors import (
    CodeParseError,
    DivisionByZero,
    FieldMismatch,
    InvalidInput,
    NotPrime,
    NotSystematic,
    RankDeficient,
    SearchFailed,
)
from .qfield import QElem, QuadField, SplitKind, is_prime, splitting_type, v_residues

# exhaustive enumeration of a row's solution space below this size
_EXHAUSTIVE_LIMIT = 4096


class FiniteField:
    """F_p, or F_{p^2} = F_p(w) with ``w**2 = c0 + c1*w``.

    A field built by :meth:`residue_field` is bound to a quadratic field K and
    knows how to reduce elements of O_K and lift residues back (balanced
    representatives, ``w`` lifted to the designated element ``omega_lift``).
    """

    def __init__(self, p: int, f: int = 1, modulus: tuple[int, int] | None = None,
                 omega_lift: QElem | None = None, base: QuadField | None = None):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if f not in (1, 2):
            raise ValueError("only prime fields and quadratic extensions are supported")
        self.p = p
        self.f = f
        self.q = p ** f
        if f == 2:
            if modulus is None:
                raise ValueError("F_{p^2} needs a modulus")
            c0, c1 = modulus[0] % p, modulus[1] % p
            # x^2 - c1 x - c0 must have no root in F_p
            if any((x * x - c1 * x - c0) % p == 0 for x in range(p)):
                raise InvalidInput(f"w^2 = {c0} + {c1}*w is reducible over F_{p}")
            self.modulus = (c0, c1)
        else:
            self.modulus = None
        self.omega_lift = omega_lift
        self.base = base if base is not None else (omega_lift.field if omega_lift is not None else None)
        self._build_tables()
        self._v_image = self._compute_v_image() if self.base is not None else None

    # construction helpers -------------------------------------------------

    @classmethod
    def prime(cls, p: int, base: QuadField | None = None) -> "FiniteField":
        return cls(p, 1, base=base)

    @classmethod
    def quadratic(cls, p: int, r: int, omega_lift: QElem | None = None) -> "FiniteField":
        """F_{p^2} with ``w**2 = r``."""
        return cls(p, 2, (r, 0), omega_lift=omega_lift)

    @classmethod
    def residue_field(cls, K: QuadField, p: int) -> "FiniteField":
        """O_K / P for the prime P above p (inert or ramified)."""
        sp = splitting_type(K, p)
        if sp.kind is SplitKind.RAMIFIED:
            return cls(p, 1, base=K)
        if sp.kind is SplitKind.SPLIT:
            from .errors import UnsupportedSplitting
            raise UnsupportedSplitting(f"{p} splits in Q(sqrt({K.D}))")
        if K.D % 4 == 1:
            # w is the image of v: w^2 = w - (1 - D)/4
            t, n = K.v_minpoly
            return cls(p, 2, (-n, t), omega_lift=K.v)
        return cls(p, 2, (K.D, 0), omega_lift=K.sqrtD)

    # tables ---------------------------------------------------------------

    def _build_tables(self):
        p, q = self.p, self.q
        s = np.arange(q) % p
        t = np.arange(q) // p
        S1, S2 = s[:, None], s[None, :]
        T1, T2 = t[:, None], t[None, :]
        self.add_t = ((S1 + S2) % p + ((T1 + T2) % p) * p).astype(np.int64)
        self.neg_t = ((-s) % p + ((-t) % p) * p).astype(np.int64)
        if self.f == 1:
            self.mul_t = ((S1 * S2) % p).astype(np.int64)
        else:
            c0, c1 = self.modulus
            tt = T1 * T2
            ms = (S1 * S2 + tt * c0) % p
            mt = (S1 * T2 + T1 * S2 + tt * c1) % p
            self.mul_t = (ms + mt * p).astype(np.int64)
        inv = np.zeros(q, dtype=np.int64)
        for x in range(1, q):
            (y,) = np.nonzero(self.mul_t[x] == 1)[0][:1]
            inv[x] = y
        self.inv_t = inv
        self.sub_t = self.add_t[np.arange(q)[:, None], self.neg_t[None, :]]

    # scalar api -----------------------------------------------------------

    def __repr__(self):
        if self.f == 1:
            return f"FiniteField({self.p})"
        c0, c1 = self.modulus
        return f"FiniteField({self.p}^2, w^2={c0}+{c1}*w)"

    def __eq__(self, other):
        return (isinstance(other, FiniteField) and self.p == other.p and self.f == other.f
                and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.f, self.modulus))

    def elem(self, s: int, t: int = 0) -> int:
        if self.f == 1 and t % self.p:
            raise ValueError("prime field element with nonzero w-part")
        return s % self.p + (t % self.p) * self.p

    def coords(self, x: int) -> tuple[int, int]:
        return int(x) % self.p, int(x) // self.p

    def __call__(self, s: int, t: int = 0) -> "FFElem":
        return FFElem(self, self.elem(s, t))

    @property
    def omega(self) -> "FFElem":
        return FFElem(self, self.p)

    def add(self, x: int, y: int) -> int:
        return int(self.add_t[x, y])

    def mul(self, x: int, y: int) -> int:
        return int(self.mul_t[x, y])

    def neg(self, x: int) -> int:
        return int(self.neg_t[x])

    def inv(self, x: int) -> int:
        if x == 0:
            raise DivisionByZero("inverse of zero")
        return int(self.inv_t[x])

    def balanced(self, s: int) -> int:
        """Representative in {-(p-1)/2, ..., (p-1)/2}; {0, 1} for p = 2."""
        s %= self.p
        if self.p == 2:
            return s
        return s - self.p if s > (self.p - 1) // 2 else s

    # text format ----------------------------------------------------------

    def format(self, x: int) -> str:
        s, t = self.coords(x)
        if t == 0:
            return str(s)
        tw = "w" if t == 1 else f"{t}*w"
        return tw if s == 0 else f"{s}+{tw}"

    _TERM = re.compile(r"([+-]?)(\d*)(\*?w)?")

    def parse(self, text: str) -> int:
        """Parse ``s``, ``s+t*w``, ``t*w+s``, ``w`` ... into an encoded element."""
        src = text.replace(" ", "")
        if not src:
            raise ValueError("empty field element")
        s = t = 0
        pos = 0
        while pos < len(src):
            m = self._TERM.match(src, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse field element {text!r}")
            sign, digits, wpart = m.groups()
            if not digits and not wpart:
                raise ValueError(f"cannot parse field element {text!r}")
            coef = int(digits) if digits else 1
            if sign == "-":
                coef = -coef
            if wpart:
                t += coef
            else:
                s += coef
            pos = m.end()
        if self.f == 1 and t:
            raise ValueError(f"{text!r} has a w-part but the field is F_{self.p}")
        return self.elem(s, t)

    # reduction / lifting --------------------------------------------------

    def _compute_v_image(self) -> int:
        K = self.base
        t, n = K.v_minpoly
        if self.f == 1:
            roots = v_residues(K, self.p)
            if len(set(roots)) != 1:
                raise InvalidInput(f"F_{self.p} is not the residue field of a ramified prime of {K}")
            return roots[0] % self.p
        x, y = K.coords(self.omega_lift)
        if x.denominator != 1 or y.denominator != 1 or y.numerator % self.p == 0:
            raise InvalidInput(f"omega lift {self.omega_lift} cannot define a residue map")
        # w = x + y*rho(v)
        rv = self.mul(self.add(self.p, self.elem(-int(x))), self.inv(self.elem(int(y))))
        mp = self.add(self.sub_t[self.mul(rv, rv), self.mul(self.elem(t), rv)], self.elem(n))
        if mp != 0:
            raise InvalidInput(f"omega lift {self.omega_lift} is not compatible with w^2 relation")
        return rv

    def reduce(self, z: QElem) -> int:
        """Image of an O_K element in this residue field."""
        if self.base is None:
            raise InvalidInput("field is not bound to a quadratic field")
        if z.field != self.base:
            raise FieldMismatch(f"{z.field} vs {self.base}")
        x, y = self.base.coords(z)
        if x.denominator != 1 or y.denominator != 1:
            raise InvalidInput(f"{z} is not in O_K")
        return self.add(self.elem(int(x)), self.mul(self.elem(int(y)), self._v_image))

    def lift(self, x: int) -> QElem:
        """Balanced-residue preimage ``s + t*omega_lift`` in O_K."""
        if self.base is None:
            raise InvalidInput("field is not bound to a quadratic field")
        s, t = self.coords(x)
        out = self.base(self.balanced(s))
        if t:
            out = out + self.omega_lift * self.balanced(t)
        return out


@dataclass(frozen=True, eq=False)
class FFElem:
    field: FiniteField
    value: int

    def _v(self, other) -> int:
        if isinstance(other, FFElem):
            if other.field != self.field:
                raise FieldMismatch("finite field mismatch")
            return other.value
        if isinstance(other, int):
            return self.field.elem(other)
        return NotImplemented

    def __add__(self, other):
        o = self._v(other)
        return FFElem(self.field, self.field.add(self.value, o))

    __radd__ = __add__

    def __mul__(self, other):
        o = self._v(other)
        return FFElem(self.field, self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __neg__(self):
        return FFElem(self.field, self.field.neg(self.value))

    def __sub__(self, other):
        return self + (-FFElem(self.field, self._v(other)))

    def __rsub__(self, other):
        return (-self) + other

    def inv(self) -> "FFElem":
        return FFElem(self.field, self.field.inv(self.value))

    def __truediv__(self, other):
        return self * FFElem(self.field, self._v(other)).inv()

    def __eq__(self, other):
        if isinstance(other, FFElem):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == self.field.elem(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    @property
    def s(self) -> int:
        return self.field.coords(self.value)[0]

    @property
    def t(self) -> int:
        return self.field.coords(self.value)[1]

    def __repr__(self):
        return f"FFElem({self.field.format(self.value)})"


# ---------------------------------------------------------------------------
# matrix arithmetic over F_q (encoded ints)


def ff_matmul(F: FiniteField, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    X = np.asarray(X, dtype=np.int64)
    Y = np.asarray(Y, dtype=np.int64)
    out = np.zeros((X.shape[0], Y.shape[1]), dtype=np.int64)
    for l in range(X.shape[1]):
        out = F.add_t[out, F.mul_t[X[:, l, None], Y[None, l, :]]]
    return out


def ff_rref(F: FiniteField, G: np.ndarray) -> tuple[np.ndarray, list[int]]:
    M = np.array(G, dtype=np.int64, copy=True)
    rows, cols = M.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if len(nz) == 0:
            continue
        i = r + nz[0]
        M[[r, i]] = M[[i, r]]
        M[r] = F.mul_t[F.inv_t[M[r, c]], M[r]]
        for j in range(rows):
            if j != r and M[j, c]:
                factor = M[j, c]
                M[j] = F.sub_t[M[j], F.mul_t[factor, M[r]]]
        pivots.append(c)
        r += 1
    return M[:r], pivots


def ff_nullspace(F: FiniteField, R: np.ndarray, n: int) -> np.ndarray:
    """Basis (rows) of {x : R x^T = 0} in F^n."""
    if len(R) == 0:
        return np.eye(n, dtype=np.int64)
    E, piv = ff_rref(F, R)
    free = [c for c in range(n) if c not in piv]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for b, fc in enumerate(free):
        basis[b, fc] = 1
        for r, pc in enumerate(piv):
            basis[b, pc] = F.neg_t[E[r, fc]]
    return basis


def ff_dot_rows(F: FiniteField, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """Row-wise bilinear products sum_l X[i,l]*Y[i,l]."""
    out = np.zeros(X.shape[0], dtype=np.int64)
    for l in range(X.shape[1]):
        out = F.add_t[out, F.mul_t[X[:, l], Y[:, l]]]
    return out


def all_vectors(F: FiniteField, n: int) -> np.ndarray:
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.indices((F.q,) * n).reshape(n, -1).T
    return grids.astype(np.int64)


# ---------------------------------------------------------------------------
# linear codes


class LinearCode:
    """Linear [N, k] code with generator matrix ``(I_k | A)``."""

    def __init__(self, field: FiniteField, N: int, k: int, A):
        A = np.asarray(A, dtype=np.int64).reshape(k, N - k)
        if not 0 <= k <= N:
            raise ValueError("need 0 <= k <= N")
        if A.size and (A.min() < 0 or A.max() >= field.q):
            raise ValueError("entries of A must be encoded field elements")
        A.setflags(write=False)
        self.field = field
        self.N = N
        self.k = k
        self.A = A

    def __repr__(self):
        return f"LinearCode({self.field!r}, N={self.N}, k={self.k})"

    def __eq__(self, other):
        # standard form is unique, so equal A means equal codeword sets
        return (isinstance(other, LinearCode) and self.field == other.field and self.N == other.N
                and self.k == other.k and np.array_equal(self.A, other.A))

    def __hash__(self):
        return hash((self.field, self.N, self.k, self.A.tobytes()))

    @property
    def size(self) -> int:
        return self.field.q ** self.k

    def generator(self) -> np.ndarray:
        return np.hstack([np.eye(self.k, dtype=np.int64), self.A])

    def parity_check(self) -> np.ndarray:
        F = self.field
        return np.hstack([F.neg_t[self.A.T], np.eye(self.N - self.k, dtype=np.int64)])

    def encode(self, messages: np.ndarray) -> np.ndarray:
        return ff_matmul(self.field, np.atleast_2d(messages), self.generator())

    def iter_codewords(self, chunk: int = 1 << 16) -> Iterator[np.ndarray]:
        F, k = self.field, self.k
        if k == 0:
            yield np.zeros((1, self.N), dtype=np.int64)
            return
        total = F.q ** k
        G = self.generator()
        for start in range(0, total, chunk):
            idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
            msgs = np.empty((len(idx), k), dtype=np.int64)
            for j in range(k - 1, -1, -1):
                msgs[:, j] = idx % F.q
                idx = idx // F.q
            yield ff_matmul(F, msgs, G)

    def codewords(self) -> np.ndarray:
        return np.vstack(list(self.iter_codewords()))

    def contains(self, word) -> bool:
        word = np.asarray(word, dtype=np.int64).reshape(1, self.N)
        syndrome = ff_matmul(self.field, word, self.parity_check().T)
        return not syndrome.any()

    def rows(self) -> list[list[FFElem]]:
        F = self.field
        return [[FFElem(F, int(x)) for x in row] for row in self.generator()]


def standard_form(field: FiniteField, G) -> LinearCode:
    """Row-reduce ``G`` to ``(I_k | A)`` without permuting columns."""
    G = np.asarray(G, dtype=np.int64)
    if G.ndim != 2:
        raise ValueError("generator matrix must be 2-D")
    k, N = G.shape
    E, piv = ff_rref(field, G % field.q if field.f == 1 else G)
    if len(piv) < k:
        raise RankDeficient(f"generator matrix has rank {len(piv)} < {k}")
    if piv != list(range(k)):
        raise NotSystematic(f"pivot columns {piv} are not the leading {k} columns")
    return LinearCode(field, N, k, E[:, k:])


def code_from_rows(field: FiniteField, rows: Sequence[Sequence[int | str | FFElem]]) -> LinearCode:
    """Build a code from a generator matrix given as strings, ints or FFElem."""
    enc = []
    for row in rows:
        out = []
        for x in row:
            if isinstance(x, FFElem):
                out.append(x.value)
            elif isinstance(x, str):
                out.append(field.parse(x))
            else:
                out.append(field.elem(int(x)))
        enc.append(out)
    return standard_form(field, np.array(enc, dtype=np.int64).reshape(len(enc), -1))


def dual_code(C: LinearCode) -> LinearCode:
    if C.k == C.N:
        return LinearCode(C.field, C.N, 0, np.zeros((0, C.N)))
    return standard_form(C.field, C.parity_check())


def is_self_orthogonal(C: LinearCode) -> bool:
    G = C.generator()
    return not ff_matmul(C.field, G, G.T).any()


def is_self_dual(C: LinearCode) -> bool:
    if 2 * C.k != C.N:
        return False
    F = C.field
    AAt = ff_matmul(F, C.A, C.A.T)
    I = np.eye(C.k, dtype=np.int64)
    return not F.add_t[I, AAt].any()


def lift(C: LinearCode, codeword) -> list[QElem]:
    F = C.field
    return [F.lift(int(x)) for x in np.asarray(codeword).ravel()]


def lift_matrix(C: LinearCode) -> list[list[QElem]]:
    F = C.field
    return [[F.lift(int(x)) for x in row] for row in C.A]


def rho(field: FiniteField, vector: Sequence[QElem]) -> np.ndarray:
    return np.array([field.reduce(z) for z in vector], dtype=np.int64)


def search_self_dual(field: FiniteField, N: int, seed: int = 0, budget: int = 20000) -> LinearCode:
    """Random self-dual code of length ``N`` via row-by-row completion of A.

    Row ``i`` of A must satisfy ``r_i . r_i = -1`` and ``r_i . r_j = 0`` for
    ``j < i``.  Each row is drawn from the affine solution set of the linear
    constraints, enumerated exhaustively when small; dead ends restart.
    ``budget`` caps the total number of candidate rows examined.
    """
    if N % 2 or N < 2:
        raise ValueError("self-dual codes need even N >= 2")
    F = field
    k = N // 2
    rng = np.random.default_rng(seed)
    minus_one = F.neg_t[1]
    spent = 0
    first_row_exhausted = False
    while spent < budget:
        rows = np.zeros((0, k), dtype=np.int64)
        ok = True
        for i in range(k):
            basis = ff_nullspace(F, rows, k)
            dim = len(basis)
            if dim == 0:
                ok = False
                break
            if F.q ** dim <= _EXHAUSTIVE_LIMIT:
                cand = ff_matmul(F, all_vectors(F, dim), basis)
                spent += len(cand)
                good = cand[ff_dot_rows(F, cand, cand) == minus_one]
                if len(good) == 0:
                    if i == 0:
                        first_row_exhausted = True
                    ok = False
                    break
                r = good[rng.integers(len(good))]
            else:
                r = None
                for _ in range(64 * F.q):
                    coeffs = rng.integers(0, F.q, size=(1, dim))
                    c = ff_matmul(F, coeffs, basis)
                    spent += 1
                    if ff_dot_rows(F, c, c)[0] == minus_one:
                        r = c[0]
                        break
                if r is None:
                    ok = False
                    break
            rows = np.vstack([rows, r[None, :]])
        if ok:
            code = LinearCode(F, N, k, rows)
            assert is_self_dual(code)
            return code
        if first_row_exhausted:
            break
    raise SearchFailed(f"no self-dual code of length {N} over F_{F.q} found (budget {budget})")


# ---------------------------------------------------------------------------
# plain-text code format: header "q N k", then k rows of N entries


def format_code(C: LinearCode) -> str:
    F = C.field
    lines = [f"{F.q} {C.N} {C.k}"]
    for row in C.generator():
        lines.append(" ".join(F.format(int(x)) for x in row))
    return "\n".join(lines) + "\n"


def parse_code(text: str, field: FiniteField) -> LinearCode:
    lines = [(i + 1, ln.split("#", 1)[0].strip()) for i, ln in enumerate(text.splitlines())]
    lines = [(i, ln) for i, ln in lines if ln]
    if not lines:
        raise CodeParseError("empty code file", 1)
    hline, header = lines[0]
    try:
        q, N, k = (int(x) for x in header.split())
    except ValueError:
        raise CodeParseError(f"bad header {header!r}, expected 'q N k'", hline) from None
    if q != field.q:
        raise CodeParseError(f"code is over F_{q} but the construction needs F_{field.q}", hline)
    body = lines[1:]
    if len(body) != k:
        raise CodeParseError(f"expected {k} rows, found {len(body)}", body[-1][0] if body else hline)
    rows = []
    for lineno, ln in body:
        toks = ln.replace(",", " ").split()
        if len(toks) != N:
            raise CodeParseError(f"expected {N} entries, found {len(toks)}", lineno)
        try:
            rows.append([field.parse(t) for t in toks])
        except ValueError as exc:
            raise CodeParseError(str(exc), lineno) from None
    if k == 0:
        return LinearCode(field, N, 0, np.zeros((0, N)))
    return standard_form(field, np.array(rows, dtype=np.int64))


def code_norm_table(F: FiniteField, alpha: Fraction) -> list[Fraction]:
    """``b_alpha(lift(x), lift(x))`` for every field element x.

    The conjugate enters only over an imaginary base field.
    """
    out = []
    for x in range(F.q):
        z = F.lift(x)
        zh = z if F.base.is_real else z.conj()
        out.append((alpha * z * zh).trace())
    return out
