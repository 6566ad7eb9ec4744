"""Exact integer and rational linear algebra.

Everything here works with Python ints and ``fractions.Fraction``; nothing is
ever rounded.  Matrices are small (desk scale), so the algorithms favour
transparency over asymptotic speed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NotUnimodular

Vector = tuple[int, ...]


@dataclass(frozen=True)
class IntegerMatrix:
    """Integer matrix stored row-major as a tuple of tuples.

    Square matrices are the common case; rectangular ones appear only as
    factor maps between tori of different dimension.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(a) for a in r) for r in self.rows)
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and one column")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix rows")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def identity(cls, n: int) -> IntegerMatrix:
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> IntegerMatrix:
        return cls(tuple((0,) * ncols for _ in range(nrows)))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    @property
    def is_square(self) -> bool:
        return self.shape[0] == self.shape[1]

    @property
    def dim(self) -> int:
        if not self.is_square:
            raise DimensionMismatch(f"matrix of shape {self.shape} is not square")
        return len(self.rows)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def transpose(self) -> IntegerMatrix:
        return IntegerMatrix(tuple(zip(*self.rows)))

    @property
    def T(self) -> IntegerMatrix:
        return self.transpose()

    def __matmul__(self, other):
        if isinstance(other, IntegerMatrix):
            if self.shape[1] != other.shape[0]:
                raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
            cols = list(zip(*other.rows))
            return IntegerMatrix(
                tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.rows)
            )
        return self.apply(other)

    def apply(self, v: Sequence) -> tuple:
        """Matrix-vector product; works for int or Fraction entries of ``v``."""
        if len(v) != self.shape[1]:
            raise DimensionMismatch(f"vector of length {len(v)} for matrix {self.shape}")
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self.rows)

    def __add__(self, other: IntegerMatrix) -> IntegerMatrix:
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return IntegerMatrix(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows))
        )

    def __sub__(self, other: IntegerMatrix) -> IntegerMatrix:
        return self + (-other)

    def __neg__(self) -> IntegerMatrix:
        return IntegerMatrix(tuple(tuple(-a for a in r) for r in self.rows))

    def scale(self, k: int) -> IntegerMatrix:
        return IntegerMatrix(tuple(tuple(k * a for a in r) for r in self.rows))

    def minus_identity(self) -> IntegerMatrix:
        return self - IntegerMatrix.identity(self.dim)

    def is_identity(self) -> bool:
        return self == IntegerMatrix.identity(self.dim)

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.dim))

    def det(self) -> int:
        return determinant(self)

    def __pow__(self, k: int) -> IntegerMatrix:
        base = self if k >= 0 else unimodular_inverse(self)
        k = abs(k)
        result = IntegerMatrix.identity(self.dim)
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(map(str, r)) + "]" for r in self.rows) + "]"


def as_matrix(m) -> IntegerMatrix:
    return m if isinstance(m, IntegerMatrix) else IntegerMatrix(tuple(map(tuple, m)))


def determinant(M: IntegerMatrix) -> int:
    """Fraction-free Bareiss elimination."""
    n = M.dim
    a = [list(r) for r in M.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def unimodular_inverse(M: IntegerMatrix) -> IntegerMatrix:
    d = determinant(M)
    if abs(d) != 1:
        raise NotUnimodular(f"determinant {d} for matrix {M}")
    n = M.dim
    aug = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
           for i, r in enumerate(M.rows)]
    red, _ = rref(aug, 2 * n)
    inv = tuple(tuple(int(x) for x in row[n:]) for row in red)
    return IntegerMatrix(inv)


# --- polynomials -----------------------------------------------------------


@dataclass(frozen=True)
class IntegerPolynomial:
    """Polynomial with integer coefficients, ``coeffs[i]`` multiplying x**i."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = [int(a) for a in self.coeffs]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        if not c:
            c = [0]
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_descending(cls, *coeffs_high_to_low: int) -> IntegerPolynomial:
        return cls(tuple(reversed(coeffs_high_to_low)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return self.leading == 1

    def __call__(self, x):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def __mul__(self, other: IntegerPolynomial) -> IntegerPolynomial:
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntegerPolynomial(tuple(out))

    def divmod_monic(self, d: IntegerPolynomial) -> tuple[IntegerPolynomial, IntegerPolynomial]:
        """Division with remainder by a monic divisor; exact in Z[x]."""
        if not d.is_monic():
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        dd = d.degree
        if self.degree < dd:
            return IntegerPolynomial((0,)), self
        quot = [0] * (self.degree - dd + 1)
        for k in range(self.degree - dd, -1, -1):
            q = rem[k + dd]
            quot[k] = q
            if q:
                for j, b in enumerate(d.coeffs):
                    rem[k + j] -= q * b
        return IntegerPolynomial(tuple(quot)), IntegerPolynomial(tuple(rem[:dd] or [0]))

    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    def __str__(self) -> str:
        terms = []
        for i in range(self.degree, -1, -1):
            a = self.coeffs[i]
            if a == 0 and self.degree > 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            mag = abs(a)
            body = mono if (mag == 1 and mono) else f"{mag}{mono}"
            sign = "-" if a < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def charpoly(M: IntegerMatrix) -> IntegerPolynomial:
    """det(xI - M) by Faddeev-LeVerrier; every division is exact over Z."""
    n = M.dim
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    ident = IntegerMatrix.identity(n)
    Mk = IntegerMatrix.zeros(n, n)
    for k in range(1, n + 1):
        Mk = M @ Mk + ident.scale(coeffs[n - k + 1])
        t = (M @ Mk).trace()
        q, r = divmod(-t, k)
        assert r == 0, "Faddeev-LeVerrier division must be exact"
        coeffs[n - k] = q
    return IntegerPolynomial(tuple(coeffs))


# --- rational subspaces ----------------------------------------------------


def rref(rows: Sequence[Sequence], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q. Zero rows are dropped."""
    a = [[Fraction(x) for x in r] for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        pv = a[r][c]
        a[r] = [x / pv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def primitive(v: Sequence) -> Vector:
    """Scale a rational vector to an integer vector with content 1.

    The sign is kept, so a vector whose first nonzero entry is positive stays so.
    """
    fr = [Fraction(x) for x in v]
    den = reduce(lcm, (x.denominator for x in fr), 1)
    ints = [int(x * den) for x in fr]
    g = reduce(gcd, ints, 0)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


@dataclass(frozen=True)
class RationalSubspace:
    """Subspace of Q^m held as its reduced row echelon basis."""

    ambient_dim: int
    basis: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> RationalSubspace:
        vecs = [tuple(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise DimensionMismatch(f"vector of length {len(v)} in Q^{ambient_dim}")
        red, _ = rref(vecs, ambient_dim)
        return cls(ambient_dim, tuple(tuple(r) for r in red))

    @classmethod
    def full(cls, m: int) -> RationalSubspace:
        return cls.span(IntegerMatrix.identity(m).rows, m)

    @classmethod
    def zero(cls, m: int) -> RationalSubspace:
        return cls(m, ())

    @property
    def rank(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return self.rank == 0

    def is_full(self) -> bool:
        return self.rank == self.ambient_dim

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} in Q^{self.ambient_dim}")
        rest = [Fraction(x) for x in v]
        for row in self.basis:
            p = next(i for i, x in enumerate(row) if x != 0)
            f = rest[p]
            if f:
                rest = [a - f * b for a, b in zip(rest, row)]
        return not any(rest)

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def integer_basis(self) -> list[Vector]:
        return [primitive(r) for r in self.basis]

    def annihilator(self) -> RationalSubspace:
        """Vectors w with w . u = 0 for every u in the subspace."""
        if self.is_zero():
            return RationalSubspace.full(self.ambient_dim)
        return rational_kernel(self.basis, self.ambient_dim)

    def is_invariant_under(self, M: IntegerMatrix) -> bool:
        return all(self.contains(M.apply(b)) for b in self.basis)


def rational_kernel(M, ncols: int | None = None) -> RationalSubspace:
    """{v in Q^n : M v = 0} for an integer (or rational) rectangular matrix."""
    rows = M.rows if isinstance(M, IntegerMatrix) else tuple(tuple(r) for r in M)
    if ncols is None:
        if not rows:
            raise ValueError("ncols is required for a matrix with no rows")
        ncols = len(rows[0])
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    vecs = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        vecs.append(v)
    return RationalSubspace.span(vecs, ncols)


def intersect_subspaces(subspaces: Sequence[RationalSubspace]) -> RationalSubspace:
    if not subspaces:
        raise ValueError("need at least one subspace")
    m = subspaces[0].ambient_dim
    if any(s.ambient_dim != m for s in subspaces):
        raise DimensionMismatch("subspaces live in different ambient spaces")
    constraints = [row for s in subspaces for row in s.annihilator().basis]
    if not constraints:
        return RationalSubspace.full(m)
    return rational_kernel(constraints, m)


def matrix_rank(M, ncols: int | None = None) -> int:
    rows = M.rows if isinstance(M, IntegerMatrix) else tuple(tuple(r) for r in M)
    if not rows:
        return 0
    return len(rref(rows, ncols or len(rows[0]))[0])


# --- lattices --------------------------------------------------------------


def hermite_rows(vectors: Iterable[Sequence[int]], ncols: int) -> list[list[int]]:
    """Row-style Hermite normal form of the lattice spanned by ``vectors``.

    Echelon with positive pivots; entries above a pivot p lie in [0, p).
    Zero rows are dropped, so the result is a basis.
    """
    a = [list(map(int, v)) for v in vectors]
    r = 0
    for c in range(ncols):
        while True:
            nz = [i for i in range(r, len(a)) if a[i][c] != 0]
            if not nz:
                break
            i_min = min(nz, key=lambda i: abs(a[i][c]))
            a[r], a[i_min] = a[i_min], a[r]
            clean = True
            for i in range(r + 1, len(a)):
                if a[i][c]:
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    if a[i][c]:
                        clean = False
            if clean:
                break
        if r < len(a) and a[r][c] != 0:
            if a[r][c] < 0:
                a[r] = [-x for x in a[r]]
            p = a[r][c]
            for i in range(r):
                q = a[i][c] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
            r += 1
            if r == len(a):
                break
    return a[:r]


def integer_kernel(C: Sequence[Sequence[int]], ncols: int) -> list[list[int]]:
    """Z-basis of {z in Z^n : C z = 0}, via unimodular row reduction of [C^T | I]."""
    k = len(C)
    if k == 0:
        return [list(r) for r in IntegerMatrix.identity(ncols).rows]
    aug = [[C[j][i] for j in range(k)] + [int(i == t) for t in range(ncols)] for i in range(ncols)]
    h = hermite_rows(aug, k + ncols)
    return [row[k:] for row in h if not any(row[:k])]


@dataclass(frozen=True)
class LatticeBasis:
    """Sublattice of Z^m held by its canonical row-style Hermite basis."""

    ambient_dim: int
    basis: tuple[Vector, ...]

    @classmethod
    def from_generators(cls, vectors: Iterable[Sequence[int]], ambient_dim: int) -> LatticeBasis:
        vecs = [tuple(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise DimensionMismatch(f"vector of length {len(v)} in Z^{ambient_dim}")
        return cls(ambient_dim, tuple(tuple(r) for r in hermite_rows(vecs, ambient_dim)))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def is_full(self) -> bool:
        return self.rank == self.ambient_dim

    def pivots(self) -> list[int]:
        return [next(i for i, x in enumerate(b) if x) for b in self.basis]

    def coordinates(self, y: Sequence[int]) -> Vector:
        """Integer coordinates of ``y`` in this basis; ValueError if y is not a member."""
        if len(y) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(y)} in Z^{self.ambient_dim}")
        rest = list(y)
        coords = []
        for b, p in zip(self.basis, self.pivots()):
            q, r = divmod(rest[p], b[p])
            if r:
                raise ValueError(f"{tuple(y)} is not in the lattice")
            coords.append(q)
            if q:
                rest = [x - q * z for x, z in zip(rest, b)]
        if any(rest):
            raise ValueError(f"{tuple(y)} is not in the lattice")
        return tuple(coords)

    def contains(self, y: Sequence[int]) -> bool:
        try:
            self.coordinates(y)
        except ValueError:
            return False
        return True

    def __contains__(self, y) -> bool:
        return self.contains(y)

    def index(self) -> int:
        """Index in Z^m; only defined for full-rank lattices."""
        if not self.is_full():
            raise ValueError("index is infinite for a lattice of deficient rank")
        out = 1
        for i, b in enumerate(self.basis):
            out *= b[i]
        return out

    def subspace(self) -> RationalSubspace:
        return RationalSubspace.span(self.basis, self.ambient_dim)


def lattice_saturate(vectors: Iterable[Sequence[int]], ambient_dim: int) -> LatticeBasis:
    """(Q . span) intersected with Z^m, as a canonical basis."""
    span = RationalSubspace.span(list(vectors), ambient_dim)
    if span.is_zero():
        return LatticeBasis(ambient_dim, ())
    constraints = span.annihilator().integer_basis() if not span.is_full() else []
    return LatticeBasis.from_generators(integer_kernel(constraints, ambient_dim), ambient_dim)


def integer_points(space: RationalSubspace) -> LatticeBasis:
    """All integer points of a rational subspace."""
    return lattice_saturate(space.integer_basis(), space.ambient_dim)
