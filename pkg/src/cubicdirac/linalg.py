"""Exact dense linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`.  A :class:`Matrix` stores an integer
numerator array together with one positive common denominator, normalised so
that the gcd of all numerators and the denominator is 1.  This keeps the hot
loops (products and elimination) on machine or Python integers; see
:mod:`cubicdirac.kernels`.

Matrices are treated as immutable values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

from . import kernels

Rational = Fraction


class LinAlgError(ValueError):
    """Raised when a linear-algebra precondition fails (shape, rank, ...)."""


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, float):
        raise TypeError("floats are not accepted in exact arithmetic")
    return Fraction(x)


def format_rational(q) -> str:
    """Serialise as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    q = as_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s: str) -> Fraction:
    s = s.strip()
    if "/" in s:
        p, q = s.split("/")
        q = int(q)
        if q <= 0:
            raise ValueError(f"bad rational {s!r}: denominator must be positive")
        return Fraction(int(p), q)
    return Fraction(int(s))


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


class Matrix:
    __slots__ = ("rows", "cols", "_num", "_den")

    def __init__(self, rows: int, cols: int, num: list[list[int]], den: int = 1, *,
                 normalized: bool = False):
        self.rows = rows
        self.cols = cols
        if not normalized:
            num, den = _normalize(num, den)
        self._num = num
        self._den = den

    # construction -------------------------------------------------------
    @classmethod
    def from_rows(cls, data: Sequence[Sequence]) -> "Matrix":
        data = [[as_rational(x) for x in row] for row in data]
        nrows = len(data)
        ncols = len(data[0]) if nrows else 0
        if any(len(r) != ncols for r in data):
            raise LinAlgError("ragged rows")
        den = 1
        for row in data:
            for x in row:
                if x.denominator != 1:
                    den = _lcm(den, x.denominator)
        num = [[x.numerator * (den // x.denominator) for x in row] for row in data]
        return cls(nrows, ncols, num, den)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], ambient: int | None = None) -> "Matrix":
        if not cols:
            if ambient is None:
                raise LinAlgError("ambient dimension needed for an empty column list")
            return cls.zeros(ambient, 0)
        return cls.from_rows(list(zip(*cols)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, [[0] * cols for _ in range(rows)], 1, normalized=True)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        num = [[0] * n for _ in range(n)]
        for i in range(n):
            num[i][i] = 1
        return cls(n, n, num, 1, normalized=True)

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        n = len(values)
        return cls.from_rows([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_blocks(cls, blocks: dict, row_sizes: Sequence[int],
                    col_sizes: Sequence[int]) -> "Matrix":
        """Assemble from ``{(bi, bj): Matrix}``; missing blocks are zero."""
        roff = [0]
        for s in row_sizes:
            roff.append(roff[-1] + s)
        coff = [0]
        for s in col_sizes:
            coff.append(coff[-1] + s)
        den = 1
        for b in blocks.values():
            den = _lcm(den, b._den)
        num = [[0] * coff[-1] for _ in range(roff[-1])]
        for (bi, bj), b in blocks.items():
            if b.rows != row_sizes[bi] or b.cols != col_sizes[bj]:
                raise LinAlgError("block shape mismatch")
            f = den // b._den
            r0, c0 = roff[bi], coff[bj]
            for i, brow in enumerate(b._num):
                row = num[r0 + i]
                for j, x in enumerate(brow):
                    if x:
                        row[c0 + j] += x * f
        return cls(roff[-1], coff[-1], num, den)

    # access ---------------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def denominator(self) -> int:
        return self._den

    def numerators(self) -> list[list[int]]:
        return [list(r) for r in self._num]

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return Fraction(self._num[i][j], self._den)

    def to_lists(self) -> list[list[Fraction]]:
        d = self._den
        return [[Fraction(x, d) for x in row] for row in self._num]

    def column(self, j: int) -> list[Fraction]:
        d = self._den
        return [Fraction(row[j], d) for row in self._num]

    def columns(self, idx: Sequence[int]) -> "Matrix":
        return Matrix(self.rows, len(idx), [[row[j] for j in idx] for row in self._num],
                      self._den)

    def select_rows(self, idx: Sequence[int]) -> "Matrix":
        return Matrix(len(idx), self.cols, [list(self._num[i]) for i in idx], self._den)

    def submatrix(self, ridx: Sequence[int], cidx: Sequence[int]) -> "Matrix":
        num = self._num
        return Matrix(len(ridx), len(cidx), [[num[i][j] for j in cidx] for i in ridx],
                      self._den)

    def entries(self) -> list[Fraction]:
        """Row-major entries."""
        return [x for row in self.to_lists() for x in row]

    # predicates -----------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(any(r) for r in self._num)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def max_abs(self) -> Fraction:
        m = max((abs(x) for row in self._num for x in row), default=0)
        return Fraction(m, self._den)

    def nnz(self) -> int:
        return sum(1 for row in self._num for x in row if x)

    # arithmetic -----------------------------------------------------------
    def _check_same_shape(self, other: "Matrix"):
        if self.shape != other.shape:
            raise LinAlgError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        den = _lcm(self._den, other._den)
        fa, fb = den // self._den, den // other._den
        num = [[x * fa + y * fb for x, y in zip(ra, rb)]
               for ra, rb in zip(self._num, other._num)]
        return Matrix(self.rows, self.cols, num, den)

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [[-x for x in r] for r in self._num], self._den,
                      normalized=True)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c) -> "Matrix":
        c = as_rational(c)
        if c == 0:
            return Matrix.zeros(self.rows, self.cols)
        p, q = c.numerator, c.denominator
        return Matrix(self.rows, self.cols, [[x * p for x in r] for r in self._num],
                      self._den * q)

    def __mul__(self, c) -> "Matrix":
        if isinstance(c, Matrix):
            raise TypeError("use @ for matrix products")
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise LinAlgError(f"cannot multiply {self.shape} by {other.shape}")
        num = kernels.matmul(self._num, other._num, other.cols)
        return Matrix(self.rows, other.cols, num, self._den * other._den)

    def __pow__(self, k: int) -> "Matrix":
        if not self.is_square() or k < 0:
            raise LinAlgError("matrix power needs a square matrix and k >= 0")
        result = Matrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def apply(self, vec: Sequence) -> list[Fraction]:
        """Matrix-vector product with a plain list of rationals."""
        v = [as_rational(x) for x in vec]
        if len(v) != self.cols:
            raise LinAlgError("vector length mismatch")
        d = self._den
        return [sum((Fraction(x) * y for x, y in zip(row, v) if x), Fraction(0)) / d
                for row in self._num]

    @property
    def T(self) -> "Matrix":
        return Matrix(self.cols, self.rows, [list(c) for c in zip(*self._num)]
                      if self.rows else [[] for _ in range(self.cols)], self._den,
                      normalized=True)

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product; ``self`` indexes the major (outer) position."""
        num = []
        bnum = other._num
        for ra in self._num:
            for rb in bnum:
                row = []
                for x in ra:
                    if x:
                        row.extend(x * y for y in rb)
                    else:
                        row.extend([0] * other.cols)
                num.append(row)
        return Matrix(self.rows * other.rows, self.cols * other.cols, num,
                      self._den * other._den)

    def hstack(self, *others: "Matrix") -> "Matrix":
        mats = (self,) + others
        if any(m.rows != self.rows for m in mats):
            raise LinAlgError("hstack row mismatch")
        den = reduce(_lcm, (m._den for m in mats), 1)
        num = [[] for _ in range(self.rows)]
        for m in mats:
            f = den // m._den
            for i, r in enumerate(m._num):
                num[i].extend(x * f for x in r)
        return Matrix(self.rows, sum(m.cols for m in mats), num, den)

    def vstack(self, *others: "Matrix") -> "Matrix":
        mats = (self,) + others
        if any(m.cols != self.cols for m in mats):
            raise LinAlgError("vstack column mismatch")
        den = reduce(_lcm, (m._den for m in mats), 1)
        num = []
        for m in mats:
            f = den // m._den
            num.extend([x * f for x in r] for r in m._num)
        return Matrix(sum(m.rows for m in mats), self.cols, num, den)

    def commutator(self, other: "Matrix") -> "Matrix":
        return self @ other - other @ self

    def trace(self) -> Fraction:
        if not self.is_square():
            raise LinAlgError("trace of a non-square matrix")
        return Fraction(sum(self._num[i][i] for i in range(self.rows)), self._den)

    # comparison -----------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.shape == other.shape and self._den == other._den
                and self._num == other._num)

    def __hash__(self):
        return hash((self.rows, self.cols, self._den, tuple(map(tuple, self._num))))

    def __repr__(self) -> str:
        if self.rows * self.cols > 64:
            return f"Matrix({self.rows}x{self.cols}, nnz={self.nnz()})"
        body = ", ".join("[" + ", ".join(format_rational(x) for x in row) + "]"
                         for row in self.to_lists())
        return f"Matrix([{body}])"


def _normalize(num: list[list[int]], den: int) -> tuple[list[list[int]], int]:
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if den < 0:
        num = [[-x for x in r] for r in num]
        den = -den
    if den == 1:
        return num, 1
    g = den
    for row in num:
        g = math.gcd(g, *row) if row else g
        if g == 1:
            return num, den
    if g == den and not any(any(r) for r in num):
        return num, 1
    return [[x // g for x in r] for r in num], den // g


# ---------------------------------------------------------------------------
# elimination-based operations


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    num, den, piv = kernels.rref_den(m._num, m.cols)
    return Matrix(m.rows, m.cols, num, den), piv


def rank(m: Matrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    # eliminate along the shorter side
    src = m._num if m.rows <= m.cols else [list(c) for c in zip(*m._num)]
    ncols = len(src[0])
    return len(kernels.rref_den(src, ncols)[2])


@dataclass(frozen=True, eq=False)
class SubspaceBasis:
    """A subspace of Q^ambient_dim given by linearly independent columns."""

    ambient_dim: int
    matrix: Matrix

    def __post_init__(self):
        if self.matrix.rows != self.ambient_dim:
            raise LinAlgError("basis vectors have the wrong length")

    @classmethod
    def from_vectors(cls, ambient_dim: int, vectors: Iterable[Sequence]) -> "SubspaceBasis":
        vecs = list(vectors)
        return cls(ambient_dim, Matrix.from_columns(vecs, ambient_dim))

    @classmethod
    def zero(cls, ambient_dim: int) -> "SubspaceBasis":
        return cls(ambient_dim, Matrix.zeros(ambient_dim, 0))

    @classmethod
    def whole(cls, ambient_dim: int) -> "SubspaceBasis":
        return cls(ambient_dim, Matrix.identity(ambient_dim))

    @classmethod
    def span(cls, m: Matrix) -> "SubspaceBasis":
        """Canonical basis of the column span of ``m`` (columns may be dependent)."""
        return image_basis(m)

    @property
    def dim(self) -> int:
        return self.matrix.cols

    def __len__(self) -> int:
        return self.dim

    @property
    def vectors(self) -> list[list[Fraction]]:
        return [self.matrix.column(j) for j in range(self.dim)]

    def is_independent(self) -> bool:
        return rank(self.matrix) == self.dim

    def canonical(self) -> Matrix:
        """Reduced echelon rows spanning the subspace; equal subspaces agree."""
        if self.dim == 0:
            return Matrix.zeros(0, self.ambient_dim)
        r, piv = rref(self.matrix.T)
        return r.select_rows(range(len(piv)))

    def contains(self, other: "SubspaceBasis") -> bool:
        if other.dim == 0:
            return True
        return rank(self.matrix.hstack(other.matrix)) == self.dim

    def contains_vector(self, v: Sequence) -> bool:
        return self.contains(SubspaceBasis.from_vectors(self.ambient_dim, [v]))

    def same_span(self, other: "SubspaceBasis") -> bool:
        return (self.ambient_dim == other.ambient_dim and self.dim == other.dim
                and self.canonical() == other.canonical())

    def __eq__(self, other) -> bool:
        if not isinstance(other, SubspaceBasis):
            return NotImplemented
        return self.same_span(other)

    __hash__ = None

    def sum(self, other: "SubspaceBasis") -> "SubspaceBasis":
        return image_basis(self.matrix.hstack(other.matrix))

    def is_direct_sum_with(self, other: "SubspaceBasis") -> bool:
        return rank(self.matrix.hstack(other.matrix)) == self.dim + other.dim

    def intersection(self, other: "SubspaceBasis") -> "SubspaceBasis":
        if self.dim == 0 or other.dim == 0:
            return SubspaceBasis.zero(self.ambient_dim)
        k = kernel_basis(self.matrix.hstack(-other.matrix))
        if k.dim == 0:
            return SubspaceBasis.zero(self.ambient_dim)
        coeffs = k.matrix.select_rows(range(self.dim))
        return image_basis(self.matrix @ coeffs)


def kernel_basis(m: Matrix) -> SubspaceBasis:
    """Null space basis: one vector per free column, with a 1 in that column."""
    n = m.cols
    if m.rows == 0:
        return SubspaceBasis.whole(n)
    r, piv = rref(m)
    free = [j for j in range(n) if j not in set(piv)]
    num = r._num
    den = r._den
    cols = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, pc in enumerate(piv):
            if num[i][f]:
                v[pc] = Fraction(-num[i][f], den)
        cols.append(v)
    return SubspaceBasis.from_vectors(n, cols)


def image_basis(m: Matrix) -> SubspaceBasis:
    """Column space basis in canonical (reduced echelon of the transpose) form."""
    if m.cols == 0 or m.rows == 0:
        return SubspaceBasis.zero(m.rows)
    r, piv = rref(m.T)
    k = len(piv)
    if k == 0:
        return SubspaceBasis.zero(m.rows)
    return SubspaceBasis(m.rows, r.select_rows(range(k)).T)


def inverse(m: Matrix) -> Matrix:
    if not m.is_square():
        raise LinAlgError("inverse of a non-square matrix")
    n = m.rows
    aug = m.hstack(Matrix.identity(n))
    r, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise LinAlgError("matrix is singular")
    return r.submatrix(range(n), range(n, 2 * n))


def solve(a: Matrix, b: Matrix) -> Matrix:
    """Some X with a @ X = b; raises if the system is inconsistent."""
    if a.rows != b.rows:
        raise LinAlgError("row mismatch in solve")
    n = a.cols
    r, piv = rref(a.hstack(b))
    if any(p >= n for p in piv):
        raise LinAlgError("inconsistent system")
    x = [[Fraction(0)] * b.cols for _ in range(n)]
    for i, pc in enumerate(piv):
        for j in range(b.cols):
            x[pc][j] = r[i, n + j]
    return Matrix.from_rows(x) if n else Matrix.zeros(0, b.cols)


def projector_along(u: SubspaceBasis, w: SubspaceBasis) -> Matrix:
    """The projection onto span(u) with kernel span(w)."""
    if u.ambient_dim != w.ambient_dim:
        raise LinAlgError("ambient dimensions differ")
    n = u.ambient_dim
    if u.dim + w.dim != n:
        raise LinAlgError(f"dimensions {u.dim} + {w.dim} do not add up to {n}")
    basis = u.matrix.hstack(w.matrix)
    try:
        binv = inverse(basis)
    except LinAlgError:
        raise LinAlgError("subspaces overlap: not a direct sum") from None
    return u.matrix @ binv.select_rows(range(u.dim))


def is_idempotent(p: Matrix) -> bool:
    return p @ p == p


def commutes(a: Matrix, b: Matrix) -> bool:
    return a @ b == b @ a
