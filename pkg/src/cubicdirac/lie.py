"""Type-A root data, weights, and sl_n with its parabolic block decompositions.

Elements of sl_n are carried as n x n rational matrices (the defining
representation).  The invariant form is ``B(X, Y) = 2n tr(XY)``, which is the
Killing form of sl_n.  Weights are stored in fundamental-weight coordinates,
so ``lam.coords[i] = lam(H_{i+1})`` with ``H_i = E_ii - E_{i+1,i+1}``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

from .linalg import Matrix, as_rational, format_rational, inverse


@dataclass(frozen=True, order=True)
class Weight:
    coords: tuple[Fraction, ...]

    def __init__(self, coords):
        object.__setattr__(self, "coords", tuple(as_rational(c) for c in coords))

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((0,) * rank)

    @property
    def rank(self) -> int:
        return len(self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> "Weight":
        return Weight(-a for a in self.coords)

    def __mul__(self, c) -> "Weight":
        c = as_rational(c)
        return Weight(c * a for a in self.coords)

    __rmul__ = __mul__

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def size(self) -> Fraction:
        """Sum of fundamental coordinates; the truncation parameter for scans."""
        return sum(self.coords, Fraction(0))

    def __str__(self) -> str:
        return "[" + ",".join(format_rational(c) for c in self.coords) + "]"

    def __repr__(self) -> str:
        return f"Weight({self})"


def parse_weight(text: str) -> Weight:
    """Parse ``"[a1,...,ak]"`` (brackets optional)."""
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    if not body.strip():
        return Weight(())
    return Weight(as_rational(p) for p in body.split(","))


def parse_composition(text: str) -> tuple[int, ...]:
    """Parse ``"2+1"`` into ``(2, 1)``."""
    if not re.fullmatch(r"\s*\d+(\s*\+\s*\d+)*\s*", text):
        raise ValueError(f"bad composition {text!r}; expected e.g. '2+1'")
    return tuple(int(p) for p in text.split("+"))


def format_composition(comp: Sequence[int]) -> str:
    return "+".join(str(c) for c in comp)


# ---------------------------------------------------------------------------


def cartan_matrix(rank: int) -> Matrix:
    return Matrix.from_rows([[2 if i == j else (-1 if abs(i - j) == 1 else 0)
                              for j in range(rank)] for i in range(rank)])


@dataclass(frozen=True)
class RootSystem:
    """Root data of sl_n under the Killing normalisation."""

    n: int

    @property
    def rank(self) -> int:
        return self.n - 1

    @cached_property
    def simple_roots(self) -> tuple[Weight, ...]:
        a = cartan_matrix(self.rank)
        return tuple(Weight(a[i, j] for j in range(self.rank)) for i in range(self.rank))

    @cached_property
    def _dual_gram(self) -> Matrix:
        # Gram of B on H_1..H_{n-1} is 2n * Cartan; the weight pairing is its inverse.
        return inverse(cartan_matrix(self.rank).scale(2 * self.n))

    @cached_property
    def pairing_gram(self) -> Matrix:
        sr = self.simple_roots
        return Matrix.from_rows([[self.pair(a, b) for b in sr] for a in sr])

    def pair(self, mu: Weight, nu: Weight) -> Fraction:
        g = self._dual_gram
        r = self.rank
        return sum((mu.coords[i] * g[i, j] * nu.coords[j]
                    for i in range(r) for j in range(r)
                    if mu.coords[i] and nu.coords[j]), Fraction(0))

    def root(self, i: int, j: int) -> Weight:
        """The root e_i - e_j (0-based), as a weight."""
        return Weight(int(i == k) - int(i == k + 1) - int(j == k) + int(j == k + 1)
                      for k in range(self.rank))

    @cached_property
    def positive_roots(self) -> tuple[Weight, ...]:
        return tuple(self.root(i, j) for i in range(self.n) for j in range(i + 1, self.n))

    @cached_property
    def rho(self) -> Weight:
        return Weight((1,) * self.rank)

    def fundamental_weight(self, i: int) -> Weight:
        return Weight(int(k == i) for k in range(self.rank))

    def to_root_coords(self, mu: Weight) -> tuple[Fraction, ...]:
        inv = inverse(cartan_matrix(self.rank))
        return tuple(sum((inv[i, j] * mu.coords[j] for j in range(self.rank)), Fraction(0))
                     for i in range(self.rank))


def weight_pairing(rs: RootSystem, mu: Weight, nu: Weight) -> Fraction:
    return rs.pair(mu, nu)


def rho_of(rs: RootSystem, roots: Sequence[Weight]) -> Weight:
    total = Weight.zero(rs.rank)
    for r in roots:
        total = total + r
    return total * Fraction(1, 2)


# ---------------------------------------------------------------------------


def elementary(n: int, i: int, j: int) -> Matrix:
    num = [[0] * n for _ in range(n)]
    num[i][j] = 1
    return Matrix(n, n, num, 1, normalized=True)


def h_element(n: int, k: int) -> Matrix:
    """H_{k+1} = E_kk - E_{k+1,k+1} (0-based k)."""
    num = [[0] * n for _ in range(n)]
    num[k][k] = 1
    num[k + 1][k + 1] = -1
    return Matrix(n, n, num, 1, normalized=True)


@dataclass(frozen=True, eq=False)
class LieAlgebraSln:
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("sl_n needs n >= 2")

    @cached_property
    def root_system(self) -> RootSystem:
        return RootSystem(self.n)

    @cached_property
    def labels(self) -> tuple[str, ...]:
        hs = [f"H{k + 1}" for k in range(self.n - 1)]
        es = [f"E{i + 1}{j + 1}" for i, j in self.offdiag]
        return tuple(hs + es)

    @cached_property
    def offdiag(self) -> tuple[tuple[int, int], ...]:
        return tuple((i, j) for i in range(self.n) for j in range(self.n) if i != j)

    @cached_property
    def basis(self) -> tuple[Matrix, ...]:
        """H_1..H_{n-1} followed by E_ij (i != j) in lexicographic order."""
        hs = [h_element(self.n, k) for k in range(self.n - 1)]
        es = [elementary(self.n, i, j) for i, j in self.offdiag]
        return tuple(hs + es)

    @property
    def dim(self) -> int:
        return self.n * self.n - 1

    def bracket(self, x: Matrix, y: Matrix) -> Matrix:
        return x @ y - y @ x

    def killing(self, x: Matrix, y: Matrix) -> Fraction:
        return 2 * self.n * (x @ y).trace()

    def coords(self, x: Matrix) -> list[Fraction]:
        """Coordinates of a traceless matrix in :attr:`basis`."""
        if x.trace() != 0:
            raise ValueError("element is not traceless")
        diag = [x[k, k] for k in range(self.n)]
        hcoords = list(itertools.accumulate(diag[:-1]))
        return hcoords + [x[i, j] for i, j in self.offdiag]

    @cached_property
    def dual_basis(self) -> tuple[Matrix, ...]:
        """B-dual basis: ``killing(basis[i], dual_basis[j]) == delta_ij``."""
        n = self.n
        r = n - 1
        ginv = inverse(cartan_matrix(r).scale(2 * n))
        hs = self.basis[:r]
        hdual = []
        for i in range(r):
            acc = Matrix.zeros(n, n)
            for j in range(r):
                if ginv[j, i]:
                    acc = acc + hs[j].scale(ginv[j, i])
            hdual.append(acc)
        edual = [elementary(n, j, i).scale(Fraction(1, 2 * n)) for i, j in self.offdiag]
        return tuple(hdual + edual)

    def weight_of_root_vector(self, i: int, j: int) -> Weight:
        return self.root_system.root(i, j)


def killing_form(a: LieAlgebraSln, x: Matrix, y: Matrix) -> Fraction:
    return a.killing(x, y)


@dataclass(frozen=True, eq=False)
class ParabolicAlgebra:
    """sl_n = l + u + ubar for the block composition ``(n_1, ..., n_k)``.

    ``u`` holds the strictly upper block entries, ``ubar`` the strictly lower
    ones and ``l`` the block diagonal.  The u-basis is ``x_a = E_ij`` for the
    pairs in :attr:`u_pairs`; its B-dual partner in ubar is
    ``y_a = E_ji / (2n)``.
    """

    algebra: LieAlgebraSln
    composition: tuple[int, ...]
    block_of: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        comp = tuple(int(c) for c in self.composition)
        if not comp or any(c <= 0 for c in comp) or sum(comp) != self.algebra.n:
            raise ValueError(f"composition {comp} is not a composition of {self.algebra.n}")
        object.__setattr__(self, "composition", comp)
        blocks = []
        for b, size in enumerate(comp):
            blocks.extend([b] * size)
        object.__setattr__(self, "block_of", tuple(blocks))

    @property
    def n(self) -> int:
        return self.algebra.n

    @property
    def root_system(self) -> RootSystem:
        return self.algebra.root_system

    @property
    def is_borel(self) -> bool:
        return all(c == 1 for c in self.composition)

    @cached_property
    def u_pairs(self) -> tuple[tuple[int, int], ...]:
        b = self.block_of
        return tuple((i, j) for i in range(self.n) for j in range(self.n) if b[i] < b[j])

    @cached_property
    def l_pairs(self) -> tuple[tuple[int, int], ...]:
        b = self.block_of
        return tuple((i, j) for i, j in self.algebra.offdiag if b[i] == b[j])

    @property
    def dim_u(self) -> int:
        return len(self.u_pairs)

    @cached_property
    def u_basis(self) -> tuple[Matrix, ...]:
        return tuple(elementary(self.n, i, j) for i, j in self.u_pairs)

    @cached_property
    def ubar_basis(self) -> tuple[Matrix, ...]:
        s = Fraction(1, 2 * self.n)
        return tuple(elementary(self.n, j, i).scale(s) for i, j in self.u_pairs)

    @property
    def dual_pairs(self) -> tuple[tuple[Matrix, Matrix], ...]:
        return tuple(zip(self.u_basis, self.ubar_basis))

    @cached_property
    def l_basis(self) -> tuple[Matrix, ...]:
        hs = self.algebra.basis[: self.n - 1]
        return tuple(hs) + tuple(elementary(self.n, i, j) for i, j in self.l_pairs)

    @cached_property
    def l_dual_basis(self) -> tuple[Matrix, ...]:
        hd = self.algebra.dual_basis[: self.n - 1]
        s = Fraction(1, 2 * self.n)
        return tuple(hd) + tuple(elementary(self.n, j, i).scale(s) for i, j in self.l_pairs)

    @property
    def l_dual_pairs(self) -> tuple[tuple[Matrix, Matrix], ...]:
        return tuple(zip(self.l_basis, self.l_dual_basis))

    @cached_property
    def delta_u(self) -> tuple[Weight, ...]:
        rs = self.root_system
        return tuple(rs.root(i, j) for i, j in self.u_pairs)

    @cached_property
    def l_positive_roots(self) -> tuple[Weight, ...]:
        rs = self.root_system
        return tuple(rs.root(i, j) for i, j in self.l_pairs if i < j)

    @cached_property
    def l_simple_indices(self) -> tuple[int, ...]:
        """Indices k such that alpha_{k+1} is a simple root of l."""
        b = self.block_of
        return tuple(k for k in range(self.n - 1) if b[k] == b[k + 1])

    @cached_property
    def rho_g(self) -> Weight:
        return self.root_system.rho

    @cached_property
    def rho_l(self) -> Weight:
        return rho_of(self.root_system, self.l_positive_roots)

    @cached_property
    def rho_u(self) -> Weight:
        return rho_of(self.root_system, self.delta_u)

    @cached_property
    def rho_ubar(self) -> Weight:
        return -self.rho_u

    def in_u(self, x: Matrix) -> bool:
        b = self.block_of
        return all(x[i, j] == 0 for i in range(self.n) for j in range(self.n)
                   if not b[i] < b[j])

    def in_ubar(self, x: Matrix) -> bool:
        b = self.block_of
        return all(x[i, j] == 0 for i in range(self.n) for j in range(self.n)
                   if not b[i] > b[j])

    def in_l(self, x: Matrix) -> bool:
        b = self.block_of
        return x.trace() == 0 and all(x[i, j] == 0 for i in range(self.n)
                                      for j in range(self.n) if b[i] != b[j])

    def in_s(self, x: Matrix) -> bool:
        b = self.block_of
        return all(x[i, j] == 0 for i in range(self.n) for j in range(self.n)
                   if b[i] == b[j])

    def u_coords(self, x: Matrix) -> list[Fraction]:
        """Coefficients on x_a of the u-component of ``x``."""
        return [x[i, j] for i, j in self.u_pairs]

    def ubar_coords(self, x: Matrix) -> list[Fraction]:
        """Coefficients on y_a of the ubar-component of ``x``."""
        return [x[j, i] * 2 * self.n for i, j in self.u_pairs]

    def label(self) -> str:
        return f"sl{self.n}[{format_composition(self.composition)}]"


@lru_cache(maxsize=None)
def sl(n: int) -> LieAlgebraSln:
    return LieAlgebraSln(n)


@lru_cache(maxsize=None)
def _parabolic(n: int, composition: tuple[int, ...]) -> ParabolicAlgebra:
    return ParabolicAlgebra(sl(n), composition)


def parabolic_split(a: LieAlgebraSln | int, composition) -> ParabolicAlgebra:
    n = a if isinstance(a, int) else a.n
    if isinstance(composition, str):
        composition = parse_composition(composition)
    comp = tuple(composition)
    if any(not isinstance(c, int) or c <= 0 for c in comp) or sum(comp) != n:
        raise ValueError(f"composition {comp} is not a composition of {n}")
    return _parabolic(n, comp)


def compositions(n: int):
    """All compositions of n, in lexicographic order."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest
