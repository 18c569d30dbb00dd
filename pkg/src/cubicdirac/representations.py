"""Finite-dimensional sl_n-modules as exact matrices.

Every module built here carries a weight basis: each basis vector is a joint
eigenvector of H_1..H_{n-1}, with its weight recorded in ``weights``.  The
isotypic machinery works weight space by weight space, which keeps all the
linear algebra local and small.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

from .lie import LieAlgebraSln, ParabolicAlgebra, RootSystem, Weight, sl
from .linalg import (LinAlgError, Matrix, SubspaceBasis, image_basis, inverse, kernel_basis,
                     solve)
from .weights import is_levi_dominant, levi_dimension, weyl_dimension


class DecompositionError(RuntimeError):
    """The action is not semisimple on the given space (an upstream bug)."""


@dataclass(eq=False)
class Representation:
    algebra: LieAlgebraSln
    action: tuple[Matrix, ...]
    weights: tuple[Weight, ...]
    highest_weight: Weight | None = None

    @property
    def dim(self) -> int:
        return len(self.weights)

    @cached_property
    def _eij(self) -> dict[tuple[int, int], Matrix]:
        r = self.algebra.n - 1
        return {ij: self.action[r + k] for k, ij in enumerate(self.algebra.offdiag)}

    def e(self, i: int, j: int) -> Matrix:
        """Action of E_ij (0-based, i != j)."""
        return self._eij[(i, j)]

    def h(self, k: int) -> Matrix:
        return self.action[k]

    def act(self, x: Matrix) -> Matrix:
        """Action of an arbitrary element of sl_n."""
        out = Matrix.zeros(self.dim, self.dim)
        for c, a in zip(self.algebra.coords(x), self.action):
            if c:
                out = out + a.scale(c)
        return out

    @cached_property
    def weight_index(self) -> dict[Weight, list[int]]:
        return weight_index(self.weights)

    @property
    def weight_spaces(self) -> dict[Weight, SubspaceBasis]:
        out = {}
        for w, idx in self.weight_index.items():
            out[w] = SubspaceBasis.from_vectors(
                self.dim, [[int(i == j) for i in range(self.dim)] for j in idx])
        return out

    def module_data(self, parabolic: ParabolicAlgebra | None = None) -> "ModuleData":
        """Raising/lowering data for g, or for the Levi of ``parabolic``."""
        n = self.algebra.n
        simple = range(n - 1) if parabolic is None else parabolic.l_simple_indices
        rs = self.algebra.root_system
        return ModuleData(
            dim=self.dim,
            weights=self.weights,
            raising={k: self.e(k, k + 1) for k in simple},
            lowering={k: self.e(k + 1, k) for k in simple},
            simple_roots={k: rs.simple_roots[k] for k in simple},
            parabolic=parabolic,
        )


def weight_index(weights: Sequence[Weight]) -> dict[Weight, list[int]]:
    out: dict[Weight, list[int]] = defaultdict(list)
    for i, w in enumerate(weights):
        out[w].append(i)
    return dict(out)


# ---------------------------------------------------------------------------
# construction


def trivial_rep(a: LieAlgebraSln) -> Representation:
    z = Matrix.zeros(1, 1)
    return Representation(a, tuple(z for _ in a.basis), (Weight.zero(a.n - 1),),
                          Weight.zero(a.n - 1))


def exterior_power_rep(a: LieAlgebraSln, k: int) -> Representation:
    """Lambda^k of the standard representation, basis e_I for sorted k-subsets I."""
    n = a.n
    subsets = list(itertools.combinations(range(n), k))
    index = {s: i for i, s in enumerate(subsets)}
    dim = len(subsets)
    weights = tuple(Weight(int(q in s) - int(q + 1 in s) for q in range(n - 1))
                    for s in subsets)
    action = []
    for x in a.basis:
        rows = [[0] * dim for _ in range(dim)]
        for col, s in enumerate(subsets):
            for pos, j in enumerate(s):
                for i in range(n):
                    c = x[i, j]
                    if not c:
                        continue
                    if i == j:
                        rows[col][col] += c
                        continue
                    if i in s:
                        continue
                    new = list(s)
                    new[pos] = i
                    srt = sorted(new)
                    # sign of sorting after replacing e_j by e_i in place
                    sign = (-1) ** sum(1 for t in s if t != j and min(i, j) < t < max(i, j))
                    rows[index[tuple(srt)]][col] += sign * c
        action.append(Matrix.from_rows(rows))
    hw = Weight(int(q == k - 1) for q in range(n - 1)) if 0 < k < n else Weight.zero(n - 1)
    return Representation(a, tuple(action), weights, hw)


def tensor_product(v: Representation, w: Representation) -> Representation:
    """V (x) W with V as the major index."""
    iv, iw = Matrix.identity(v.dim), Matrix.identity(w.dim)
    action = tuple(av.kron(iw) + iv.kron(aw) for av, aw in zip(v.action, w.action))
    weights = tuple(a + b for a in v.weights for b in w.weights)
    return Representation(v.algebra, action, weights)


@dataclass
class ModuleData:
    """Weight basis plus simple raising/lowering operators of the acting algebra."""

    dim: int
    weights: Sequence[Weight]
    raising: dict[int, Matrix]
    lowering: dict[int, Matrix]
    simple_roots: dict[int, Weight]
    parabolic: ParabolicAlgebra | None = None
    extra_actions: Sequence[Matrix] = field(default_factory=tuple)

    @cached_property
    def windex(self) -> dict[Weight, list[int]]:
        return weight_index(self.weights)

    def highest_weight_vectors(self, mu: Weight, restrict: Sequence[int] | None = None) -> Matrix:
        """Local basis (columns over ``windex[mu]``) of vectors killed by all raising ops."""
        idx = self.windex.get(mu, [])
        if restrict is not None:
            allowed = set(restrict)
            idx = [i for i in idx if i in allowed]
        if not idx:
            return Matrix.zeros(0, 0)
        blocks = []
        for k, e in self.raising.items():
            tgt = self.windex.get(mu + self.simple_roots[k])
            if tgt:
                blocks.append(e.submatrix(tgt, idx))
        if not blocks:
            return Matrix.identity(len(idx))
        return kernel_basis(blocks[0].vstack(*blocks[1:])).matrix

    def lowering_closure(self, mu: Weight, seed: Matrix) -> dict[Weight, Matrix]:
        """Weight-local bases of the submodule generated by ``seed`` (local at ``mu``)."""
        spaces: dict[Weight, Matrix] = {}
        level = {mu: seed}
        while level:
            nxt: dict[Weight, list[Matrix]] = defaultdict(list)
            for nu, basis in level.items():
                spaces[nu] = basis
                src = self.windex[nu]
                for k, f in self.lowering.items():
                    t = nu - self.simple_roots[k]
                    tgt = self.windex.get(t)
                    if tgt:
                        img = f.submatrix(tgt, src) @ basis
                        if not img.is_zero():
                            nxt[t].append(img)
            level = {}
            for t in sorted(nxt):
                mats = nxt[t]
                span = image_basis(mats[0].hstack(*mats[1:]))
                if span.dim:
                    level[t] = span.matrix
        return spaces

    def embed(self, local: dict[Weight, Matrix]) -> Matrix:
        """Global column matrix from weight-local bases, in sorted weight order."""
        cols = []
        for nu in sorted(local):
            m = local[nu]
            idx = self.windex[nu]
            for j in range(m.cols):
                v = [Fraction(0)] * self.dim
                for r, i in enumerate(idx):
                    v[i] = m[r, j]
                cols.append(v)
        return Matrix.from_columns(cols, self.dim)


@lru_cache(maxsize=None)
def _build_irrep(n: int, coords: tuple) -> Representation:
    a = sl(n)
    lam = Weight(coords)
    if not lam.is_dominant() or not lam.is_integral():
        raise ValueError(f"{lam} is not dominant integral")
    if all(c == 0 for c in lam.coords):
        return trivial_rep(a)
    # V_lam is the Cartan component of V_{lam - omega_i} (x) Lambda^i C^n.
    i = next(k for k, c in enumerate(lam.coords) if c > 0)
    smaller = list(lam.coords)
    smaller[i] -= 1
    big = tensor_product(_build_irrep(n, tuple(smaller)), exterior_power_rep(a, i + 1))
    return cyclic_submodule(big, lam)


def build_irrep(a: LieAlgebraSln | int, lam: Weight | Sequence) -> Representation:
    n = a if isinstance(a, int) else a.n
    if not isinstance(lam, Weight):
        lam = Weight(lam)
    if lam.rank != n - 1:
        raise ValueError(f"weight {lam} has the wrong rank for sl{n}")
    if not lam.is_dominant() or not lam.is_integral():
        raise ValueError(f"{lam} is not dominant integral")
    rep = _build_irrep(n, lam.coords)
    expected = weyl_dimension(RootSystem(n), lam)
    if rep.dim != expected:
        raise DecompositionError(f"built dim {rep.dim} != Weyl dimension {expected}")
    return rep


def cyclic_submodule(big: Representation, lam: Weight) -> Representation:
    """Restrict ``big`` to the submodule generated by its highest weight vector of weight lam."""
    data = big.module_data()
    hw = data.highest_weight_vectors(lam)
    if hw.cols == 0:
        raise DecompositionError(f"no highest weight vector of weight {lam}")
    local = data.lowering_closure(lam, hw.columns([0]))
    weights = tuple(nu for nu in sorted(local) for _ in range(local[nu].cols))
    offsets = {}
    pos = 0
    for nu in sorted(local):
        offsets[nu] = pos
        pos += local[nu].cols
    dim = pos
    action = []
    for k, x in enumerate(big.algebra.basis):
        a = big.action[k]
        blocks = {}
        shift = _element_weight(big.algebra, k)
        for nu in sorted(local):
            t = nu + shift
            if t not in local:
                continue
            img = a.submatrix(data.windex[t], data.windex[nu]) @ local[nu]
            if img.is_zero():
                continue
            blocks[(t, nu)] = solve(local[t], img)
        rows = [[Fraction(0)] * dim for _ in range(dim)]
        for (t, nu), m in blocks.items():
            r0, c0 = offsets[t], offsets[nu]
            for i in range(m.rows):
                for j in range(m.cols):
                    if m[i, j]:
                        rows[r0 + i][c0 + j] = m[i, j]
        action.append(Matrix.from_rows(rows) if dim else Matrix.zeros(0, 0))
    return Representation(big.algebra, tuple(action), weights, lam)


def _element_weight(a: LieAlgebraSln, k: int) -> Weight:
    r = a.n - 1
    if k < r:
        return Weight.zero(r)
    i, j = a.offdiag[k - r]
    return a.root_system.root(i, j)


# ---------------------------------------------------------------------------
# Casimirs


def casimir_matrix(rep: Representation, dual_pairs=None) -> Matrix:
    """sum_i rep(b_i) rep(d_i) over B-dual bases (all of g by default)."""
    if dual_pairs is None:
        dual_pairs = zip(rep.algebra.basis, rep.algebra.dual_basis)
    out = Matrix.zeros(rep.dim, rep.dim)
    for b, d in dual_pairs:
        out = out + rep.act(b) @ rep.act(d)
    return out


def casimir_scalar(rs: RootSystem, lam: Weight) -> Fraction:
    shifted = lam + rs.rho
    return rs.pair(shifted, shifted) - rs.pair(rs.rho, rs.rho)


# ---------------------------------------------------------------------------
# isotypic decomposition


@dataclass(eq=False)
class IsotypicBlock:
    label: Weight
    basis: SubspaceBasis
    projector: Matrix
    multiplicity: int
    irrep_dim: int

    @property
    def dim(self) -> int:
        return self.basis.dim


def isotypic_decomposition(space: ModuleData) -> list[IsotypicBlock]:
    """Isotypic components of a semisimple module with projectors along the sum."""
    p = space.parabolic
    local_by_label: dict[Weight, dict[Weight, Matrix]] = {}
    mults: dict[Weight, int] = {}
    for mu in sorted(space.windex):
        hw = space.highest_weight_vectors(mu)
        if hw.cols == 0:
            continue
        if p is not None and not is_levi_dominant(p, mu):
            raise DecompositionError(f"highest weight vector of non-dominant weight {mu}")
        local_by_label[mu] = space.lowering_closure(mu, hw)
        mults[mu] = hw.cols

    # Projectors are block diagonal over weight spaces.
    proj_entries: dict[Weight, dict] = {mu: {} for mu in local_by_label}
    for nu, idx in space.windex.items():
        parts = [(mu, loc[nu]) for mu, loc in local_by_label.items() if nu in loc]
        total = sum(m.cols for _, m in parts)
        if total != len(idx):
            raise DecompositionError(
                f"weight {nu}: components span {total} of {len(idx)} dimensions")
        basis = parts[0][1].hstack(*[m for _, m in parts[1:]])
        try:
            binv = inverse(basis)
        except LinAlgError:
            raise DecompositionError(f"weight {nu}: components are not independent") from None
        off = 0
        for mu, m in parts:
            local_p = m @ binv.select_rows(range(off, off + m.cols))
            off += m.cols
            proj_entries[mu][nu] = local_p

    blocks = []
    for mu in sorted(local_by_label):
        loc = local_by_label[mu]
        basis = space.embed(loc)
        rows = [[Fraction(0)] * space.dim for _ in range(space.dim)]
        for nu, lp in proj_entries[mu].items():
            idx = space.windex[nu]
            for a, i in enumerate(idx):
                for b, j in enumerate(idx):
                    if lp[a, b]:
                        rows[i][j] = lp[a, b]
        proj = Matrix.from_rows(rows)
        irrep_dim = levi_dimension(p, mu) if p is not None else None
        if p is None:
            irrep_dim = basis.cols // mults[mu]
        blocks.append(IsotypicBlock(mu, SubspaceBasis(space.dim, basis), proj, mults[mu],
                                    irrep_dim))
    return blocks
