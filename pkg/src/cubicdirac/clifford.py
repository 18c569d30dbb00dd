"""The spin module S = Lambda(u) of the Clifford algebra C(s), s = u + ubar.

Convention: with the relation ``z w + w z = -2 B(z, w)``, an element x of u
acts by exterior multiplication and y in ubar acts by ``-2 * iota(y)``, where
``iota(y)`` contracts with ``B(y, .)`` starting from the first slot.  This
keeps every matrix rational.  ``flip_contraction=True`` uses ``+2 * iota(y)``
instead; it exists only to probe sign sensitivity.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .lie import ParabolicAlgebra, Weight
from .linalg import Matrix


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    p = list(perm)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


@dataclass(frozen=True, eq=False)
class SpinModule:
    parabolic: ParabolicAlgebra
    flip_contraction: bool = False

    @cached_property
    def basis(self) -> tuple[tuple[int, ...], ...]:
        """Subsets of u-basis indices, by size then lexicographically."""
        n = self.parabolic.dim_u
        return tuple(s for k in range(n + 1) for s in itertools.combinations(range(n), k))

    @cached_property
    def index(self) -> dict[tuple[int, ...], int]:
        return {s: i for i, s in enumerate(self.basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def degree(self, i: int) -> int:
        return len(self.basis[i])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.basis)

    @cached_property
    def weights(self) -> tuple[Weight, ...]:
        roots = self.parabolic.delta_u
        zero = Weight.zero(self.parabolic.n - 1)
        out = []
        for s in self.basis:
            w = zero
            for a in s:
                w = w + roots[a]
            out.append(w)
        return tuple(out)

    @property
    def contraction_scale(self) -> int:
        return 2 if self.flip_contraction else -2

    # building blocks -------------------------------------------------------
    @cached_property
    def wedge_ops(self) -> tuple[Matrix, ...]:
        """epsilon(x_a): x_A -> x_a ^ x_A."""
        ops = []
        for a in range(self.parabolic.dim_u):
            rows = [[0] * self.dim for _ in range(self.dim)]
            for col, s in enumerate(self.basis):
                if a in s:
                    continue
                sign = (-1) ** sum(1 for t in s if t < a)
                rows[self.index[tuple(sorted(s + (a,)))]][col] = sign
            ops.append(Matrix(self.dim, self.dim, rows))
        return tuple(ops)

    @cached_property
    def contraction_ops(self) -> tuple[Matrix, ...]:
        """iota_a: contraction with the functional dual to x_a, i.e. with B(y_a, .)."""
        ops = []
        for a in range(self.parabolic.dim_u):
            rows = [[0] * self.dim for _ in range(self.dim)]
            for col, s in enumerate(self.basis):
                if a not in s:
                    continue
                j = s.index(a)
                rest = s[:j] + s[j + 1:]
                rows[self.index[rest]][col] = (-1) ** j
            ops.append(Matrix(self.dim, self.dim, rows))
        return tuple(ops)

    def adjoint_action(self, x: Matrix) -> Matrix:
        """Derivation action of x in l on Lambda(u)."""
        p = self.parabolic
        out = Matrix.zeros(self.dim, self.dim)
        for a, xa in enumerate(p.u_basis):
            img = p.algebra.bracket(x, xa)
            for b, c in enumerate(p.u_coords(img)):
                if c:
                    out = out + (self.wedge_ops[b] @ self.contraction_ops[a]).scale(c)
        return out


def clifford_action(spin: SpinModule, z: Matrix) -> Matrix:
    p = spin.parabolic
    if not p.in_s(z):
        raise ValueError("element is not in s = u + ubar")
    out = Matrix.zeros(spin.dim, spin.dim)
    for a, c in enumerate(p.u_coords(z)):
        if c:
            out = out + spin.wedge_ops[a].scale(c)
    # B(y, x_a) = coefficient of y on y_a, since B(x_a, y_b) = delta_ab
    for a, c in enumerate(p.ubar_coords(z)):
        if c:
            out = out + spin.contraction_ops[a].scale(c * spin.contraction_scale)
    return out


def s_basis(p: ParabolicAlgebra) -> tuple[tuple[Matrix, ...], tuple[Matrix, ...]]:
    """Basis [x_1..x_N, y_1..y_N] of s and its B-dual basis [y_1..y_N, x_1..x_N]."""
    xs, ys = p.u_basis, p.ubar_basis
    return tuple(xs) + tuple(ys), tuple(ys) + tuple(xs)


def chevalley(spin: SpinModule, monomials) -> Matrix:
    """phi of a combination of wedge monomials, by full antisymmetrisation.

    ``monomials`` is a list of ``(coefficient, (z_1, ..., z_k))`` with the
    z's elements of s.
    """
    out = Matrix.zeros(spin.dim, spin.dim)
    cache: dict[int, Matrix] = {}

    def c_of(z: Matrix) -> Matrix:
        key = id(z)
        if key not in cache:
            cache[key] = clifford_action(spin, z)
        return cache[key]

    for coef, zs in monomials:
        coef = Fraction(coef)
        if not coef:
            continue
        k = len(zs)
        acc = Matrix.zeros(spin.dim, spin.dim)
        ops = [c_of(z) for z in zs]
        for perm in itertools.permutations(range(k)):
            prod = Matrix.identity(spin.dim)
            for i in perm:
                prod = prod @ ops[i]
            acc = acc + prod if _perm_sign(perm) > 0 else acc - prod
        out = out + acc.scale(coef / math.factorial(k))
    return out


@dataclass(eq=False)
class CubicTerm:
    """v in Lambda^3 s as ``(coefficient, (i, j, k))`` over indices of :func:`s_basis`."""

    wedge_expansion: list[tuple[Fraction, tuple[int, int, int]]]
    phi_v: Matrix

    def is_zero(self) -> bool:
        return not self.wedge_expansion


def cubic_element(spin: SpinModule) -> CubicTerm:
    p = spin.parabolic
    g = p.algebra
    basis, dual = s_basis(p)
    m = len(basis)
    # v = sum_{i<j<k} omega(b_i, b_j, b_k) d_i ^ d_j ^ d_k with 2 omega(X,Y,Z) = B([X,Y],Z)
    terms = []
    for i, j, k in itertools.combinations(range(m), 3):
        coef = g.killing(g.bracket(basis[i], basis[j]), basis[k]) / 2
        if coef:
            terms.append((coef, (_dual_index(i, m), _dual_index(j, m), _dual_index(k, m))))
    phi = chevalley(spin, [(c, tuple(basis[t] for t in idx)) for c, idx in terms])
    return CubicTerm(terms, phi)


def _dual_index(i: int, m: int) -> int:
    half = m // 2
    return i + half if i < half else i - half


def three_form_of(p: ParabolicAlgebra, term: CubicTerm, x: Matrix, y: Matrix, z: Matrix) -> Fraction:
    """Evaluate the 3-form B-dual to v on (x, y, z)."""
    g = p.algebra
    basis, _ = s_basis(p)
    args = (x, y, z)
    total = Fraction(0)
    for coef, idx in term.wedge_expansion:
        vecs = [basis[t] for t in idx]
        mat = [[g.killing(vecs[r], args[c]) for c in range(3)] for r in range(3)]
        total += coef * _det3(mat)
    return total


def _det3(m) -> Fraction:
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def nu_embedding(spin: SpinModule, x: Matrix) -> Matrix:
    """nu(X) = -1/4 sum_a [c([X,x_a]) c(y_a) + c([X,y_a]) c(x_a)]."""
    p = spin.parabolic
    if not p.in_l(x):
        raise ValueError("element is not in the Levi factor l")
    g = p.algebra
    out = Matrix.zeros(spin.dim, spin.dim)
    for xa, ya in p.dual_pairs:
        out = out + clifford_action(spin, g.bracket(x, xa)) @ clifford_action(spin, ya)
        out = out + clifford_action(spin, g.bracket(x, ya)) @ clifford_action(spin, xa)
    return out.scale(Fraction(-1, 4))


def gamma_omega_l(rep, spin: SpinModule) -> Matrix:
    """gamma(Omega_l) on V (x) S, spin-major ordering."""
    p = spin.parabolic
    iv, is_ = Matrix.identity(rep.dim), Matrix.identity(spin.dim)
    out = Matrix.zeros(rep.dim * spin.dim, rep.dim * spin.dim)
    for b, d in p.l_dual_pairs:
        gb = is_.kron(rep.act(b)) + nu_embedding(spin, b).kron(iv)
        gd = is_.kron(rep.act(d)) + nu_embedding(spin, d).kron(iv)
        out = out + gb @ gd
    return out
