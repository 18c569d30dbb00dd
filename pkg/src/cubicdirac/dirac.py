"""Dirac operator, differentials and the Hodge-type decompositions on V (x) S.

All operators act on V (x) S in spin-major order: the basis vector
``x_A (x) v_i`` has index ``index(A) * dim V + i``.  The boundary ``bd``
(u-homology) lowers spin degree, the coboundary ``d`` (ubar-cohomology,
transported to Lambda(u) (x) V through ``u ~ ubar*``) raises it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .clifford import SpinModule, clifford_action, cubic_element, gamma_omega_l
from .lie import ParabolicAlgebra, RootSystem, Weight, elementary
from .linalg import (LinAlgError, Matrix, SubspaceBasis, commutes, image_basis, inverse,
                     kernel_basis, projector_along, rank)
from .representations import (DecompositionError, ModuleData, Representation,
                              casimir_matrix, isotypic_decomposition)
from .weights import is_levi_dominant, levi_dimension


class IdentityError(AssertionError):
    """An exact operator identity failed; ``checks`` names which."""

    def __init__(self, message: str, checks: dict | None = None):
        super().__init__(message)
        self.checks = checks or {}


@dataclass(eq=False)
class GradedOperator:
    matrix: Matrix
    degree_shift: int | None
    name: str = ""


def _assemble(blocks: dict[tuple[int, int], Matrix], nspin: int, dimv: int) -> Matrix:
    return Matrix.from_blocks(blocks, [dimv] * nspin, [dimv] * nspin)


def _add_block(blocks, key, m: Matrix):
    if key in blocks:
        blocks[key] = blocks[key] + m
    else:
        blocks[key] = m


def boundary_map(rep: Representation, spin: SpinModule) -> GradedOperator:
    """Chevalley-Eilenberg boundary of u-homology with coefficients in V.

    bd(x_1^..^x_k (x) w) = sum_i (-1)^i  x_1^..x_i-hat..^x_k (x) x_i w
                         + sum_{i<j} (-1)^{i+j} [x_i,x_j]^x_1^..^x_k (x) w
    (positions 1-based).
    """
    p = spin.parabolic
    g = p.algebra
    act_x = [rep.act(x) for x in p.u_basis]
    ident = Matrix.identity(rep.dim)
    blocks: dict = {}
    for src, s in enumerate(spin.basis):
        for i, a in enumerate(s):
            rest = s[:i] + s[i + 1:]
            sign = -1 if i % 2 == 0 else 1  # (-1)^(i+1) with 0-based i
            _add_block(blocks, (spin.index[rest], src), act_x[a].scale(sign))
        for i in range(len(s)):
            for j in range(i + 1, len(s)):
                br = g.bracket(p.u_basis[s[i]], p.u_basis[s[j]])
                rest = tuple(t for q, t in enumerate(s) if q not in (i, j))
                for c, coef in enumerate(p.u_coords(br)):
                    if not coef or c in rest:
                        continue
                    sign2 = (-1) ** sum(1 for t in rest if t < c)
                    tgt = spin.index[tuple(sorted(rest + (c,)))]
                    _add_block(blocks, (tgt, src), ident.scale((-1) ** (i + j) * sign2 * coef))
    return GradedOperator(_assemble(blocks, spin.dim, rep.dim), -1, "boundary")


def coboundary_map(rep: Representation, spin: SpinModule) -> GradedOperator:
    """Chevalley-Eilenberg coboundary of ubar-cohomology, moved onto Lambda(u) (x) V.

    x_A (x) w stands for the cochain f with f(y_A) = w, where y_a is the
    B-dual partner of x_a.  Then
    (df)(y_0..y_k) = sum_i (-1)^i y_i f(..y_i-hat..)
                   + sum_{i<j} (-1)^{i+j} f([y_i,y_j], ..y_i-hat..y_j-hat..).
    """
    p = spin.parabolic
    g = p.algebra
    act_y = [rep.act(y) for y in p.ubar_basis]
    ident = Matrix.identity(rep.dim)
    blocks: dict = {}
    for tgt, bset in enumerate(spin.basis):
        for i, b in enumerate(bset):
            rest = bset[:i] + bset[i + 1:]
            _add_block(blocks, (tgt, spin.index[rest]), act_y[b].scale((-1) ** i))
        for i in range(len(bset)):
            for j in range(i + 1, len(bset)):
                br = g.bracket(p.ubar_basis[bset[i]], p.ubar_basis[bset[j]])
                rest = tuple(t for q, t in enumerate(bset) if q not in (i, j))
                for e, coef in enumerate(p.ubar_coords(br)):
                    if not coef or e in rest:
                        continue
                    sign = (-1) ** sum(1 for t in rest if t < e)
                    src = spin.index[tuple(sorted(rest + (e,)))]
                    _add_block(blocks, (tgt, src), ident.scale((-1) ** (i + j) * sign * coef))
    return GradedOperator(_assemble(blocks, spin.dim, rep.dim), 1, "coboundary")


def dirac_operator(rep: Representation, spin: SpinModule,
                   s_basis: Sequence[Matrix] | None = None) -> GradedOperator:
    """D = sum_i b_i (x) c(d_i) + 1 (x) phi(v) over B-dual bases of s.

    ``s_basis`` may be any basis of s; its B-dual is computed here, so passing
    a different basis checks basis independence.
    """
    p = spin.parabolic
    g = p.algebra
    if s_basis is None:
        pairs = [(x, y) for x, y in p.dual_pairs] + [(y, x) for x, y in p.dual_pairs]
    else:
        pairs = list(zip(s_basis, _b_dual(g, s_basis)))
    out = Matrix.zeros(rep.dim * spin.dim, rep.dim * spin.dim)
    for b, d in pairs:
        out = out + clifford_action(spin, d).kron(rep.act(b))
    cubic = cubic_element(spin)
    if not cubic.is_zero():
        out = out + cubic.phi_v.kron(Matrix.identity(rep.dim))
    return GradedOperator(out, None, "dirac")


def _b_dual(g, basis: Sequence[Matrix]) -> list[Matrix]:
    gram = Matrix.from_rows([[g.killing(a, b) for b in basis] for a in basis])
    ginv = inverse(gram)
    out = []
    for j in range(len(basis)):
        acc = Matrix.zeros(g.n, g.n)
        for k, bk in enumerate(basis):
            if ginv[k, j]:
                acc = acc + bk.scale(ginv[k, j])
        out.append(acc)
    return out


def square_constant(p: ParabolicAlgebra) -> Fraction:
    rs = p.root_system
    return rs.pair(p.rho_l, p.rho_l) - rs.pair(p.rho_g, p.rho_g)


def scalar_c(rs: RootSystem, p: ParabolicAlgebra, lam: Weight, mu: Weight) -> Fraction:
    a = mu + p.rho_ubar + p.rho_l
    b = lam + p.rho_g
    return rs.pair(a, a) - rs.pair(b, b)


def levi_action(rep: Representation, spin: SpinModule, x: Matrix) -> Matrix:
    """Sigma(x): x acting on V and by the adjoint action on Lambda(u)."""
    return (Matrix.identity(spin.dim).kron(rep.act(x))
            + spin.adjoint_action(x).kron(Matrix.identity(rep.dim)))


@dataclass(eq=False)
class DiracComplex:
    """V (x) S with all operators built lazily and cached."""

    rep: Representation
    spin: SpinModule

    @property
    def parabolic(self) -> ParabolicAlgebra:
        return self.spin.parabolic

    @property
    def dim(self) -> int:
        return self.rep.dim * self.spin.dim

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        dv = self.rep.dim
        return tuple(self.spin.degrees[i // dv] for i in range(self.dim))

    def degree_indices(self, k: int) -> list[int]:
        return [i for i, d in enumerate(self.degrees) if d == k]

    @property
    def max_degree(self) -> int:
        return self.parabolic.dim_u

    @cached_property
    def weights(self) -> tuple[Weight, ...]:
        return tuple(ws + wv for ws in self.spin.weights for wv in self.rep.weights)

    @cached_property
    def D(self) -> Matrix:
        return dirac_operator(self.rep, self.spin).matrix

    @cached_property
    def bd(self) -> Matrix:
        return boundary_map(self.rep, self.spin).matrix

    @cached_property
    def d(self) -> Matrix:
        return coboundary_map(self.rep, self.spin).matrix

    @cached_property
    def D2(self) -> Matrix:
        return self.D @ self.D

    @cached_property
    def omega_g(self) -> Matrix:
        return Matrix.identity(self.spin.dim).kron(casimir_matrix(self.rep))

    @cached_property
    def gamma_omega_l(self) -> Matrix:
        return gamma_omega_l(self.rep, self.spin)

    @cached_property
    def levi_actions(self) -> tuple[Matrix, ...]:
        return tuple(levi_action(self.rep, self.spin, x) for x in self.parabolic.l_basis)

    @cached_property
    def module_data(self) -> ModuleData:
        p = self.parabolic
        rs = p.root_system
        n = p.n

        def e(i, j):
            return levi_action(self.rep, self.spin, elementary(n, i, j))

        simple = p.l_simple_indices
        return ModuleData(self.dim, self.weights,
                          raising={k: e(k, k + 1) for k in simple},
                          lowering={k: e(k + 1, k) for k in simple},
                          simple_roots={k: rs.simple_roots[k] for k in simple},
                          parabolic=p)

    def is_degree_preserving(self, m: Matrix) -> bool:
        deg = self.degrees
        return all(m[i, j] == 0 for i in range(m.rows) for j in range(m.cols)
                   if deg[i] != deg[j])

    def is_levi_equivariant(self, m: Matrix) -> bool:
        return all(commutes(m, a) for a in self.levi_actions)


def dirac_complex(rep: Representation, p: ParabolicAlgebra,
                  flip_contraction: bool = False) -> DiracComplex:
    return DiracComplex(rep, SpinModule(p, flip_contraction))


# ---------------------------------------------------------------------------


@dataclass
class SquareFormulaReport:
    const: Fraction
    residual_rank: int
    max_residual: Fraction

    @property
    def ok(self) -> bool:
        return self.residual_rank == 0


def verify_square_formula(cx: DiracComplex, strict: bool = True) -> SquareFormulaReport:
    """D^2 = -Omega_g (x) 1 + gamma(Omega_l) + const, const = |rho_l|^2 - |rho_g|^2."""
    const = square_constant(cx.parabolic)
    resid = (cx.D2 + cx.omega_g - cx.gamma_omega_l
             - Matrix.identity(cx.dim).scale(const))
    rep = SquareFormulaReport(const, rank(resid), resid.max_abs())
    if strict and not rep.ok:
        raise IdentityError(f"square formula residual has rank {rep.residual_rank}, "
                            f"max entry {rep.max_residual}")
    return rep


@dataclass(eq=False)
class DiracBlock:
    mu: Weight
    space: SubspaceBasis
    projector: Matrix
    c: Fraction
    multiplicity: int
    levi_dim: int


@dataclass(eq=False)
class DiracBlockData:
    lam: Weight
    blocks: list[DiracBlock]

    @property
    def I(self) -> list[DiracBlock]:
        return [b for b in self.blocks if b.c != 0]

    @property
    def J(self) -> list[DiracBlock]:
        return [b for b in self.blocks if b.c == 0]


def isotypic_blocks(cx: DiracComplex) -> DiracBlockData:
    """Q(mu)-blocks of V_lam (x) S with D^2 checked to act by c(lam, mu) on each."""
    lam = cx.rep.highest_weight
    if lam is None:
        raise ValueError("isotypic_blocks needs an irreducible V with known highest weight")
    p = cx.parabolic
    rs = p.root_system
    out = []
    for blk in isotypic_decomposition(cx.module_data):
        c = scalar_c(rs, p, lam, blk.label)
        basis = blk.basis.matrix
        if cx.D2 @ basis != basis.scale(c):
            raise IdentityError(f"D^2 does not act by c({lam},{blk.label}) = {c} on its block")
        out.append(DiracBlock(blk.label, blk.basis, blk.projector, c, blk.multiplicity,
                              blk.irrep_dim))
    return DiracBlockData(lam, out)


def block_span(blocks: Sequence[DiracBlock], ambient: int) -> SubspaceBasis:
    if not blocks:
        return SubspaceBasis.zero(ambient)
    m = blocks[0].space.matrix.hstack(*[b.space.matrix for b in blocks[1:]])
    return image_basis(m)


@dataclass(eq=False)
class HodgeDecomposition:
    ker_D: SubspaceBasis
    im_D: SubspaceBasis
    ker_d: SubspaceBasis
    im_d: SubspaceBasis
    ker_bd: SubspaceBasis
    im_bd: SubspaceBasis
    harmonic_projector: Matrix   # onto Ker D along Im D
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def dims(self) -> dict[str, int]:
        return {"ker_D": self.ker_D.dim, "im_D": self.im_D.dim, "ker_d": self.ker_d.dim,
                "im_d": self.im_d.dim, "ker_bd": self.ker_bd.dim, "im_bd": self.im_bd.dim}


def hodge_decompose(cx: DiracComplex, strict: bool = True) -> HodgeDecomposition:
    D, d, bd, D2 = cx.D, cx.d, cx.bd, cx.D2
    n = cx.dim
    ker_D, im_D = kernel_basis(D), image_basis(D)
    ker_d, im_d = kernel_basis(d), image_basis(d)
    ker_bd, im_bd = kernel_basis(bd), image_basis(bd)
    checks = {}
    checks["V(x)S = Ker D + Im D"] = (ker_D.dim + im_D.dim == n
                                       and ker_D.is_direct_sum_with(im_D))
    checks["Ker D = Ker D^2"] = kernel_basis(D2) == ker_D
    checks["Im D = Im D^2"] = image_basis(D2) == im_D
    checks["Ker D = Ker d & Ker bd"] = kernel_basis(d.vstack(bd)) == ker_D
    checks["Im D = Im d + Im bd"] = (im_d.is_direct_sum_with(im_bd)
                                      and im_d.sum(im_bd) == im_D)
    checks["Ker d = Ker D + Im d"] = (ker_D.is_direct_sum_with(im_d)
                                       and ker_D.sum(im_d) == ker_d)
    checks["Ker bd = Ker D + Im bd"] = (ker_D.is_direct_sum_with(im_bd)
                                         and ker_D.sum(im_bd) == ker_bd)
    two_dbd = (d @ bd).scale(2)
    two_bdd = (bd @ d).scale(2)
    checks["D^2 = 2 bd d + 2 d bd"] = D2 == two_dbd + two_bdd
    for label, im, op in (("Im d", im_d, two_dbd), ("Im bd", im_bd, two_bdd)):
        img = D2 @ im.matrix
        checks[f"D^2 = {'2 d bd' if op is two_dbd else '2 bd d'} on {label}"] = img == op @ im.matrix
        checks[f"D^2 bijective on {label}"] = (rank(img) == im.dim
                                               and im.contains(image_basis(img)))
    try:
        harm = projector_along(ker_D, im_D)
    except LinAlgError:
        harm = Matrix.zeros(n, n)
        checks["V(x)S = Ker D + Im D"] = False
    hd = HodgeDecomposition(ker_D, im_D, ker_d, im_d, ker_bd, im_bd, harm, checks)
    if strict and not hd.ok:
        bad = [k for k, v in checks.items() if not v]
        raise IdentityError("Hodge decomposition failed: " + ", ".join(bad), checks)
    return hd


# ---------------------------------------------------------------------------
# cohomology


@dataclass
class DegreeEntry:
    degree: int
    dim: int
    weights: list[tuple[Weight, int]]   # l-highest weight, multiplicity


@dataclass
class CohomologyTable:
    variant: str
    entries: list[DegreeEntry]

    @property
    def dims(self) -> list[int]:
        return [e.dim for e in self.entries]

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def euler_characteristic(self) -> int:
        return sum((-1) ** e.degree * e.dim for e in self.entries)

    def same_as(self, other: "CohomologyTable") -> bool:
        return [(e.degree, e.dim, e.weights) for e in self.entries] == \
            [(e.degree, e.dim, e.weights) for e in other.entries]


VARIANTS = ("ubar-cohomology", "u-homology", "harmonic")


def _hw_vectors(cx: DiracComplex) -> dict[tuple[int, Weight], Matrix]:
    """Global column bases of l-highest weight vectors per (degree, weight)."""
    data = cx.module_data
    p = cx.parabolic
    out = {}
    for k in range(cx.max_degree + 1):
        idx = cx.degree_indices(k)
        present = sorted({cx.weights[i] for i in idx})
        for mu in present:
            if not is_levi_dominant(p, mu):
                continue
            local = data.highest_weight_vectors(mu, restrict=idx)
            if local.cols == 0:
                continue
            cols = [i for i in data.windex[mu] if i in set(idx)]
            m = local
            rows = [[Fraction(0)] * m.cols for _ in range(cx.dim)]
            for r, i in enumerate(cols):
                for j in range(m.cols):
                    rows[i][j] = m[r, j]
            out[(k, mu)] = Matrix.from_rows(rows)
    return out


def cohomology(cx: DiracComplex, variant: str = "ubar-cohomology") -> CohomologyTable:
    """Graded dimensions and l-highest weights of H^*(ubar,V), H_*(u,V) or Ker D.

    Multiplicities come from highest weight vectors: since l acts semisimply
    and d, bd commute with it, the multiplicity of W_mu in Ker/Im equals the
    kernel/image dimension on the highest weight vectors of weight mu.
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; choose from {VARIANTS}")
    p = cx.parabolic
    hw = _hw_vectors(cx)
    if variant == "ubar-cohomology":
        up = cx.d
    elif variant == "u-homology":
        up = cx.bd
    else:
        up = cx.d.vstack(cx.bd)
    entries = []
    for k in range(cx.max_degree + 1):
        weights = []
        for (deg, mu), n_mat in sorted(hw.items(), key=lambda t: (t[0][0], t[0][1])):
            if deg != k:
                continue
            kernel_dim = n_mat.cols - rank(up @ n_mat)
            if variant == "ubar-cohomology":
                prev = hw.get((k - 1, mu))
                im_dim = rank(cx.d @ prev) if prev is not None else 0
            elif variant == "u-homology":
                prev = hw.get((k + 1, mu))
                im_dim = rank(cx.bd @ prev) if prev is not None else 0
            else:
                im_dim = 0
            mult = kernel_dim - im_dim
            if mult:
                weights.append((mu, mult))
        dim = sum(m * levi_dimension(p, mu) for mu, m in weights)
        entries.append(DegreeEntry(k, dim, weights))
    return CohomologyTable(variant, entries)


def cohomology_dims_bruteforce(cx: DiracComplex, variant: str = "ubar-cohomology") -> list[int]:
    """dim Ker - dim Im per degree from plain ranks of the degree blocks."""
    op = cx.d if variant == "ubar-cohomology" else cx.bd
    shift = 1 if variant == "ubar-cohomology" else -1
    dims = []
    for k in range(cx.max_degree + 1):
        src = cx.degree_indices(k)
        tgt = cx.degree_indices(k + shift)
        ker = len(src) - (rank(op.submatrix(tgt, src)) if tgt else 0)
        prev = cx.degree_indices(k - shift)
        im = rank(op.submatrix(src, prev)) if prev else 0
        dims.append(ker - im)
    return dims


def chain_euler_characteristic(cx: DiracComplex) -> int:
    from math import comb
    return sum((-1) ** k * comb(cx.parabolic.dim_u, k) * cx.rep.dim
               for k in range(cx.max_degree + 1))


# ---------------------------------------------------------------------------
# splitting operators


def splitting_operator_Tlambda(blocks: DiracBlockData, dim: int) -> GradedOperator:
    """T_lam = sum over I(lam) of Q(mu) / c(lam, mu): inverse of D^2 on Im D, zero on Ker D."""
    out = Matrix.zeros(dim, dim)
    for b in blocks.I:
        out = out + b.projector.scale(1 / b.c)
    return GradedOperator(out, 0, "T")


def verify_T(cx: DiracComplex, T: Matrix) -> dict[str, bool]:
    D2T = cx.D2 @ T
    TD2 = T @ cx.D2
    return {
        "D^2 T = T D^2": D2T == TD2,
        "(T D^2)^2 = T D^2": TD2 @ TD2 == TD2,
        "T commutes with d": commutes(T, cx.d),
        "T commutes with bd": commutes(T, cx.bd),
        "T is l-equivariant": cx.is_levi_equivariant(T),
        "T is degree-preserving": cx.is_degree_preserving(T),
    }


@dataclass(eq=False)
class Splittings:
    sigma_d: Matrix
    sigma_bd: Matrix
    checks: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def main_theorem_splittings(cx: DiracComplex, T: Matrix | None = None,
                            hodge: HodgeDecomposition | None = None,
                            strict: bool = True) -> Splittings:
    """sigma_d = 2 d bd T and sigma_bd = 2 bd d T.

    On Ker d, sigma_d is the projection onto Im d along Ker D (and similarly
    for bd); on all of V (x) S each is an idempotent with that image.
    """
    if T is None:
        T = splitting_operator_Tlambda(isotypic_blocks(cx), cx.dim).matrix
    if hodge is None:
        hodge = hodge_decompose(cx, strict=False)
    sd = (cx.d @ cx.bd @ T).scale(2)
    sb = (cx.bd @ cx.d @ T).scale(2)
    checks = {}
    for name, s, im, ker, op in (("sigma_d", sd, hodge.im_d, hodge.ker_d, cx.d),
                                 ("sigma_bd", sb, hodge.im_bd, hodge.ker_bd, cx.bd)):
        checks[f"{name} idempotent"] = s @ s == s
        checks[f"{name} image"] = image_basis(s) == im
        checks[f"{name} fixes coboundaries"] = s @ op == op
        kd = ker.matrix
        checks[f"{name} kills Ker D"] = (s @ hodge.ker_D.matrix).is_zero()
        checks[f"{name} preserves Ker"] = ker.contains(image_basis(s @ kd)) if kd.cols else True
        checks[f"{name} degree-preserving"] = cx.is_degree_preserving(s)
        checks[f"{name} l-equivariant"] = cx.is_levi_equivariant(s)
    out = Splittings(sd, sb, checks)
    if strict and not out.ok:
        bad = [k for k, v in checks.items() if not v]
        raise IdentityError("splitting checks failed: " + ", ".join(bad), checks)
    return out


# ---------------------------------------------------------------------------
# the full identity suite for one complex


@dataclass
class IdentityResult:
    name: str
    ok: bool
    residual_rank: int | None = None
    detail: str = ""

    @property
    def status(self) -> str:
        return "exact-pass" if self.ok else "fail"


def _residual(name: str, m: Matrix) -> IdentityResult:
    r = rank(m)
    return IdentityResult(name, r == 0, r, "" if r == 0 else f"max entry {m.max_abs()}")


def identity_suite(cx: DiracComplex) -> tuple[list[IdentityResult], dict]:
    """Run every exact identity on ``cx``; returns results and a summary of dimensions.

    A failing stage never aborts later ones: exceptions from blocks that
    require an earlier identity are recorded as failures of that stage.
    """
    results: list[IdentityResult] = []
    summary: dict = {"dim": cx.dim, "const": square_constant(cx.parabolic)}
    D, d, bd = cx.D, cx.d, cx.bd
    results.append(_residual("d^2 = 0", d @ d))
    results.append(_residual("bd^2 = 0", bd @ bd))
    results.append(_residual("D = 2 bd + d", D - bd.scale(2) - d))
    sq = verify_square_formula(cx, strict=False)
    results.append(IdentityResult("D^2 = -Omega_g + gamma(Omega_l) + const", sq.ok,
                                  sq.residual_rank,
                                  "" if sq.ok else f"max entry {sq.max_residual}"))
    for name, op in (("D", D), ("d", d), ("bd", bd)):
        results.append(IdentityResult(f"{name} is l-equivariant", cx.is_levi_equivariant(op)))

    hd = hodge_decompose(cx, strict=False)
    for name, ok in hd.checks.items():
        results.append(IdentityResult(name, ok))
    summary["dims"] = hd.dims()

    blocks = None
    try:
        blocks = isotypic_blocks(cx)
        results.append(IdentityResult("D^2 = c(lam,mu) on every block", True))
    except (IdentityError, DecompositionError) as exc:
        results.append(IdentityResult("D^2 = c(lam,mu) on every block", False, None, str(exc)))
    if blocks is not None:
        results.append(IdentityResult("J blocks span Ker D",
                                      block_span(blocks.J, cx.dim) == hd.ker_D))
        results.append(IdentityResult("I blocks span Im D",
                                      block_span(blocks.I, cx.dim) == hd.im_D))
        summary["blocks"] = {"I": sum(b.multiplicity for b in blocks.I),
                             "J": sum(b.multiplicity for b in blocks.J)}

    tables = {v: cohomology(cx, v) for v in VARIANTS}
    ref = tables["harmonic"]
    results.append(IdentityResult(
        "H^*(ubar,V) = H_*(u,V) = Ker D",
        all(t.same_as(ref) for t in tables.values()) and ref.total_dim == hd.ker_D.dim))
    results.append(IdentityResult(
        "cohomology matches plain ranks",
        tables["ubar-cohomology"].dims == cohomology_dims_bruteforce(cx)
        and tables["u-homology"].dims == cohomology_dims_bruteforce(cx, "u-homology")))
    results.append(IdentityResult(
        "Euler characteristic",
        tables["ubar-cohomology"].euler_characteristic() == chain_euler_characteristic(cx)))
    summary["cohomology_dims"] = ref.dims

    if blocks is not None:
        T = splitting_operator_Tlambda(blocks, cx.dim).matrix
        for name, ok in verify_T(cx, T).items():
            results.append(IdentityResult(name, ok))
        sp = main_theorem_splittings(cx, T, hd, strict=False)
        for name, ok in sp.checks.items():
            results.append(IdentityResult(name, ok))
    else:
        for name in ("T_lam checks", "splitting checks"):
            results.append(IdentityResult(name, False, None,
                                          "skipped: block decomposition failed"))
    return results, summary
