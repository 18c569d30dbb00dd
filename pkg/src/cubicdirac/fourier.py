"""Finite models of smooth SU(n)-representations and the estimates behind the
global splitting operator.

A model is a truncated product of isotypic components V(lam) = V_lam^m(lam).
Infinite sums are replaced by exact partial sums over the truncation together
with a decay exponent; every verdict comes from an exact rational comparison.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .dirac import (DiracBlockData, dirac_complex, isotypic_blocks, scalar_c,
                    splitting_operator_Tlambda, verify_T)
from .lie import ParabolicAlgebra, RootSystem, Weight
from .linalg import Matrix, format_rational, image_basis, kernel_basis
from .representations import build_irrep, casimir_matrix, casimir_scalar
from .weights import dominant_weights, levi_dimension, levi_types, weyl_dimension


@dataclass
class EstimateReport:
    check: str
    parameters: dict
    values: dict = field(default_factory=dict)
    verdict: bool = True
    rows: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"check": self.check, "parameters": _jsonable(self.parameters),
                "values": _jsonable(self.values), "verdict": self.verdict}


def _jsonable(obj):
    if isinstance(obj, Fraction):
        if obj.denominator == 1:
            return format_rational(obj)
        return {"exact": format_rational(obj), "approx": float(obj)}
    if isinstance(obj, Weight):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def growth_exponent(n: int, n_exp: int, m_exp: int) -> int:
    """Decay exponent k of the shell sums of (dim V_lam)^n_exp (1 + c(lam))^-m_exp ~ K^k.

    The shell |lam| = K holds ~K^(rank-1) weights, dim V_lam grows like K^N
    (N positive roots) and c(lam) like K^2.
    """
    rs = RootSystem(n)
    return (rs.rank - 1) + n_exp * len(rs.positive_roots) - 2 * m_exp


def smallest_convergent_exponent(n: int, n_exp: int) -> int:
    m = 0
    while growth_exponent(n, n_exp, m) >= -1:
        m += 1
    return m


def casimir_growth_series(n_exp: int, m_exp: int, lmax: int, n: int = 2) -> EstimateReport:
    """Partial sums of sum_lam (dim V_lam)^n_exp (1 + c(lam))^-m_exp over |lam| <= lmax."""
    rs = RootSystem(n)
    shells = [Fraction(0)] * (lmax + 1)
    for lam in dominant_weights(rs.rank, lmax):
        term = Fraction(weyl_dimension(rs, lam)) ** n_exp / (1 + casimir_scalar(rs, lam)) ** m_exp
        shells[int(lam.size())] += term
    partial = []
    acc = Fraction(0)
    for s in shells:
        acc += s
        partial.append(acc)
    monotone = all(a <= b for a, b in zip(partial, partial[1:]))
    k = growth_exponent(n, n_exp, m_exp)
    values = {"partial_sums": partial, "sum": partial[-1] if partial else Fraction(0),
              "exponent": k, "monotone": monotone,
              "convergent": k < -1}
    return EstimateReport("casimir-growth-series",
                          {"n": n, "n_exp": n_exp, "m_exp": m_exp, "lmax": lmax},
                          values, verdict=k < -1)


@dataclass
class ScanRow:
    lam: Weight
    mu: Weight
    c: Fraction
    dim_w: int
    multiplicity: int


def cg_scan(p: ParabolicAlgebra, lmax: int) -> EstimateReport:
    """min |c(lam, mu)| over c != 0, for every l-type mu of V_lam (x) S with |lam| <= lmax."""
    rs = p.root_system
    rows: list[ScanRow] = []
    minima: list[Fraction | None] = []
    current: Fraction | None = None
    for level in range(lmax + 1):
        for lam in dominant_weights(rs.rank, level):
            if lam.size() != level:
                continue
            for mu, mult in levi_types(p, lam).items():
                c = scalar_c(rs, p, lam, mu)
                if c == 0:
                    continue
                rows.append(ScanRow(lam, mu, c, levi_dimension(p, mu), mult))
                if current is None or abs(c) < current:
                    current = abs(c)
        minima.append(current)
    stable_from = None
    if current is not None:
        stable_from = min(k for k, v in enumerate(minima) if v == current)
    nonincreasing = all(a is None or (b is not None and b <= a)
                        for a, b in zip(minima, minima[1:]))
    ok = nonincreasing and all(v is None or v > 0 for v in minima)
    values = {"min": current, "minima_by_lmax": minima, "stable_from": stable_from,
              "rows": len(rows)}
    return EstimateReport("cg-scan", {"parabolic": p.label(), "lmax": lmax}, values, ok, rows)


def dimension_estimate_check(p: ParabolicAlgebra, lam: Weight,
                             blocks: DiracBlockData | None = None) -> EstimateReport:
    """sum over c != 0 blocks of (dim W_mu)^2 <= (dim V_lam)^2 (dim S)^2, blocks counted with multiplicity."""
    rs = p.root_system
    if blocks is None:
        types = [(mu, m) for mu, m in levi_types(p, lam).items()
                 if scalar_c(rs, p, lam, mu) != 0]
    else:
        types = [(b.mu, b.multiplicity) for b in blocks.I]
    lhs = sum(m * levi_dimension(p, mu) ** 2 for mu, m in types)
    dim_v = weyl_dimension(rs, lam)
    rhs = (dim_v * 2 ** p.dim_u) ** 2
    return EstimateReport("dimension-estimate", {"parabolic": p.label(), "lambda": lam},
                          {"lhs": lhs, "rhs": rhs, "blocks": sum(m for _, m in types)},
                          lhs <= rhs)


# ---------------------------------------------------------------------------
# truncated models


@dataclass
class SmoothRepModel:
    """V = prod_lam V_lam^m(lam) over a finite truncation.

    Multiplicities follow the catalog: ``(1 + |lam|)^growth`` on all dominant
    weights with |lam| <= lmax, or a finite ``support`` with multiplicity 1.
    Seminorm p is |v|_p = sum_lam (1 + |lam|)^p ||v(lam)||_max.
    """

    n: int
    lmax: int
    growth: int = 0
    support: tuple[Weight, ...] | None = None
    seminorm_orders: tuple[int, ...] = (0, 1, 2)

    @cached_property
    def root_system(self) -> RootSystem:
        return RootSystem(self.n)

    @cached_property
    def truncation(self) -> tuple[Weight, ...]:
        if self.support is not None:
            return tuple(sorted(self.support, key=lambda w: (w.size(), w.coords)))
        return tuple(dominant_weights(self.root_system.rank, self.lmax))

    def multiplicity(self, lam: Weight) -> int:
        if self.support is not None:
            return 1 if lam in self.support else 0
        return int(1 + lam.size()) ** self.growth

    def weight(self, p: int, lam: Weight) -> Fraction:
        return (1 + lam.size()) ** p

    def dim(self, lam: Weight) -> int:
        return weyl_dimension(self.root_system, lam)

    def seminorm(self, p: int, v: dict[Weight, list[list[Fraction]]]) -> Fraction:
        total = Fraction(0)
        for lam, copies in v.items():
            total += self.weight(p, lam) * _maxnorm(copies)
        return total

    def random_vector(self, rng: random.Random) -> dict[Weight, list[list[Fraction]]]:
        out = {}
        for lam in self.truncation:
            if rng.random() < 0.3:
                continue
            out[lam] = [[Fraction(rng.randint(-9, 9), rng.randint(1, 6))
                         for _ in range(self.dim(lam))]
                        for _ in range(self.multiplicity(lam))]
        return out


def _maxnorm(copies) -> Fraction:
    return max((abs(x) for c in copies for x in c), default=Fraction(0))


def seminorm_estimate_check(model: SmoothRepModel, m_exp: int, samples: int = 1000,
                            seed: int = 0) -> EstimateReport:
    """(1 + c(lam))^m |P(lam) v|_p <= (dim V_lam)^2 |(1 + Omega)^m v|_p on random v, with q = p.

    (1 + Omega)^m is applied through the actual Casimir matrices of each V_lam.
    """
    rs = model.root_system
    powers = {}
    for lam in model.truncation:
        rep = build_irrep(model.n, lam)
        powers[lam] = (Matrix.identity(rep.dim) + casimir_matrix(rep)) ** m_exp
    rng = random.Random(seed)
    checks = failures = 0
    worst = None
    for _ in range(samples):
        v = model.random_vector(rng)
        boosted = {lam: [powers[lam].apply(c) for c in copies] for lam, copies in v.items()}
        for p in model.seminorm_orders:
            rhs_norm = model.seminorm(p, boosted)
            for lam in model.truncation:
                part = {lam: v[lam]} if lam in v else {}
                lhs = (1 + casimir_scalar(rs, lam)) ** m_exp * model.seminorm(p, part)
                rhs = model.dim(lam) ** 2 * rhs_norm
                checks += 1
                if lhs > rhs:
                    failures += 1
                if rhs:
                    ratio = lhs / rhs
                    worst = ratio if worst is None or ratio > worst else worst
    return EstimateReport("seminorm-estimate",
                          {"n": model.n, "lmax": model.lmax, "growth": model.growth,
                           "m_exp": m_exp, "samples": samples, "seed": seed},
                          {"checks": checks, "failures": failures, "worst_ratio": worst},
                          failures == 0)


# ---------------------------------------------------------------------------
# global T


def column_sum_norm(m: Matrix) -> Fraction:
    return max((sum((abs(m[i, j]) for i in range(m.rows)), Fraction(0))
                for j in range(m.cols)), default=Fraction(0))


def row_sum_norm(m: Matrix) -> Fraction:
    return column_sum_norm(m.T)


@dataclass(eq=False)
class GlobalT:
    T: Matrix
    D2: Matrix
    D: Matrix
    block_sizes: list[int]
    report: EstimateReport


def global_T(model: SmoothRepModel, p: ParabolicAlgebra, cg: Fraction | None = None,
             full_limit: int = 2000) -> GlobalT:
    """T = direct sum of T_lam over the truncation with its per-block checks.

    The full block matrix (multiplicities included) is assembled only when its
    size is at most ``full_limit``.
    """
    if not model.truncation:
        raise ValueError("model truncation is empty")
    rs = model.root_system
    if cg is None:
        top = int(max(l.size() for l in model.truncation))
        cg = cg_scan(p, max(4, top)).values["min"]
    cg_inv = 1 / cg
    per_block = []
    ts, d2s, ds, sizes = [], [], [], []
    ok = True
    dim_s = 2 ** p.dim_u
    for lam in model.truncation:
        cx = dirac_complex(build_irrep(model.n, lam), p)
        blocks = isotypic_blocks(cx)
        T = splitting_operator_Tlambda(blocks, cx.dim).matrix
        checks = verify_T(cx, T)
        P = cx.D2 @ T
        checks["Im D^2T = Im D"] = image_basis(P) == image_basis(cx.D)
        checks["Ker D^2T = Ker D"] = kernel_basis(P) == kernel_basis(cx.D)
        kp, ip = kernel_basis(P), image_basis(P)
        checks["Ker D^2T + Im D^2T direct"] = (kp.dim + ip.dim == cx.dim
                                               and kp.is_direct_sum_with(ip))
        col = column_sum_norm(T)
        checks["norm bound"] = col <= cg_inv
        ok = ok and all(checks.values())
        per_block.append({"lambda": lam, "norm": col, "row_norm": row_sum_norm(T),
                          "failed": [k for k, v in checks.items() if not v]})
        for _ in range(model.multiplicity(lam)):
            ts.append(T)
            d2s.append(cx.D2)
            ds.append(cx.D)
            sizes.append(cx.dim)
    total = sum(sizes)
    full_ok = None
    T_full = D2_full = D_full = None
    if total <= full_limit:
        T_full = _block_diag(ts, sizes)
        D2_full = _block_diag(d2s, sizes)
        D_full = _block_diag(ds, sizes)
        TD2 = T_full @ D2_full
        full_ok = TD2 @ TD2 == TD2 and D2_full @ T_full == TD2
        ok = ok and full_ok
    m0 = smallest_convergent_exponent(model.n, 4)
    c0 = cg_inv * dim_s ** 2 * sum(
        (Fraction(model.dim(lam)) ** 4 / (1 + casimir_scalar(rs, lam)) ** m0
         for lam in model.truncation), Fraction(0))
    values = {"cg": cg, "blocks": per_block, "total_dim": total, "full_check": full_ok,
              "m0": m0, "C0_partial": c0}
    rep = EstimateReport("global-T", {"n": model.n, "lmax": model.lmax,
                                      "growth": model.growth, "parabolic": p.label()},
                         values, ok)
    return GlobalT(T_full, D2_full, D_full, sizes, rep)


def _block_diag(mats: Sequence[Matrix], sizes: Sequence[int]) -> Matrix:
    return Matrix.from_blocks({(i, i): m for i, m in enumerate(mats)}, sizes, sizes)
