import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubicdirac.dirac import dirac_complex, isotypic_blocks
from cubicdirac.fourier import (SmoothRepModel, casimir_growth_series, cg_scan, column_sum_norm,
                                dimension_estimate_check, global_T, growth_exponent,
                                seminorm_estimate_check, smallest_convergent_exponent)
from cubicdirac.lie import Weight, parabolic_split
from cubicdirac.linalg import Matrix, image_basis, kernel_basis
from cubicdirac.representations import build_irrep

SL2B = parabolic_split(2, (1, 1))
SL3B = parabolic_split(3, (1, 1, 1))


# -- growth series -------------------------------------------------------------

def test_series_sl2_terms():
    """Each partial sum adds (m+1)^n_exp * (8 / (8 + m^2 + 2m))^m_exp."""
    rep = casimir_growth_series(0, 1, 5)
    expect, acc = [], Fraction(0)
    for m in range(6):
        acc += Fraction(8, 8 + m * m + 2 * m)
        expect.append(acc)
    assert rep.values["partial_sums"] == expect


def test_series_n0_m1_converges():
    # terms decay like m^-2, so the exponent test says convergent
    rep = casimir_growth_series(0, 1, 10)
    assert rep.values["exponent"] == -2 and rep.verdict


def test_series_n4_threshold():
    assert smallest_convergent_exponent(2, 4) == 3
    assert casimir_growth_series(4, 3, 10).verdict
    for m in range(3):
        assert not casimir_growth_series(4, m, 10).verdict


def test_series_empty_truncation():
    rep = casimir_growth_series(4, 3, -1)
    assert rep.values["sum"] == 0 and rep.values["partial_sums"] == []


@given(st.integers(0, 6), st.integers(0, 6), st.integers(0, 12))
def test_series_monotone(n_exp, m_exp, lmax):
    rep = casimir_growth_series(n_exp, m_exp, lmax)
    ps = rep.values["partial_sums"]
    assert rep.values["monotone"] and all(a <= b for a, b in zip(ps, ps[1:]))
    assert rep.values["exponent"] == n_exp - 2 * m_exp


def test_growth_exponent_higher_rank():
    # sl3: shells of size K hold K+1 weights, dim grows like K^3
    assert growth_exponent(3, 1, 0) == 1 + 3
    assert smallest_convergent_exponent(3, 4) == 8


def test_report_json():
    doc = json.loads(json.dumps(casimir_growth_series(4, 3, 2).to_json()))
    ps = doc["values"]["partial_sums"]
    assert ps[0] == "1"
    assert ps[1] == {"exact": "9523/1331", "approx": 9523 / 1331}  # 1 + 2^4 (8/11)^3


# -- c_g scan --------------------------------------------------------------------

def brute_sl2_min(lmax):
    """|(h-1)^2 - (m+1)^2| / 8 over h = m - 2j + {0, 2}, by hand."""
    vals = []
    for m in range(lmax + 1):
        for j in range(m + 1):
            for shift in (0, 2):
                h = m - 2 * j + shift
                c = Fraction((h - 1) ** 2 - (m + 1) ** 2, 8)
                if c:
                    vals.append(abs(c))
    return min(vals) if vals else None


def test_cg_scan_sl2():
    rep = cg_scan(SL2B, 20)
    assert rep.values["min"] == Fraction(1, 2) == brute_sl2_min(20)
    assert rep.values["stable_from"] == 1
    assert cg_scan(SL2B, 2).values["min"] == Fraction(1, 2)
    assert cg_scan(SL2B, 0).values["min"] is None


def test_cg_scan_sl3():
    rep = cg_scan(SL3B, 6)
    assert rep.verdict and rep.values["min"] > 0
    assert rep.values["stable_from"] < 6
    minima = rep.values["minima_by_lmax"]
    assert all(b <= a for a, b in zip(minima, minima[1:]))


@pytest.mark.parametrize("n,comp,lam", [(2, (1, 1), (3,)), (3, (1, 1, 1), (1, 1)),
                                        (3, (2, 1), (2, 0))])
def test_scan_rows_match_block_data(n, comp, lam):
    """Scan rows from weight enumeration agree with the computed I-blocks."""
    p = parabolic_split(n, comp)
    blocks = isotypic_blocks(dirac_complex(build_irrep(n, lam), p))
    from_blocks = sorted((b.mu.coords, b.c, b.multiplicity) for b in blocks.I)
    rows = [r for r in cg_scan(p, sum(lam)).rows if r.lam == Weight(lam)]
    assert sorted((r.mu.coords, r.c, r.multiplicity) for r in rows) == from_blocks


def test_dimension_estimate_examples():
    rep = dimension_estimate_check(SL2B, Weight((1,)))
    assert (rep.values["lhs"], rep.values["rhs"], rep.verdict) == (2, 16, True)
    rep = dimension_estimate_check(SL2B, Weight((0,)))
    assert rep.values["lhs"] == 0 and rep.verdict
    lam = Weight((1, 1))
    blocks = isotypic_blocks(dirac_complex(build_irrep(3, lam), SL3B))
    rep = dimension_estimate_check(SL3B, lam, blocks)
    assert rep.values["rhs"] == 4096 and rep.verdict
    assert rep.values == dimension_estimate_check(SL3B, lam).values


# -- seminorm estimate --------------------------------------------------------------

def test_seminorm_finite_support_m0():
    model = SmoothRepModel(2, 3, support=(Weight((0,)), Weight((2,))))
    rep = seminorm_estimate_check(model, 0, samples=50)
    assert rep.verdict and rep.values["failures"] == 0


def test_seminorm_sl2_m2():
    rep = seminorm_estimate_check(SmoothRepModel(2, 10), 2, samples=100, seed=3)
    assert rep.verdict and rep.values["checks"] == 100 * 3 * 11


@settings(max_examples=15)
@given(st.integers(0, 5), st.integers(0, 3), st.integers(0, 2 ** 32))
def test_single_block_is_tight(m, m_exp, seed):
    """With v on one block, lhs * dim^2 equals rhs exactly."""
    model = SmoothRepModel(2, 5)
    lam = Weight((m,))
    rng = random.Random(seed)
    v = {lam: [[Fraction(rng.randint(-9, 9)) for _ in range(model.dim(lam))]]}
    rep = build_irrep(2, lam)
    from cubicdirac.representations import casimir_matrix, casimir_scalar
    power = (Matrix.identity(rep.dim) + casimir_matrix(rep)) ** m_exp
    boosted = {lam: [power.apply(v[lam][0])]}
    c = casimir_scalar(model.root_system, lam)
    for p in (0, 1, 2):
        assert (1 + c) ** m_exp * model.seminorm(p, v) == model.seminorm(p, boosted)


# -- global T ---------------------------------------------------------------------------

def test_global_T_trivial_support():
    model = SmoothRepModel(2, 0, support=(Weight((0,)),))
    g = global_T(model, SL2B)
    assert g.T.is_zero()
    assert g.report.values["C0_partial"] == 4 * 2


def test_global_T_sl2_truncation():
    g = global_T(SmoothRepModel(2, 6), SL2B)
    assert g.report.verdict and g.report.values["full_check"]
    assert g.report.values["cg"] == Fraction(1, 2)
    assert max(b["norm"] for b in g.report.values["blocks"]) == 2
    TD2 = g.T @ g.D2
    assert TD2 @ TD2 == TD2 == g.D2 @ g.T
    assert image_basis(g.D2 @ g.T) == image_basis(g.D)
    assert kernel_basis(g.D2 @ g.T) == kernel_basis(g.D)
    assert column_sum_norm(g.T) <= 2


def test_global_T_with_multiplicity():
    g = global_T(SmoothRepModel(2, 2, growth=1), SL2B)
    assert g.report.verdict
    assert g.block_sizes == [2] + [4] * 2 + [6] * 3


def test_global_T_empty():
    with pytest.raises(ValueError):
        global_T(SmoothRepModel(2, 0, support=()), SL2B)
