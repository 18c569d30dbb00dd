import random
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubicdirac.clifford import SpinModule, s_basis
from cubicdirac.dirac import (boundary_map, chain_euler_characteristic, coboundary_map,
                              cohomology, cohomology_dims_bruteforce, dirac_complex,
                              dirac_operator, hodge_decompose, identity_suite, isotypic_blocks,
                              main_theorem_splittings, scalar_c, splitting_operator_Tlambda,
                              square_constant, verify_square_formula, verify_T)
from cubicdirac.lie import RootSystem, Weight, parabolic_split
from cubicdirac.linalg import Matrix, rank
from cubicdirac.representations import build_irrep
from cubicdirac.weights import kostant_borel_weights, weyl_orbit_with_lengths


def cx(n, comp, lam, **kw):
    return dirac_complex(build_irrep(n, lam), parabolic_split(n, comp), **kw)


def eigen_multiset(m: Matrix, values) -> Counter:
    """Multiplicities of the given candidate eigenvalues, for diagonalisable m."""
    out = Counter()
    for v in values:
        k = m.rows - rank(m - Matrix.identity(m.rows).scale(v))
        if k:
            out[v] = k
    assert sum(out.values()) == m.rows
    return out


SMALL_CASES = [(2, (1, 1), (m,)) for m in range(4)] + [
    (3, (1, 1, 1), (0, 0)), (3, (1, 1, 1), (1, 0)), (3, (2, 1), (1, 1)),
    (3, (1, 2), (1, 0)), (4, (2, 2), (1, 0, 0)), (4, (1, 3), (0, 1, 0))]


# -- chain maps ----------------------------------------------------------------

def test_sl2_trivial_is_zero():
    c = cx(2, (1, 1), (0,))
    assert c.bd.is_zero() and c.d.is_zero() and c.D.is_zero()


def test_sl2_standard_ranks():
    c = cx(2, (1, 1), (1,))
    assert rank(c.bd) == 1 and rank(c.d) == 1


def test_sl3_adjoint_squares_vanish():
    c = cx(3, (1, 1, 1), (1, 1))
    assert (c.bd @ c.bd).is_zero() and (c.d @ c.d).is_zero()
    assert c.dim == 64


@pytest.mark.parametrize("n,comp,lam", SMALL_CASES)
def test_degree_shifts(n, comp, lam):
    rep = build_irrep(n, lam)
    spin = SpinModule(parabolic_split(n, comp))
    bd, d = boundary_map(rep, spin), coboundary_map(rep, spin)
    assert (bd.degree_shift, d.degree_shift) == (-1, 1)
    deg = [spin.degrees[i // rep.dim] for i in range(rep.dim * spin.dim)]
    for op, shift in ((bd.matrix, -1), (d.matrix, 1)):
        assert all(op[i, j] == 0 for i in range(op.rows) for j in range(op.cols)
                   if deg[i] != deg[j] + shift)


@pytest.mark.parametrize("n,comp,lam", SMALL_CASES)
def test_dirac_is_twice_boundary_plus_coboundary(n, comp, lam):
    c = cx(n, comp, lam)
    assert c.D == c.bd.scale(2) + c.d
    assert c.D2 == (c.bd @ c.d + c.d @ c.bd).scale(2)


@settings(max_examples=10)
@given(st.sampled_from([(2, (1, 1), (2,)), (3, (2, 1), (1, 0)), (3, (1, 1, 1), (1, 0))]),
       st.integers(0, 2 ** 32))
def test_dirac_basis_independent(case, seed):
    n, comp, lam = case
    rep = build_irrep(n, lam)
    spin = SpinModule(parabolic_split(n, comp))
    basis, _ = s_basis(spin.parabolic)
    rng = random.Random(seed)
    while True:
        change = Matrix.from_rows([[Fraction(rng.randint(-3, 3)) for _ in basis] for _ in basis])
        if rank(change) == len(basis):
            break
    new = []
    for i in range(len(basis)):
        z = Matrix.zeros(n, n)
        for j, b in enumerate(basis):
            if change[i, j]:
                z = z + b.scale(change[i, j])
        new.append(z)
    assert dirac_operator(rep, spin, new).matrix == dirac_operator(rep, spin).matrix


def test_flipped_contraction_breaks_identity():
    c = cx(2, (1, 1), (1,), flip_contraction=True)
    assert c.D != c.bd.scale(2) + c.d


# -- square formula and block scalars -------------------------------------------

def test_square_constants():
    assert square_constant(parabolic_split(2, (1, 1))) == Fraction(-1, 8)
    assert square_constant(parabolic_split(3, (1, 1, 1))) == Fraction(-1, 3)
    assert square_constant(parabolic_split(3, (2, 1))) == Fraction(-1, 4)


@pytest.mark.parametrize("n,comp,lam", SMALL_CASES)
def test_square_formula(n, comp, lam):
    rep = verify_square_formula(cx(n, comp, lam))
    assert rep.ok and rep.residual_rank == 0
    assert rep.const == square_constant(parabolic_split(n, comp))


def test_scalar_c_examples():
    rs2, p2 = RootSystem(2), parabolic_split(2, (1, 1))
    got = [scalar_c(rs2, p2, Weight((1,)), Weight((h,))) for h in (3, 1, 1, -1)]
    assert got == [0, Fraction(-1, 2), Fraction(-1, 2), 0]
    assert scalar_c(rs2, p2, Weight((0,)), Weight((0,))) == 0
    assert scalar_c(RootSystem(3), parabolic_split(3, (1, 1, 1)),
                    Weight((0, 0)), Weight((0, 0))) == 0


@given(st.integers(0, 30), st.integers(-40, 40))
def test_scalar_c_sl2_closed_form(m, h):
    c = scalar_c(RootSystem(2), parabolic_split(2, (1, 1)), Weight((m,)), Weight((h,)))
    assert c == Fraction((h - 1) ** 2 - (m + 1) ** 2, 8)


def test_sl2_standard_spectra():
    c = cx(2, (1, 1), (1,))
    half = Fraction(1, 2)
    assert eigen_multiset(c.D2, [0, -half]) == {0: 2, -half: 2}
    T = splitting_operator_Tlambda(isotypic_blocks(c), c.dim).matrix
    assert eigen_multiset(T, [0, -2]) == {0: 2, -2: 2}


def test_block_examples():
    b = isotypic_blocks(cx(2, (1, 1), (0,)))
    assert not b.I and len(b.J) == len(b.blocks)
    b = isotypic_blocks(cx(2, (1, 1), (1,)))
    assert sum(x.multiplicity for x in b.I) == 2 and sum(x.multiplicity for x in b.J) == 2
    b = isotypic_blocks(cx(3, (1, 1, 1), (1, 1)))
    assert sum(x.space.dim for x in b.blocks) == 64


# -- Hodge decomposition ---------------------------------------------------------

def test_hodge_examples():
    h = hodge_decompose(cx(2, (1, 1), (0,)))
    assert h.ker_D.dim == 2 and h.im_D.dim == 0
    h = hodge_decompose(cx(2, (1, 1), (1,)))
    assert (h.ker_D.dim, h.im_d.dim, h.im_bd.dim) == (2, 1, 1)


@pytest.mark.parametrize("n,comp,lam", SMALL_CASES)
def test_hodge_checks(n, comp, lam):
    c = cx(n, comp, lam)
    h = hodge_decompose(c)
    assert h.ok, [k for k, v in h.checks.items() if not v]
    assert h.ker_D.dim + h.im_D.dim == c.dim
    assert h.ker_D == h.ker_d.intersection(h.ker_bd)
    assert h.im_D == h.im_d.sum(h.im_bd)
    assert h.im_d.intersection(h.im_bd).dim == 0


# -- cohomology --------------------------------------------------------------------

def test_sl3_borel_trivial_cohomology():
    c = cx(3, (1, 1, 1), (0, 0))
    assert cohomology(c).dims == [1, 2, 2, 1]
    assert cohomology_dims_bruteforce(c) == [1, 2, 2, 1]


@pytest.mark.parametrize("m", range(5))
def test_sl2_borel_cohomology(m):
    c = cx(2, (1, 1), (m,))
    for variant in ("ubar-cohomology", "u-homology", "harmonic"):
        t = cohomology(c, variant)
        assert t.dims == [1, 1]
        # lowest weight survives in degree 0; e (x) highest weight in degree 1
        assert [e.weights for e in t.entries] == [[(Weight((-m,)), 1)], [(Weight((m + 2,)), 1)]]


def test_sl3_parabolic_standard_counts():
    c = cx(3, (2, 1), (1, 0))
    t = cohomology(c)
    # one l-type per coset representative, of total dimension 6
    assert sum(len(e.weights) for e in t.entries) == 3
    assert t.total_dim == 6


@pytest.mark.parametrize("n,lam", [(2, (3,)), (3, (0, 0)), (3, (1, 0)), (3, (1, 1)),
                                   (3, (2, 1)), (4, (0, 0, 0)), (4, (1, 0, 0))])
def test_borel_cohomology_matches_kostant(n, lam):
    comp = (1,) * n
    c = cx(n, comp, lam)
    t = cohomology(c)
    rs = RootSystem(n)
    oracle = kostant_borel_weights(rs, Weight(lam))
    got = sorted((e.degree, mu) for e in t.entries for mu, mult in e.weights for _ in range(mult))
    assert got == sorted(oracle)
    lengths = Counter(ln for ln, _ in weyl_orbit_with_lengths(rs, rs.rho))
    assert t.dims == [lengths[k] for k in range(len(t.dims))]
    assert cohomology_dims_bruteforce(c) == t.dims
    assert cohomology_dims_bruteforce(c, "u-homology") == t.dims


@pytest.mark.parametrize("n,comp,lam", SMALL_CASES)
def test_variants_agree(n, comp, lam):
    c = cx(n, comp, lam)
    tables = [cohomology(c, v) for v in ("ubar-cohomology", "u-homology", "harmonic")]
    assert tables[0].same_as(tables[1]) and tables[0].same_as(tables[2])
    assert tables[0].total_dim == hodge_decompose(c).ker_D.dim
    assert tables[0].euler_characteristic() == chain_euler_characteristic(c)


def test_unknown_variant():
    with pytest.raises(ValueError):
        cohomology(cx(2, (1, 1), (0,)), "nope")


# -- splittings -----------------------------------------------------------------------

def test_sl2_splitting_examples():
    c = cx(2, (1, 1), (0,))
    s = main_theorem_splittings(c)
    assert s.sigma_d.is_zero()
    c = cx(2, (1, 1), (1,))
    s = main_theorem_splittings(c)
    assert rank(s.sigma_d) == 1 and s.sigma_d @ s.sigma_d == s.sigma_d
    assert s.sigma_d @ c.d == c.d


@pytest.mark.parametrize("n,comp,lam", SMALL_CASES)
def test_T_and_splittings(n, comp, lam):
    c = cx(n, comp, lam)
    T = splitting_operator_Tlambda(isotypic_blocks(c), c.dim).matrix
    assert all(verify_T(c, T).values())
    assert main_theorem_splittings(c, T).ok


def test_identity_suite_flags_flip():
    results, _ = identity_suite(cx(2, (1, 1), (1,), flip_contraction=True))
    status = {r.name: r.ok for r in results}
    assert not status["D = 2 bd + d"]
    assert status["d^2 = 0"] and status["bd^2 = 0"]


def test_identity_suite_passes():
    results, summary = identity_suite(cx(3, (2, 1), (1, 1)))
    assert all(r.ok for r in results), [r.name for r in results if not r.ok]
    assert summary["const"] == Fraction(-1, 4)
