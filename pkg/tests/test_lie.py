import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubicdirac.lie import (RootSystem, Weight, cartan_matrix, compositions, elementary,
                            h_element, killing_form, parabolic_split, parse_composition,
                            parse_weight, rho_of, sl, weight_pairing)
from cubicdirac.linalg import Matrix, rank

ALL_PARABOLICS = [(n, c) for n in range(2, 6) for c in compositions(n)]


def test_killing_examples():
    a2, a3 = sl(2), sl(3)
    H, E, F = h_element(2, 0), elementary(2, 0, 1), elementary(2, 1, 0)
    assert killing_form(a2, H, H) == 8
    assert killing_form(a2, E, F) == 4
    assert killing_form(a3, h_element(3, 0), h_element(3, 0)) == 12


def test_pairing_examples():
    r2, r3 = RootSystem(2), RootSystem(3)
    a = r2.simple_roots[0]
    assert weight_pairing(r2, a, a) == Fraction(1, 2)
    assert weight_pairing(r2, r2.rho, r2.rho) == Fraction(1, 8)
    a1, a2 = r3.simple_roots
    assert weight_pairing(r3, a1, a2) == Fraction(-1, 6)
    assert weight_pairing(r3, r3.rho, r3.rho) == Fraction(1, 3)


def test_pairing_is_dual_of_killing_form():
    """(alpha_i, alpha_j) = B(t_i, t_j) where t_i is the B-dual of alpha_i in h."""
    for n in (2, 3, 4):
        a = sl(n)
        hs = [h_element(n, k) for k in range(n - 1)]
        gram = Matrix.from_rows([[a.killing(x, y) for y in hs] for x in hs])
        # alpha_i(H_j) is the Cartan matrix; t_i = sum_j c_ij H_j with gram c^T = cartan
        from cubicdirac.linalg import inverse
        coeff = cartan_matrix(n - 1) @ inverse(gram)
        rs = RootSystem(n)
        for i, j in itertools.product(range(n - 1), repeat=2):
            ti = sum((hs[k].scale(coeff[i, k]) for k in range(n - 1)), Matrix.zeros(n, n))
            tj = sum((hs[k].scale(coeff[j, k]) for k in range(n - 1)), Matrix.zeros(n, n))
            assert rs.pair(rs.simple_roots[i], rs.simple_roots[j]) == a.killing(ti, tj)


def test_root_system_invariants():
    for n in range(2, 7):
        rs = RootSystem(n)
        g = rs.pairing_gram
        assert g == g.T and rank(g) == n - 1
        for a in rs.simple_roots:
            assert rs.pair(a, a) == Fraction(1, n)
        assert rs.rho == Weight((1,) * (n - 1))
        assert rho_of(rs, rs.positive_roots) == rs.rho


@given(st.integers(2, 5).flatmap(
    lambda n: st.lists(st.integers(0, 6), min_size=n - 1, max_size=n - 1)))
def test_pairing_positive_on_dominant(coords):
    lam = Weight(coords)
    rs = RootSystem(lam.rank + 1)
    if any(coords):
        assert rs.pair(lam, lam) > 0


def test_rho_examples():
    p = parabolic_split(2, "1+1")
    assert p.rho_u == p.rho_g
    q = parabolic_split(3, "2+1")
    assert q.rho_u == Weight((0, Fraction(3, 2)))
    assert q.rho_l + q.rho_u == Weight((1, 1))


def test_parabolic_examples():
    p = parabolic_split(2, "1+1")
    assert (p.dim_u, len(p.l_basis)) == (1, 1)
    p = parabolic_split(3, "1+1+1")
    assert (p.dim_u, len(p.l_basis)) == (3, 2)
    p = parabolic_split(3, "2+1")
    assert (p.dim_u, len(p.l_basis)) == (2, 4)
    g = p.algebra
    assert all(g.bracket(x, y).is_zero() for x in p.u_basis for y in p.u_basis)


@pytest.mark.parametrize("bad", ["2+2", "0+3", "3+", "a+b"])
def test_invalid_compositions(bad):
    with pytest.raises(ValueError):
        parabolic_split(3, bad)


def test_parsers():
    assert parse_composition("2 + 1") == (2, 1)
    assert parse_weight("[1,0]") == parse_weight("1,0") == Weight((1, 0))
    assert str(Weight((Fraction(1, 2), -1))) == "[1/2,-1]"


@pytest.mark.parametrize("n", [2, 3, 4])
def test_jacobi_and_invariance(n):
    a = sl(n)
    basis = a.basis
    br, B = a.bracket, a.killing
    for x, y, z in itertools.product(basis, repeat=3):
        jac = br(x, br(y, z)) + br(y, br(z, x)) + br(z, br(x, y))
        assert jac.is_zero()
        assert B(br(x, y), z) == B(x, br(y, z))


@given(st.data())
def test_jacobi_and_invariance_sl5(data):
    a = sl(5)
    x, y, z = (data.draw(st.sampled_from(a.basis)) for _ in range(3))
    br, B = a.bracket, a.killing
    assert (br(x, br(y, z)) + br(y, br(z, x)) + br(z, br(x, y))).is_zero()
    assert B(br(x, y), z) == B(x, br(y, z))


def test_killing_nondegenerate_and_dual_basis():
    for n in (2, 3, 4, 5):
        a = sl(n)
        gram = Matrix.from_rows([[a.killing(x, y) for y in a.basis] for x in a.basis])
        assert rank(gram) == a.dim
        for i, x in enumerate(a.basis):
            for j, d in enumerate(a.dual_basis):
                assert a.killing(x, d) == (1 if i == j else 0)


@pytest.mark.parametrize("n,comp", ALL_PARABOLICS)
def test_parabolic_structure(n, comp):
    p = parabolic_split(n, comp)
    g = p.algebra
    B = g.killing
    assert len(p.l_basis) + 2 * p.dim_u == g.dim
    for i, x in enumerate(p.u_basis):
        for j, y in enumerate(p.ubar_basis):
            assert B(x, y) == (1 if i == j else 0)
    for xs in (p.u_basis, p.ubar_basis):
        assert all(B(a, b) == 0 for a in xs for b in xs)
    assert all(B(l, s) == 0 for l in p.l_basis for s in p.u_basis + p.ubar_basis)
    for l in p.l_basis:
        assert p.in_l(l)
        assert all(p.in_u(g.bracket(l, x)) for x in p.u_basis)
        assert all(p.in_ubar(g.bracket(l, y)) for y in p.ubar_basis)
    assert all(p.in_u(g.bracket(x, y)) for x in p.u_basis for y in p.u_basis)
    for b, d in p.l_dual_pairs:
        assert B(b, d) == 1
    assert p.rho_l + p.rho_u == p.rho_g
    assert p.rho_ubar == -p.rho_u
