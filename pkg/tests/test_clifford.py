import itertools
from fractions import Fraction

import pytest

from cubicdirac.clifford import (SpinModule, chevalley, clifford_action, cubic_element,
                                 gamma_omega_l, nu_embedding, s_basis, three_form_of)
from cubicdirac.dirac import levi_action
from cubicdirac.lie import compositions, elementary, h_element, parabolic_split, sl
from cubicdirac.linalg import Matrix, commutes, rank
from cubicdirac.representations import trivial_rep

PARABOLICS = [(n, c) for n in (2, 3, 4) for c in compositions(n) if len(c) > 1]


def spin(n, comp):
    return SpinModule(parabolic_split(n, comp))


def test_spin_module_shape():
    s = spin(4, (1, 2, 1))
    assert s.dim == 2 ** 5
    for k in range(6):
        from math import comb
        assert sum(1 for d in s.degrees if d == k) == comb(5, k)


def test_sl2_examples():
    s = spin(2, (1, 1))
    e, f = elementary(2, 0, 1), elementary(2, 1, 0)
    ce, cf = clifford_action(s, e), clifford_action(s, f)
    assert ce == Matrix.from_rows([[0, 0], [1, 0]])
    assert cf.apply([0, 1]) == [-8, 0]
    assert ce @ cf + cf @ ce == Matrix.identity(2).scale(-8)


def test_rejects_elements_outside_s():
    s = spin(3, (2, 1))
    with pytest.raises(ValueError):
        clifford_action(s, elementary(3, 0, 1))  # inside l
    with pytest.raises(ValueError):
        nu_embedding(s, elementary(3, 0, 2))  # inside u


@pytest.mark.parametrize("n,comp", PARABOLICS)
def test_clifford_relation(n, comp):
    s = spin(n, comp)
    g = s.parabolic.algebra
    basis, _ = s_basis(s.parabolic)
    ops = [clifford_action(s, z) for z in basis]
    for (i, z), (j, w) in itertools.combinations_with_replacement(enumerate(basis), 2):
        anti = ops[i] @ ops[j] + ops[j] @ ops[i]
        assert anti == Matrix.identity(s.dim).scale(-2 * g.killing(z, w))


def test_chevalley_low_degrees():
    s = spin(3, (1, 1, 1))
    basis, _ = s_basis(s.parabolic)
    z, w = basis[0], basis[4]
    cz, cw = clifford_action(s, z), clifford_action(s, w)
    assert chevalley(s, [(1, ())]) == Matrix.identity(s.dim)
    assert chevalley(s, [(1, (z,))]) == cz
    assert chevalley(s, [(1, (z, w))]) == (cz @ cw - cw @ cz).scale(Fraction(1, 2))


def test_chevalley_injective_up_to_degree_three():
    s = spin(3, (2, 1))
    basis, _ = s_basis(s.parabolic)
    images = []
    for k in range(4):
        for mono in itertools.combinations(basis, k):
            m = chevalley(s, [(1, mono)])
            images.append([x for row in m.to_lists() for x in row])
    assert rank(Matrix.from_rows(images)) == len(images)


@pytest.mark.parametrize("n,comp,zero", [(2, (1, 1), True), (3, (2, 1), True),
                                         (3, (1, 2), True), (4, (2, 2), True),
                                         (3, (1, 1, 1), False), (4, (1, 2, 1), False)])
def test_cubic_term(n, comp, zero):
    s = spin(n, comp)
    p = s.parabolic
    g = p.algebra
    cubic = cubic_element(s)
    assert cubic.is_zero() == zero
    basis, _ = s_basis(p)
    for x, y, z in itertools.combinations(basis, 3):
        assert 2 * three_form_of(p, cubic, x, y, z) == g.killing(g.bracket(x, y), z)
    if not zero:
        # phi(v) is odd: it changes the degree by one
        deg = s.degrees
        m = cubic.phi_v
        assert all(m[i, j] == 0 for i in range(s.dim) for j in range(s.dim)
                   if (deg[i] - deg[j]) % 2 == 0)


@pytest.mark.parametrize("n,comp", PARABOLICS)
def test_nu_properties(n, comp):
    s = spin(n, comp)
    p = s.parabolic
    g = p.algebra
    basis, _ = s_basis(p)
    nus = [nu_embedding(s, x) for x in p.l_basis]
    for x, nx in zip(p.l_basis, nus):
        for z in basis:
            assert nx.commutator(clifford_action(s, z)) == clifford_action(s, g.bracket(x, z))
    for (x, nx), (y, ny) in itertools.combinations(zip(p.l_basis, nus), 2):
        assert nu_embedding(s, g.bracket(x, y)) == nx.commutator(ny)
    # Cartan part: eigenvalue = weight on Lambda(u) shifted by rho(ubar)
    for k in range(n - 1):
        nh = nu_embedding(s, h_element(n, k))
        for i, w in enumerate(s.weights):
            col = nh.column(i)
            assert col == [(w + p.rho_ubar).coords[k] if r == i else 0 for r in range(s.dim)]


def test_nu_examples():
    s = spin(2, (1, 1))
    assert nu_embedding(s, h_element(2, 0)) == Matrix.diag([-1, 1])
    s3 = spin(3, (1, 1, 1))
    assert nu_embedding(s3, h_element(3, 0))[0, 0] == -1


def test_gamma_omega_l_examples():
    s = spin(2, (1, 1))
    rep = trivial_rep(sl(2))
    assert gamma_omega_l(rep, s) == Matrix.identity(2).scale(Fraction(1, 8))


@pytest.mark.parametrize("n,comp", [(3, (2, 1)), (3, (1, 1, 1)), (4, (2, 2))])
def test_gamma_omega_l_is_central(n, comp):
    from cubicdirac.representations import build_irrep
    s = spin(n, comp)
    rep = build_irrep(n, (1,) + (0,) * (n - 2))
    gam = gamma_omega_l(rep, s)
    for x in s.parabolic.l_basis:
        assert commutes(gam, levi_action(rep, s, x))
    deg = [s.degrees[i // rep.dim] for i in range(gam.rows)]
    assert all(gam[i, j] == 0 for i in range(gam.rows) for j in range(gam.cols)
               if deg[i] != deg[j])
