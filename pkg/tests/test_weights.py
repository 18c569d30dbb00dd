from hypothesis import given
from hypothesis import strategies as st

from cubicdirac.lie import RootSystem, Weight, compositions, parabolic_split
from cubicdirac.weights import (decompose_levi, dominant_weights, freudenthal, g_character,
                                kostant_borel_weights, levi_character, levi_dimension, levi_types,
                                multiply_characters, spin_character, weyl_dimension,
                                weyl_group_length_counts)

weights_of_rank = st.integers(2, 4).flatmap(
    lambda n: st.lists(st.integers(0, 3), min_size=n - 1, max_size=n - 1)).map(Weight)


def test_weyl_dimension_examples():
    assert weyl_dimension(RootSystem(2), Weight((2,))) == 3
    assert weyl_dimension(RootSystem(3), Weight((1, 1))) == 8
    assert weyl_dimension(RootSystem(3), Weight((2, 0))) == 6
    assert weyl_dimension(RootSystem(3), Weight((2, 1))) == 15
    assert weyl_dimension(RootSystem(4), Weight((1, 0, 0))) == 4


@given(weights_of_rank)
def test_freudenthal_total_matches_weyl(lam):
    rs = RootSystem(lam.rank + 1)
    char = freudenthal(rs, lam)
    assert sum(char.values()) == weyl_dimension(rs, lam)
    # the character is Weyl-invariant; check the simple reflections
    for k in range(rs.rank):
        for mu, m in char.items():
            assert char.get(mu - rs.simple_roots[k] * mu.coords[k]) == m


def test_sl2_character():
    assert g_character(RootSystem(2), Weight((3,))) == {Weight((c,)): 1 for c in (3, 1, -1, -3)}


def test_dominant_weights():
    ws = dominant_weights(2, 2)
    assert len(ws) == 6 and ws[0] == Weight((0, 0))
    assert all(w.size() <= 2 and w.is_dominant() for w in ws)


def test_length_counts():
    assert weyl_group_length_counts(2) == [1, 1]
    assert weyl_group_length_counts(3) == [1, 2, 2, 1]
    assert sum(weyl_group_length_counts(4)) == 24


@given(weights_of_rank)
def test_kostant_counts(lam):
    n = lam.rank + 1
    rs = RootSystem(n)
    got = kostant_borel_weights(rs, lam)
    counts = [0] * (len(rs.positive_roots) + 1)
    for ln, _ in got:
        counts[ln] += 1
    assert counts == weyl_group_length_counts(n)
    # degree 0 carries the lowest weight of V_lam
    assert got[0] == (0, -Weight(tuple(reversed(lam.coords))))


@given(weights_of_rank, st.data())
def test_levi_types_account_for_everything(lam, data):
    n = lam.rank + 1
    comp = data.draw(st.sampled_from(list(compositions(n))))
    p = parabolic_split(n, comp)
    types = levi_types(p, lam)
    total = sum(m * levi_dimension(p, mu) for mu, m in types.items())
    assert total == weyl_dimension(p.root_system, lam) * 2 ** p.dim_u
    rebuilt = {}
    for mu, m in types.items():
        for w, k in levi_character(p, mu).items():
            rebuilt[w] = rebuilt.get(w, 0) + m * k
    expect = multiply_characters(g_character(p.root_system, lam), spin_character(p))
    assert rebuilt == {w: k for w, k in expect.items() if k}


def test_levi_types_example():
    p = parabolic_split(3, "2+1")
    types = levi_types(p, Weight((1, 0)))
    assert {str(k): v for k, v in types.items()} == {
        "[0,-1]": 1, "[0,2]": 2, "[1,0]": 2, "[1,3]": 1, "[2,1]": 1}


def test_decompose_rejects_non_characters():
    p = parabolic_split(3, "2+1")
    import pytest
    with pytest.raises(ValueError):
        decompose_levi(p, {Weight((-1, 0)): 1})
