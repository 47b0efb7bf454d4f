from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from e510bound.sl5rep import (Character, Decomposition, RepresentationError, add, build_irrep,
                              decompose_character, dual_weight, exterior_power_decompose,
                              from_eps, fundamental, intertwiner, irr_character, to_eps,
                              tensor_decompose, weyl_dim)

small = st.tuples(*[st.integers(0, 2)] * 4)
tiny = st.tuples(*[st.integers(0, 1)] * 4)


@pytest.mark.parametrize("w, d", [
    ((0, 0, 0, 0), 1), ((1, 0, 0, 0), 5), ((0, 1, 0, 0), 10), ((0, 0, 1, 0), 10),
    ((0, 0, 0, 1), 5), ((1, 0, 0, 1), 24), ((2, 0, 0, 0), 15), ((0, 1, 0, 1), 45),
    ((1, 0, 1, 0), 45), ((1, 1, 1, 1), 1024), ((0, 0, 0, 3), 35),
])
def test_weyl_dim_known(w, d):
    assert weyl_dim(w) == d


@given(small)
def test_character_mass_is_weyl_dim(w):
    ch = irr_character(w)
    assert ch.mass() == weyl_dim(w)
    assert ch.is_weyl_symmetric()
    assert ch[w] == 1


def test_adjoint_character():
    ch = irr_character((1, 0, 0, 1))
    assert ch[(0, 0, 0, 0)] == 4
    assert len(ch) == 21


@given(small)
def test_dual_and_eps_roundtrip(w):
    assert dual_weight(dual_weight(w)) == w
    assert weyl_dim(dual_weight(w)) == weyl_dim(w)
    assert from_eps(to_eps(w)) == w


def test_tensor_known():
    assert tensor_decompose((1, 0, 0, 0), (0, 0, 0, 1)) == {(1, 0, 0, 1): 1, (0, 0, 0, 0): 1}
    assert tensor_decompose((1, 0, 0, 0), (1, 0, 0, 0)) == {(2, 0, 0, 0): 1, (0, 1, 0, 0): 1}
    adj = tensor_decompose((1, 0, 0, 1), (1, 0, 0, 1))
    assert adj[(1, 0, 0, 1)] == 2 and adj[(0, 0, 0, 0)] == 1
    assert adj.dim() == 576


@settings(max_examples=25)
@given(tiny, tiny)
def test_tensor_matches_character_product(lam, mu):
    # Brauer-Klimyk against peeling the product of the two characters
    d = tensor_decompose(lam, mu)
    assert d == decompose_character(irr_character(lam).times(irr_character(mu)))
    assert d.dim() == weyl_dim(lam) * weyl_dim(mu)
    assert d == tensor_decompose(mu, lam)


@given(tiny, tiny, st.integers(0, 4))
def test_frobenius_reciprocity(lam, mu, i):
    # mult of V(om_i) in V(lam) (x) V(mu) equals mult of V(lam) in V(om_i) (x) V(mu*)
    om = fundamental(i)
    left = tensor_decompose(lam, mu).get(om, 0)
    right = tensor_decompose(om, dual_weight(mu)).get(lam, 0)
    assert left == right


def _brute_wedge(lam, k):
    weights = [w for w, m in irr_character(lam).items() for _ in range(m)]
    ch = Character()
    for S in combinations(range(len(weights)), k):
        tot = (0, 0, 0, 0)
        for s in S:
            tot = add(tot, weights[s])
        ch[tot] = ch.get(tot, 0) + 1
    return decompose_character(ch)


@pytest.mark.parametrize("lam, k", [((0, 1, 0, 0), k) for k in range(11)] + [((1, 0, 0, 0), 2), ((0, 0, 1, 0), 3)])
def test_exterior_power_brute_force(lam, k):
    d = exterior_power_decompose(lam, k)
    assert d == _brute_wedge(lam, k)
    assert d.dim() == comb(weyl_dim(lam), k)


def test_exterior_known():
    assert exterior_power_decompose((1, 0, 0, 0), 2) == {(0, 1, 0, 0): 1}
    assert exterior_power_decompose((0, 1, 0, 0), 2) == {(1, 0, 1, 0): 1}
    assert exterior_power_decompose((0, 1, 0, 0), 10) == {(0, 0, 0, 0): 1}
    with pytest.raises(RepresentationError):
        exterior_power_decompose((1, 0, 0, 0), 6)


def test_decompose_rejects_non_character():
    with pytest.raises(RepresentationError):
        decompose_character({(1, 0, 0, 0): 1})


def test_decomposition_json_roundtrip():
    d = tensor_decompose((0, 1, 0, 0), (0, 0, 1, 0))
    assert Decomposition.from_json(d.to_json()) == d
    assert d.dual() == d


@pytest.mark.parametrize("hw", [(0, 0, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1),
                                (1, 0, 0, 1), (2, 0, 0, 0), (0, 1, 0, 1)])
def test_build_irrep(hw):
    R = build_irrep(hw)
    assert R.dim == weyl_dim(hw)
    assert R.check_relations()
    assert R.weight_multiplicities() == irr_character(hw)
    # Schur: End(V) is one-dimensional
    assert len(intertwiner(R, R)) == 1


def test_intertwiner_between_distinct_irreps_is_zero():
    assert intertwiner(build_irrep((1, 0, 0, 0)), build_irrep((0, 0, 0, 1))) == []
