from itertools import product

import pytest
from hypothesis import given, strategies as st

from e510bound import e510
from e510bound.e510 import (E510Error, Element, bracket_even_even, bracket_even_odd, bracket_odd_odd,
                            bracket_odd_odd_wedge, complement_index, component_module, d,
                            format_element, graded_basis, grading_degree, is_in_L, jacobiator,
                            l0_basis, l1_spanning, l2_spanning, lie_derivative_cartan, lm1_basis,
                            lm2_basis, matrix_unit_element, parse_element, sl5_of, super_bracket,
                            weight_of_element, xi, xvar)
from e510bound.exact import span_rank
from e510bound.sl5rep import irr_character, weyl_dim

BASES = {j: graded_basis(j) for j in range(-2, 3)}


def _vec(e):
    return {k: c for k, c in e.terms.items()}


def rank_of(elements):
    index = {}
    rows = []
    for e in elements:
        rows.append({index.setdefault(k, len(index)): c for k, c in e.terms.items()})
    return span_rank(rows)


@st.composite
def elements(draw, degrees=(-2, -1, 0, 1, 2), homogeneous=True):
    j = draw(st.sampled_from(degrees))
    basis = BASES[j]
    idx = draw(st.lists(st.integers(0, len(basis) - 1), min_size=1, max_size=3))
    out = Element()
    for i in idx:
        out = out + basis[i] * draw(st.integers(-3, 3))
    return out


@pytest.mark.parametrize("j, dim", [(-2, 5), (-1, 10), (0, 24), (1, 40), (2, 70)])
def test_graded_dimensions(j, dim):
    assert rank_of(graded_basis(j)) == dim
    for e in graded_basis(j):
        assert is_in_L(e)
        assert grading_degree(e) == j


def test_spanning_sets():
    assert rank_of(l1_spanning()) == 40
    assert rank_of(l2_spanning()) == 70
    assert len(lm2_basis()) == 5 and len(lm1_basis()) == 10 and len(l0_basis()) == 24


def test_l1_contains_named_elements():
    assert rank_of(l1_spanning() + [xi(1, 2, xvar(1))]) == 40
    assert rank_of(l1_spanning() + [xi(4, 5, xvar(5))]) == 40


def test_hand_brackets():
    # [d_i, x_j d_k] = delta_ij d_k
    for i, j, k in product(range(1, 6), repeat=3):
        got = super_bracket(d(i), d(k, xvar(j)))
        assert got == (d(k) if i == j else Element())
    # x_2 d_1 sends dx_1 to dx_2
    assert super_bracket(d(1, xvar(2)), xi(1, 3)) == xi(2, 3)
    assert super_bracket(d(2, xvar(1)), xi(1, 3)) == Element()
    assert super_bracket(d(1), xi(2, 3, xvar(1))) == xi(2, 3)
    y = d(2, xvar(1))
    assert super_bracket(y, xi(2, 3)) == xi(1, 3)
    assert super_bracket(y, xi(4, 5)) == Element()
    assert super_bracket(y, d(1, xvar(2))) == d(1, xvar(1)) - d(2, xvar(2))
    assert super_bracket(y, d(1)) == d(2) * -1
    # odd-odd through the permutation sign
    assert super_bracket(xi(1, 2), xi(3, 4)) == d(5)
    assert super_bracket(xi(1, 3), xi(2, 4)) == d(5) * -1
    assert super_bracket(xi(1, 2), xi(1, 3)) == Element()
    assert super_bracket(xi(1, 2, xvar(1)), xi(3, 4)) == d(5, xvar(1))


def test_complement_index():
    assert complement_index(1, 2, 3, 4) == (5, 1)
    assert complement_index(2, 1, 3, 4) == (5, -1)
    assert complement_index(1, 2, 3, 5) == (4, -1)
    assert complement_index(1, 2, 1, 3) == (0, 0)
    with pytest.raises(E510Error):
        complement_index(0, 2, 3, 4)


def test_xi_antisymmetric():
    assert xi(2, 1) == xi(1, 2) * -1
    assert xi(3, 3).is_zero()


def test_validation_rejects_bad_inputs():
    with pytest.raises(E510Error):
        bracket_even_even(d(1, xvar(1)), d(2))     # divergence x
    with pytest.raises(E510Error):
        bracket_odd_odd(xi(1, 2, xvar(3)), xi(3, 4))  # not closed
    with pytest.raises(E510Error):
        bracket_even_odd(xi(1, 2), xi(3, 4))
    with pytest.raises(E510Error):
        sl5_of(d(1))


def test_sl5_identification():
    for i, j in product(range(5), repeat=2):
        if i == j:
            continue
        M = sl5_of(matrix_unit_element(i, j))
        assert M[i][j] == 1 and sum(map(sum, M)) == 1


@given(st.sampled_from(l0_basis()), st.sampled_from(l0_basis()))
def test_sl5_is_homomorphism(a, b):
    A, B = sl5_of(a), sl5_of(b)
    AB = [[sum(A[i][k] * B[k][j] for k in range(5)) for j in range(5)] for i in range(5)]
    BA = [[sum(B[i][k] * A[k][j] for k in range(5)) for j in range(5)] for i in range(5)]
    assert sl5_of(super_bracket(a, b)) == [[AB[i][j] - BA[i][j] for j in range(5)] for i in range(5)]


@given(elements(), elements())
def test_graded_skew_symmetry(a, b):
    sign = -1 if (a.parity == 1 and b.parity == 1) else 1
    # [a, b] = -(-1)^{|a||b|} [b, a]
    assert super_bracket(a, b) == super_bracket(b, a) * (-sign)


@given(elements(degrees=(-1, 1)), elements(degrees=(-1, 1)))
def test_odd_odd_symmetric_and_wedge_route(a, b):
    a, b = a.odd_part(), b.odd_part()
    ab = bracket_odd_odd(a, b)
    assert ab == bracket_odd_odd(b, a)
    assert ab == bracket_odd_odd_wedge(a, b)


@given(elements(degrees=(-2, 0, 2)), elements(degrees=(-1, 1)))
def test_even_odd_cartan_route(D, w):
    assert bracket_even_odd(D, w) == lie_derivative_cartan(D, w)


@given(elements(), elements(), elements())
def test_super_jacobi_random(a, b, c):
    assert jacobiator(a, b, c).is_zero()


@given(elements(), elements())
def test_bracket_closes_and_adds_degrees(a, b):
    ab = super_bracket(a, b)
    assert is_in_L(ab)
    if not ab.is_zero():
        assert grading_degree(ab) == grading_degree(a) + grading_degree(b)


@given(elements(homogeneous=False))
def test_format_parse_roundtrip(a):
    assert parse_element(format_element(a)) == a


def test_parse_examples():
    assert parse_element("x1*xi12") == xi(1, 2, xvar(1))
    assert parse_element("-2*x1^2*d3") == d(3, xvar(1, 1), -2)


@pytest.mark.parametrize("j, hw", [(-2, (0, 0, 0, 1)), (-1, (0, 1, 0, 0))])
def test_component_modules(j, hw):
    R = component_module(j)
    assert R.highest_weight == hw
    assert R.dim == weyl_dim(hw)
    assert R.check_relations()
    assert R.weight_multiplicities() == irr_character(hw)


def test_weights_of_elements():
    assert weight_of_element(d(1)) == (-1, 0, 0, 0)
    assert weight_of_element(d(5)) == (0, 0, 0, 1)
    assert weight_of_element(xi(1, 2)) == (0, 1, 0, 0)
    assert weight_of_element(xi(4, 5)) == (0, 0, -1, 0)
    assert weight_of_element(d(1, xvar(2))) == (-2, 1, 0, 0)  # root eps2 - eps1


@pytest.mark.parametrize("j", range(-2, 3))
def test_generic_basis_spans_named_basis(j):
    generic = list(e510._generic_basis(j))
    assert rank_of(generic) == rank_of(graded_basis(j)) == rank_of(generic + graded_basis(j))


@pytest.mark.parametrize("j, dim", [(3, 105), (4, 160)])
def test_higher_components(j, dim):
    basis = graded_basis(j)
    assert rank_of(basis) == len(basis) == dim
    assert all(is_in_L(e) and grading_degree(e) == j for e in basis)
