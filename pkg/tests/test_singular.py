import pytest

from e510bound.checks import example_vector
from e510bound.e510 import (N, XI_PAIRS, Element, graded_basis, l1_spanning, super_bracket)
from e510bound.exact import nullspace_rows
from e510bound.sl5rep import weyl_dim
from e510bound.singular import find_singular, in_kernel_span, is_S5_singular, is_singular
from e510bound.verma import VermaError, VermaModule, VermaVector, basis_vector

FUNDAMENTALS = [(0, 0, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]


def degree_one_kernel_dim(M):
    """Singular vectors sum c_{k,b} xi_k (x) v_b: need sum c rho([y, xi_k]) v_b = 0 for all y in L_1."""
    cols = {}
    rows = {}
    for k in range(len(XI_PAIRS)):
        xk = Element({(N + k, (0,) * N): 1})
        for b in range(M.dimV):
            col = cols.setdefault((k, b), len(cols))
            for t, y in enumerate(l1_spanning()):
                z = super_bracket(y, xk)
                for (g, m), c in z.terms.items():
                    (i,) = [a for a in range(N) if m[a]]
                    for r, val in M.rep.apply(M.rep.e(i, g), {b: 1}).items():
                        rows.setdefault((t, r), {})
                        rows[(t, r)][col] = rows[(t, r)].get(col, 0) + c * val
    return len(nullspace_rows(rows.values(), len(cols)))


@pytest.mark.parametrize("lam", FUNDAMENTALS + [(1, 0, 0, 1)])
def test_degree_zero_is_all_of_V(lam):
    rep = find_singular(lam, 0)
    assert rep.dimension == weyl_dim(lam)


@pytest.mark.parametrize("lam", FUNDAMENTALS)
def test_degree_one_against_direct_computation(lam):
    M = VermaModule(lam)
    rep = find_singular(lam, 1, module=M)
    assert rep.dimension == degree_one_kernel_dim(M)
    for w, v in zip(rep.weights, rep.basis):
        assert is_singular(M, v)
        assert M.weight_of(v) == w


def test_known_degree_one_dims():
    assert find_singular((0, 0, 0, 0), 1).dimension == 10
    assert find_singular((0, 0, 0, 1), 1).dimension == 5


def test_example_vector():
    M, v = example_vector()
    assert is_singular(M, v)
    assert is_S5_singular(M, v)
    assert M.weight_of(v) == (1, 0, 0, 0)
    rep = find_singular(M.lam, 1, module=M)
    assert in_kernel_span(v, rep.basis)


def test_weight_filter_and_cap():
    rep = find_singular((0, 0, 0, 1), 1, weight_filter=(1, 0, 0, 0))
    assert rep.per_weight == {(1, 0, 0, 0): 1}
    with pytest.raises(VermaError):
        find_singular((0, 0, 0, 0), 5)
    assert find_singular((0, 0, 0, 0), 5, weight_filter=(9, 9, 9, 9)).dimension == 0


def test_non_singular_vector():
    M = VermaModule((0, 0, 0, 0))
    v = basis_vector(I=(1, 0, 0, 0, 0))
    assert not is_singular(M, v)
    assert not in_kernel_span(v, find_singular((0, 0, 0, 0), 2, module=M).basis)


def test_report_json():
    import json
    rep = find_singular((0, 0, 0, 1), 1, weight_filter=(1, 0, 0, 0))
    obj = json.loads(rep.to_json())
    assert obj["dimension"] == 1 and obj["highest_weight"] == [0, 0, 0, 1]
    assert VermaVector.from_json_obj(obj["basis"][0]["vector"]) == rep.basis[0]


def test_single_xi_is_not_singular():
    M = VermaModule((0, 0, 0, 1))
    assert not is_singular(M, basis_vector(K=(0,), b=0))
    assert is_singular(M, basis_vector(b=0)) and is_S5_singular(M, basis_vector(b=0))
