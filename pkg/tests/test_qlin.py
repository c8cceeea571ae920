from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rht.qlin import (NO_SOLUTION, Subspace, det, image_basis, inverse, kernel_basis, mat_mul,
                      mat_vec, rank, reduce_mod, rref, solve_any)

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(1, max_cols))
    # bias towards rank deficiency by mixing in zeros
    entry = st.one_of(st.just(F(0)), rationals)
    return tuple(tuple(draw(entry) for _ in range(c)) for _ in range(r)), c


def test_rank_small_examples():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[1, 0], [0, 1]]) == 2
    assert rank([]) == 0


def test_rref_is_canonical():
    rows, piv = rref([[2, 4, 6], [1, 2, 4]])
    assert piv == [0, 2]
    assert rows == [[1, 2, 0], [0, 0, 1]]


def test_kernel_of_known_matrix():
    K = kernel_basis([[1, 1, 1]])
    assert K.dim == 2
    for v in K.basis:
        assert sum(v) == 0


def test_det_and_inverse():
    M = [[2, 1], [7, 4]]
    assert det(M) == 1
    assert mat_mul(M, inverse(M)) == ((1, 0), (0, 1))
    with pytest.raises(ZeroDivisionError):
        inverse([[1, 2], [2, 4]])


def test_solve_any_no_solution():
    assert solve_any([[1, 1], [1, 1]], [1, 2]) is NO_SOLUTION
    assert not NO_SOLUTION


def test_rows_free_matrix_uses_cols():
    assert kernel_basis((), 3).dim == 3
    assert image_basis((), 3).dim == 0


@given(matrices())
def test_rank_nullity(mc):
    M, c = mc
    assert rank(M) + kernel_basis(M, c).dim == c


@given(matrices(), st.data())
def test_solve_any_reproduces_b(mc, data):
    M, c = mc
    if not M:
        return
    x0 = [data.draw(rationals) for _ in range(c)]
    b = mat_vec(M, x0)
    x = solve_any(M, b, c)
    assert x is not NO_SOLUTION
    assert mat_vec(M, x) == b


@given(st.lists(st.lists(rationals, min_size=4, max_size=4), max_size=4),
       st.lists(rationals, min_size=4, max_size=4))
def test_reduce_mod(vecs, v):
    S = Subspace.span(4, vecs)
    r = reduce_mod(S, v)
    assert tuple(a - b for a, b in zip(r, v)) in S
    assert reduce_mod(S, r) == r


@given(st.lists(st.lists(rationals, min_size=3, max_size=3), max_size=4))
def test_subspace_equality_is_structural(vecs):
    S = Subspace.span(3, vecs)
    T = Subspace.span(3, list(reversed(vecs)) + [[2 * x for x in v] for v in vecs])
    assert S == T
