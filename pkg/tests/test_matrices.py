from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ctrlgraph.matrices import (
    ExactMatrix,
    bilinear_numerator_poly,
    char_poly,
    inverse,
    int_det,
    int_rank,
    mat_det,
    mat_rank,
    solve,
)
from ctrlgraph.polys import IntPoly

from oracles import cofactor_det, charpoly_at, naive_rank


def int_matrix(n, lo=-5, hi=5):
    return st.lists(
        st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n
    )


def test_rank_identity():
    assert mat_rank(ExactMatrix.identity(3)) == 3


def test_rank_p3_middle_walk_matrix():
    # columns e2, e1+e3, 2e2 of the middle-vertex pair on the 3-path
    w = ExactMatrix.from_rows([[0, 1, 0], [1, 0, 2], [0, 1, 0]])
    assert mat_rank(w) == 2


def test_rank_fraction_entries():
    m = ExactMatrix.from_rows([[Fraction(1, 2), 1], [Fraction(1, 4), Fraction(1, 2)]])
    assert mat_rank(m) == 1


@settings(max_examples=80)
@given(st.integers(1, 8).flatmap(int_matrix))
def test_rank_matches_naive_elimination(rows):
    assert int_rank(rows) == naive_rank(rows)


@settings(max_examples=80)
@given(st.integers(1, 5).flatmap(int_matrix))
def test_det_matches_cofactor(rows):
    assert int_det(rows) == cofactor_det(rows)


def test_char_poly_1x1_zero():
    assert char_poly(ExactMatrix.from_rows([[0]])) == IntPoly([0, 1])


def test_char_poly_p2():
    m = ExactMatrix.from_rows([[0, 1], [1, 0]])
    assert char_poly(m) == IntPoly([-1, 0, 1])


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: int_matrix(n, -3, 3)), st.integers(-4, 4))
def test_char_poly_matches_cofactor_oracle(rows, c):
    # symmetrize so the case matches how the library is used
    n = len(rows)
    sym = [[rows[min(i, j)][max(i, j)] for j in range(n)] for i in range(n)]
    p = char_poly(ExactMatrix.from_rows(sym))
    assert p.evaluate(c) == charpoly_at(sym, c)


def test_char_poly_block_diagonal_multiplies():
    a = [[0, 1], [1, 0]]
    b = [[2]]
    block = ExactMatrix.from_rows([[0, 1, 0], [1, 0, 0], [0, 0, 2]])
    assert char_poly(block) == char_poly(ExactMatrix.from_rows(a)) * char_poly(
        ExactMatrix.from_rows(b)
    )


def test_char_poly_requires_square():
    with pytest.raises(ValueError):
        char_poly(ExactMatrix.zero(2, 3))


def test_solve_and_inverse():
    m = ExactMatrix.from_rows([[2, 1], [1, 1]])
    x = solve(m, [3, 2])
    assert x == [Fraction(1), Fraction(1)]
    assert m @ inverse(m) == ExactMatrix.identity(2)


def test_solve_singular():
    with pytest.raises(ValueError):
        solve(ExactMatrix.from_rows([[1, 1], [1, 1]]), [1, 2])


def test_mat_det_rational():
    m = ExactMatrix.from_rows([[Fraction(1, 2), 0], [0, Fraction(2, 3)]])
    assert mat_det(m) == Fraction(1, 3)


def test_bilinear_numerator_is_adjugate_quadratic_form():
    # 2x2 swap matrix: adj(tI - A) = [[t, 1], [1, t]]
    m = ExactMatrix.from_rows([[0, 1], [1, 0]])
    assert bilinear_numerator_poly(m, [1, 1], [1, 1]) == IntPoly([2, 2])
    assert bilinear_numerator_poly(m, [1, 0], [1, 0]) == IntPoly([0, 1])


def test_matmul_and_transpose():
    a = ExactMatrix.from_rows([[1, 2], [3, 4]])
    b = ExactMatrix.from_rows([[0, 1], [1, 0]])
    assert a @ b == ExactMatrix.from_rows([[2, 1], [4, 3]])
    assert a.transpose() == ExactMatrix.from_rows([[1, 3], [2, 4]])
    assert a.matvec([1, 1]) == [3, 7]
