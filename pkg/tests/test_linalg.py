from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from stareigen.errors import PreconditionError, SizeError
from stareigen.linalg import bareiss_det, rank, solve, transpose


def square(max_n=6, lo=-5, hi=5):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n)
    )


@given(square())
@settings(max_examples=200)
def test_bareiss_matches_sympy(a):
    assert bareiss_det(a) == sympy.Matrix(a).det()


@given(square(lo=-1, hi=1))
def test_bareiss_sparse_sign_matrices(a):
    assert bareiss_det(a) == sympy.Matrix(a).det()


def test_bareiss_small_cases():
    assert bareiss_det([]) == 1
    assert bareiss_det([[0, 1], [1, 0]]) == -1
    assert bareiss_det([[1, 2], [2, 4]]) == 0
    assert bareiss_det([[0, 0, 1], [0, 1, 0], [1, 0, 0]]) == -1
    big = [[10**20 + i + j for j in range(3)] for i in range(3)]
    assert bareiss_det(big) == sympy.Matrix(big).det()
    with pytest.raises(SizeError):
        bareiss_det([[1, 2]])


@given(square(max_n=5), st.lists(st.integers(-9, 9), min_size=5, max_size=5))
def test_solve_matches_sympy(a, b):
    n = len(a)
    b = b[:n]
    m = sympy.Matrix(a)
    if m.det() == 0:
        with pytest.raises(PreconditionError):
            solve(a, b)
        return
    x = solve(a, b)
    want = m.LUsolve(sympy.Matrix(b))
    assert [sympy.Rational(v.numerator, v.denominator) for v in x] == list(want)
    assert all(sum(Fraction(r) * v for r, v in zip(row, x)) == rhs for row, rhs in zip(a, b))


@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=6))
def test_rank_matches_sympy(rows):
    assert rank(rows) == sympy.Matrix(rows).rank()


def test_solve_shapes_and_transpose():
    with pytest.raises(SizeError):
        solve([[1, 2], [3, 4]], [1])
    assert transpose([[1, 2, 3], [4, 5, 6]]) == [[1, 4], [2, 5], [3, 6]]
    assert solve([[2, 0], [0, 4]], [1, 1]) == [Fraction(1, 2), Fraction(1, 4)]
