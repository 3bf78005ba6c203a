import numpy as np
import pytest
from hypothesis import given, strategies as st

from coding.gf_linear import (
    in_span,
    is_mds,
    mds_matrix,
    next_prime_above,
    prime_field,
    random_mds,
    rank,
    row_functional,
    solve_left,
    solve_linear,
    to_field,
    to_ints,
)
from utils.exceptions import DimensionMismatchException, InputException


def test_prime_field_is_cached_and_checked():
    assert prime_field(7) is prime_field(7)
    with pytest.raises(InputException):
        prime_field(4)
    with pytest.raises(InputException):
        prime_field(1)


def test_next_prime_above():
    assert next_prime_above(10) == 11
    assert next_prime_above(11) == 13
    assert next_prime_above(0) == 2


def test_rank():
    assert rank(to_field([[1, 2], [2, 4]], 5)) == 1
    assert rank(to_field([[1, 2], [2, 4]], 7)) == 1
    assert rank(to_field([[1, 2], [3, 4]], 7)) == 2
    assert rank(to_field(np.zeros((0, 3)), 5)) == 0


def test_in_span():
    basis = to_field([[1], [0], [0]], 5)
    assert in_span(to_field([3, 0, 0], 5), basis)
    assert not in_span(to_field([0, 1, 0], 5), basis)
    assert in_span(to_field([0, 0, 0], 5), to_field(np.zeros((3, 0)), 5))
    assert not in_span(to_field([0, 0, 1], 5), to_field(np.zeros((3, 0)), 5))
    with pytest.raises(DimensionMismatchException):
        in_span(to_field([1, 0], 5), basis)
    with pytest.raises(DimensionMismatchException):
        in_span(to_field([1, 0, 0], 7), basis)


def test_mds_matrix():
    matrix = mds_matrix(5, 3, 7)
    assert matrix.shape == (3, 5)
    assert is_mds(matrix)
    assert to_ints(mds_matrix(4, 1, 2)).tolist() == [[1, 1, 1, 1]]


@pytest.mark.parametrize("n, k, p", [(5, 0, 7), (5, 6, 7), (7, 2, 7), (3, 2, 6)])
def test_mds_matrix_rejects_bad_parameters(n, k, p):
    with pytest.raises(InputException):
        mds_matrix(n, k, p)


def test_mds_rejects_repeated_nodes():
    with pytest.raises(InputException):
        mds_matrix(3, 2, 7, nodes=[1, 2, 2])
    with pytest.raises(InputException):
        mds_matrix(3, 2, 7, multipliers=[1, 7, 1])


def test_is_mds_detects_dependent_columns():
    assert not is_mds(to_field([[1, 2, 1], [1, 2, 3]], 5))


@pytest.mark.parametrize("seed", range(5))
def test_random_mds(seed):
    rng = np.random.default_rng(seed)
    assert is_mds(random_mds(6, 3, 11, rng))
    assert is_mds(random_mds(6, 1, 11, rng))


def test_solve_linear():
    a = to_field([[1, 1], [1, 2]], 7)
    x = solve_linear(a, to_field([[3], [5]], 7))
    assert to_ints(x).tolist() == [[1], [2]]
    assert solve_linear(to_field([[1, 1], [2, 2]], 7), to_field([[1], [3]], 7)) is None
    with pytest.raises(DimensionMismatchException):
        solve_linear(a, to_field([[1]], 7))


@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_solve_linear_solves_consistent_systems(rows, cols, data):
    entries = st.integers(0, 4)
    a = to_field(data.draw(st.lists(st.lists(entries, min_size=cols, max_size=cols), min_size=rows, max_size=rows)), 5)
    x = to_field(data.draw(st.lists(entries, min_size=cols, max_size=cols)), 5).reshape(cols, 1)
    b = a @ x
    solution = solve_linear(a, b)
    assert solution is not None
    assert np.array_equal(a @ solution, b)


def test_solve_left():
    a = to_field([[1, 0], [0, 1], [1, 1]], 5)
    x = solve_left(a, to_field([[3, 4]], 5))
    assert np.array_equal(x @ a, to_field([[3, 4]], 5))


def test_row_functional():
    wanted = to_field([[1], [0]], 5)
    interference = to_field([[0], [1]], 5)
    d = row_functional(wanted, interference)
    assert to_ints(d @ wanted).tolist() == [[1]]
    assert to_ints(d @ interference).tolist() == [[0]]
    same = to_field([[1], [1]], 5)
    assert row_functional(same, same) is None
