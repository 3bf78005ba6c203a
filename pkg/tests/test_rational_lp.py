from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from solvers.ic_lps import fmm_problem, fvc_problem
from solvers.rational_lp import (
    EQ,
    GE,
    HALF_INTEGRAL_TAG,
    INFEASIBLE,
    LE,
    MAXIMIZE,
    MINIMIZE,
    LpProblem,
    solve,
    solve_dual_pair,
)
from tests.strategies import graphs
from utils.exceptions import DimensionMismatchException, InputException, InternalInvariantError


def test_textbook_maximum():
    p = LpProblem(MAXIMIZE, name="textbook")
    p.add_variable("a", cost=3, hi=10)
    p.add_variable("b", cost=2, hi=10)
    p.add_constraint({"a": 1, "b": 1}, LE, 4)
    p.add_constraint({"a": 1, "b": 3}, LE, 6)
    solution = solve(p)
    assert solution.optimal and solution.is_vertex
    assert solution.value == 12
    assert solution.assignment == {"a": Fraction(4), "b": Fraction(0)}


def test_exact_fractional_optimum():
    p = LpProblem(MINIMIZE, name="third")
    for name in "xyz":
        p.add_variable(name, cost=1)
    p.add_constraint({"x": 1, "y": 1}, GE, 1)
    p.add_constraint({"y": 1, "z": 1}, GE, 1)
    p.add_constraint({"x": 1, "z": 1}, GE, 1)
    solution = solve(p)
    assert solution.value == Fraction(3, 2)
    assert all(v == Fraction(1, 2) for v in solution.assignment.values())


def test_equality_and_lower_bounds():
    p = LpProblem(MINIMIZE)
    p.add_variable("x", cost=1, lo=1, hi=5)
    p.add_variable("y", cost=2, lo=0, hi=5)
    p.add_constraint({"x": 1, "y": 1}, EQ, 3)
    solution = solve(p)
    assert solution.value == 3
    assert solution.assignment["x"] == 3


def test_infeasible():
    p = LpProblem(MINIMIZE)
    p.add_variable("x", cost=1)
    p.add_constraint({"x": 1}, GE, 2)
    assert solve(p).status == INFEASIBLE


def test_inverted_bounds_are_infeasible():
    p = LpProblem(MINIMIZE)
    p.add_variable("x", lo=2, hi=1)
    assert solve(p).status == INFEASIBLE


def test_unknown_variable_is_a_dimension_error():
    p = LpProblem(MINIMIZE)
    p.add_variable("x", cost=1)
    p.add_constraint({"y": 1}, GE, 0)
    with pytest.raises(DimensionMismatchException):
        solve(p)
    with pytest.raises(DimensionMismatchException):
        p.add_variable("x")


def test_unknown_sense():
    p = LpProblem(MINIMIZE)
    p.add_variable("x")
    with pytest.raises(InputException):
        p.add_constraint({"x": 1}, "<", 1)


def test_half_integral_tag_is_enforced():
    p = LpProblem(MAXIMIZE, name="thirds", tags={HALF_INTEGRAL_TAG})
    p.add_variable("x", cost=1)
    p.add_constraint({"x": 3}, LE, 1)
    with pytest.raises(InternalInvariantError):
        solve(p)


@given(graphs(max_n=9, directed=False))
def test_fvc_vertices_are_half_integral_and_dual_to_matching(g):
    primal, dual = solve_dual_pair(fvc_problem(g), fmm_problem(g))
    assert primal.value == dual.value
    assert all(v in (0, Fraction(1, 2), 1) for v in primal.assignment.values())


@given(graphs(max_n=7, directed=False), st.randoms(use_true_random=False))
def test_value_ignores_constraint_order(g, random):
    p = fvc_problem(g)
    value = solve(p).value
    random.shuffle(p.constraints)
    assert solve(p).value == value
