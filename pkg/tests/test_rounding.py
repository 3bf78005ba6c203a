from fractions import Fraction

import pytest
from hypothesis import given

from analysis.rounding import HALF, round_half_integral_vc, round_independent_set, vertex_values
from graph.oracles import exact_coloring, independence_number, vertex_cover_number
from solvers.ic_lps import alpha_fk, fvc
from tests.strategies import graphs
from utils.exceptions import InputException


def test_five_cycle(c5):
    coloring = exact_coloring(c5)
    cover = round_half_integral_vc(c5, vertex_values(fvc(c5).certificate, 5), coloring)
    assert len(cover) == 3
    independent = round_independent_set(c5, vertex_values(alpha_fk(c5, 2).certificate, 5), coloring)
    assert len(independent) == 2


@given(graphs(max_n=8, directed=False))
def test_vertex_cover_rounding(g):
    coloring = exact_coloring(g)
    frac = vertex_values(fvc(g).certificate, g.n)
    cover = set(round_half_integral_vc(g, frac, coloring))
    assert all(i in cover or j in cover for i, j in g.edges())
    assert vertex_cover_number(g) <= len(cover)


@given(graphs(max_n=8, directed=False))
def test_independent_set_rounding(g):
    coloring = exact_coloring(g)
    frac = vertex_values(alpha_fk(g, 2).certificate, g.n)
    chosen = set(round_independent_set(g, frac, coloring))
    assert not any(i in chosen and j in chosen for i, j in g.edges())
    assert len(chosen) <= independence_number(g)


def test_rejects_invalid_inputs(c5, directed_c3):
    coloring = exact_coloring(c5)
    halves = {v: HALF for v in range(5)}
    with pytest.raises(InputException):
        round_half_integral_vc(directed_c3, {v: HALF for v in range(3)}, {0: 0, 1: 1, 2: 2})
    with pytest.raises(InputException):
        round_half_integral_vc(c5, {**halves, 0: Fraction(1, 3)}, coloring)
    with pytest.raises(InputException):
        round_half_integral_vc(c5, {v: HALF for v in range(4)}, coloring)
    with pytest.raises(InputException):
        round_half_integral_vc(c5, halves, {v: 0 for v in range(5)})
    with pytest.raises(InputException):
        round_half_integral_vc(c5, {**halves, 0: Fraction(0)}, coloring)
    with pytest.raises(InputException):
        round_independent_set(c5, {**halves, 0: Fraction(1)}, coloring)
