from fractions import Fraction

import pytest
from hypothesis import given

from graph.generators import clique, cycle, empty
from graph.oracles import enumerate_cliques, independence_number, mais
from solvers.ic_lps import (
    alpha_fk,
    fcc,
    fcp,
    fmm,
    fractional_local_chromatic,
    fractional_partial_clique_cover,
    fvc,
    local_partial_lp,
    solution_weights,
    subset_of_variable,
    subset_variable,
)
from solvers.recursive_lp import recursive_lp
from solvers.subset_family import SubsetFamily
from tests.strategies import graphs
from utils.exceptions import InputException


def test_five_cycle(c5):
    assert fcc(c5).value == Fraction(5, 2)
    assert fcp(c5).value == Fraction(5, 2)
    assert fvc(c5).value == fmm(c5).value == Fraction(5, 2)
    assert local_partial_lp(c5).value == Fraction(5, 2)


def test_complete_graph(k4):
    assert fcc(k4).value == 1
    assert fcp(k4).value == 3
    assert fractional_partial_clique_cover(k4).value == 1
    assert local_partial_lp(k4).value == 1


def test_empty_graph():
    g = empty(3)
    assert fcc(g).value == 3
    assert fcp(g).value == 0
    assert local_partial_lp(g).value == 3


def test_directed_triangle(directed_c3):
    assert fcc(directed_c3).value == 3
    assert fractional_partial_clique_cover(directed_c3).value == 2
    assert fractional_local_chromatic(directed_c3).value == 2
    assert local_partial_lp(directed_c3).value == 2


def test_single_vertex():
    g = empty(1)
    assert fcp(g).value == fvc(g).value == fmm(g).value == 0
    for bound in (fcc, fractional_partial_clique_cover, fractional_local_chromatic, local_partial_lp, recursive_lp):
        assert bound(g).value == 1


def test_alpha_fk():
    triangle = clique(3)
    assert alpha_fk(triangle, 2).value == Fraction(3, 2)
    assert alpha_fk(triangle, 3).value == 1
    assert alpha_fk(clique(4), 2).value == 2
    assert alpha_fk(cycle(5), 3).value == Fraction(5, 2)
    with pytest.raises(InputException):
        alpha_fk(triangle, 1)


def test_undirected_only_bounds_reject_directed_graphs(directed_c3):
    for bound in (fvc, fmm):
        with pytest.raises(InputException):
            bound(directed_c3)
    with pytest.raises(InputException):
        alpha_fk(directed_c3, 2)


def test_subset_variables_name_their_members():
    assert subset_variable((0, 2, 3)) == "rho_0_2_3"
    assert subset_of_variable("rho_0_2_3") == (0, 2, 3)
    assert subset_of_variable("t") is None


def test_cover_weights_cover_every_vertex(c5):
    weights = solution_weights(fcc(c5).certificate)
    for v in range(5):
        assert sum(w for members, w in weights.items() if v in members) >= 1


def test_capped_clique_family_is_flagged(k4):
    capped = enumerate_cliques(k4, size_cap=2)
    result = fcc(k4, capped)
    assert result.family_restricted
    assert result.value == 2


def test_restricted_subset_family_is_flagged(c5):
    fam = SubsetFamily.build(c5, max_subset_size=2)
    result = local_partial_lp(c5, fam)
    assert result.family_restricted
    assert result.value == Fraction(5, 2)
    assert not local_partial_lp(c5).family_restricted


@given(graphs(max_n=8, directed=False))
def test_clique_cover_and_packing_are_complementary(g):
    assert fcc(g).value == g.n - fcp(g).value
    assert fvc(g).value == fmm(g).value


@given(graphs(max_n=6))
def test_bound_chain(g):
    lp = local_partial_lp(g).value
    best = min(fractional_partial_clique_cover(g).value, fractional_local_chromatic(g).value)
    assert independence_number(g) <= mais(g) <= recursive_lp(g, depth_cap=1).value <= lp <= best <= fcc(g).value


@pytest.mark.slow
def test_witness_strictly_improves_both_ingredients(witness):
    lp = local_partial_lp(witness).value
    assert lp <= Fraction(9, 2)
    assert lp < fractional_partial_clique_cover(witness).value
    assert lp < fractional_local_chromatic(witness).value


def test_small_witness_strictly_improves_both_ingredients(small_witness):
    assert small_witness.n == 6 and not small_witness.is_undirected
    lp = local_partial_lp(small_witness)
    assert not lp.family_restricted
    assert lp.value == 3
    assert fractional_partial_clique_cover(small_witness).value == Fraction(7, 2)
    assert fractional_local_chromatic(small_witness).value == 4


@pytest.mark.parametrize("n", range(3, 9))
def test_directed_cycles_are_exact(n):
    g = cycle(n, directed=True)
    assert local_partial_lp(g).value == mais(g) == n - 1
