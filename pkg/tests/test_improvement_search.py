from fractions import Fraction

import pytest

from analysis.improvement_search import capacity_bounds, compare_schemes, strict_improvement_search
from graph.generators import cycle


def test_no_gap_on_cycles(c5, directed_c3):
    result = compare_schemes(directed_c3)
    assert (result.lp, result.fpcc, result.flc) == (2, 2, 2)
    assert result.gap == 0
    assert strict_improvement_search([directed_c3, c5, cycle(4, directed=True)]) == []


@pytest.mark.slow
def test_witness_is_found(witness, c5):
    found = strict_improvement_search([c5, witness])
    assert [result.graph for result in found] == [witness]
    assert found[0].gap > 0


def test_capacity_bounds(c5, directed_c3):
    assert capacity_bounds(c5) == {"lower": Fraction(5, 2), "mais": 3, "vc": 3}
    assert capacity_bounds(directed_c3) == {"lower": 1, "mais": 1}
    assert capacity_bounds(c5, upper=Fraction(3))["lower"] == 2


def test_small_witness_is_found(small_witness, c5, directed_c3):
    found = strict_improvement_search([directed_c3, c5, small_witness])
    assert [result.graph for result in found] == [small_witness]
    assert found[0].lp == 3
    assert found[0].gap == Fraction(1, 2)
