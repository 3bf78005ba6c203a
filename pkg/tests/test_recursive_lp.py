from fractions import Fraction

import pytest
from hypothesis import given

from graph.generators import clique, cycle
from graph.side_info_graph import join
from solvers.ic_lps import local_partial_lp
from solvers.recursive_lp import KIND_LEAF, KIND_RECURSIVE, KIND_SINGLE, RecursiveLpTrace, recursive_lp
from tests.strategies import graphs
from utils.exceptions import InputException


def test_small_values(c5, directed_c3, k4):
    assert recursive_lp(directed_c3).value == 2
    assert recursive_lp(c5).value == Fraction(5, 2)
    assert recursive_lp(k4).value == 1


def test_trace_is_memoised(c5):
    result = recursive_lp(c5, depth_cap=2)
    trace = result.witness
    assert isinstance(trace, RecursiveLpTrace)
    assert trace.root.kind == KIND_RECURSIVE
    assert trace.root.value == result.value
    kinds = {node.kind for node in trace.memo.values()}
    assert KIND_LEAF in kinds
    before = len(trace.memo)
    trace.node((0, 1, 2), 1)
    assert len(trace.memo) == before


def test_depth_is_clamped_to_the_cap(c5):
    trace = recursive_lp(c5, depth_cap=1).witness
    assert all(depth <= 1 for _, depth in trace.memo)


def test_depth_cap_must_be_positive(c5):
    with pytest.raises(InputException):
        recursive_lp(c5, depth_cap=0)


def test_depth_cap_from_settings(monkeypatch, c5):
    monkeypatch.setenv("ICX_DEPTH_CAP", "1")
    assert recursive_lp(c5).witness.depth_cap == 1


def test_joined_parts_are_coded_independently():
    g = join(cycle(5), cycle(3, directed=True))
    assert recursive_lp(g, depth_cap=1).value <= local_partial_lp(g).value


@given(graphs(max_n=5))
def test_never_above_local_partial_lp(g):
    assert recursive_lp(g, depth_cap=2).value <= local_partial_lp(g).value


def test_clique_is_one():
    assert recursive_lp(clique(6), depth_cap=1).value == 1


def test_single_vertex_root():
    trace = recursive_lp(clique(1)).witness
    assert trace.root.kind == KIND_SINGLE
