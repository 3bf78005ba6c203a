from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from analysis.geometry import (
    PointCloud,
    exact,
    generate_udg,
    is_lambda_precise,
    lambda_precision,
    parse_point_cloud,
    random_lambda_cloud,
    random_point_cloud,
    squared_distance,
    write_point_cloud,
)
from graph.oracles import chromatic_number, clique_number, independence_number
from solvers.ic_lps import fcc
from utils.exceptions import InputException, ParseException


def test_exact_coordinates():
    assert exact("0.1") == Fraction(1, 10)
    assert exact(0.1) == Fraction(1, 10)
    assert exact("1/3") == Fraction(1, 3)
    assert exact(2) == 2
    for bad in ("abc", "nan", "inf"):
        with pytest.raises(InputException):
            exact(bad)


def test_touching_disks_are_adjacent():
    cloud = PointCloud.of([(0, 0), (2, 0), ("4.1", 0)])
    g = generate_udg(cloud, 1)
    assert g.edges() == [(0, 1)]
    assert generate_udg(cloud, "1.05").edges() == [(0, 1), (1, 2)]


def test_udg_rejects_bad_input():
    with pytest.raises(InputException):
        generate_udg(PointCloud.of([(0, 0)]), 0)
    with pytest.raises(InputException):
        generate_udg(PointCloud(()), 1)


@given(st.integers(1, 12), st.integers(0, 10_000), st.integers(-5, 5), st.integers(-5, 5))
def test_udg_is_translation_invariant(n, seed, dx, dy):
    cloud = random_point_cloud(n, 3, seed)
    assert generate_udg(cloud, 1) == generate_udg(cloud.translated(dx, dy), 1)


def test_lambda_precision():
    cloud = PointCloud.of([(0, 0), (3, 4), (0, 1)])
    assert lambda_precision(cloud) == 1
    assert is_lambda_precise(cloud, 1)
    assert not is_lambda_precise(cloud, "1.1")
    with pytest.raises(InputException):
        lambda_precision(PointCloud.of([(0, 0)]))


def test_parse_point_cloud():
    cloud = parse_point_cloud("p 0 0\n# comment\np 1/2 0.5  # trailing\n")
    assert cloud.points == ((0, 0), (Fraction(1, 2), Fraction(1, 2)))
    assert parse_point_cloud(write_point_cloud(cloud)) == cloud


@pytest.mark.parametrize("text, line", [("q 1 2\n", 1), ("p 0 0\np 1\n", 2), ("p 0 0\n\np x 1\n", 3)])
def test_point_cloud_errors(text, line):
    with pytest.raises(ParseException) as info:
        parse_point_cloud(text, source="pts.txt")
    assert info.value.line == line


def test_random_clouds_are_seeded():
    a = random_point_cloud(10, 2, seed=5)
    assert a == random_point_cloud(10, 2, seed=5)
    assert all(0 <= x <= 2 and 0 <= y <= 2 for x, y in a.points)


@pytest.mark.parametrize("lam", ["1/4", "1/2", "0.7"])
def test_lambda_cloud_keeps_its_distance(lam):
    cloud = random_lambda_cloud(20, lam, 4, seed=1)
    assert len(cloud) == 20
    assert all(squared_distance(a, b) >= exact(lam) ** 2 for a, b in combinations(cloud.points, 2))


def test_lambda_cloud_that_cannot_fit():
    with pytest.raises(InputException):
        random_lambda_cloud(50, 1, 1, seed=0, max_draws=2000)


UDG_SIDE = 6
LAMBDAS = ("1/4", "1/2", "7/10")


def _check_udg(seed: int) -> None:
    g = generate_udg(random_point_cloud(2 + seed % 13, UDG_SIDE, seed), 1)
    omega, alpha = clique_number(g), independence_number(g)
    assert chromatic_number(g) <= 3 * omega - 2
    assert fcc(g).value <= 3 * alpha


def _check_lambda_cloud(seed: int) -> None:
    cloud = random_lambda_cloud(2 + seed % 13, LAMBDAS[seed % len(LAMBDAS)], UDG_SIDE, seed)
    assert clique_number(generate_udg(cloud, 1)) <= 64 / lambda_precision(cloud)


@pytest.mark.parametrize("seed", range(60))
def test_unit_disk_graph_facts(seed):
    _check_udg(seed)


@pytest.mark.parametrize("seed", range(30))
def test_lambda_precise_clique_bound(seed):
    _check_lambda_cloud(seed)


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(60, 1000))
def test_unit_disk_graph_facts_full_sweep(seed):
    _check_udg(seed)


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(30, 200))
def test_lambda_precise_clique_bound_full_sweep(seed):
    _check_lambda_cloud(seed)
