"""
Deterministic graph families used by the CLI, the tests and the scripts.
"""
from typing import List

import numpy as np

from graph.side_info_graph import SideInfoGraph, complement, join
from utils.exceptions import InputException


def cycle(n: int, directed: bool = False) -> SideInfoGraph:
    """Cycle 0 -> 1 -> ... -> n-1 -> 0 (both directions unless directed)."""
    if n < 3:
        raise InputException(f"a cycle needs at least 3 vertices, got {n}")
    return SideInfoGraph.from_arcs(n, [(i, (i + 1) % n) for i in range(n)], undirected=not directed)


def clique(n: int) -> SideInfoGraph:
    if n < 1:
        raise InputException(f"clique size must be positive, got {n}")
    full = (1 << n) - 1
    return SideInfoGraph(n, [full & ~(1 << v) for v in range(n)])


def empty(n: int) -> SideInfoGraph:
    return SideInfoGraph(n, [0] * n)


def random_graph(n: int, p: float, seed: int, directed: bool = False) -> SideInfoGraph:
    """
    G(n, p) with a seeded numpy generator.

    Args:
        n: Vertex count
        p: Probability of each arc (directed) or edge (undirected)
        seed: Seed for numpy.random.default_rng
        directed: Draw each ordered pair independently

    Returns:
        SideInfoGraph
    """
    if not 0.0 <= p <= 1.0:
        raise InputException(f"edge probability must lie in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    arcs = []
    for i in range(n):
        for j in range(n):
            if i == j or (not directed and j < i):
                continue
            if rng.random() < p:
                arcs.append((i, j))
    return SideInfoGraph.from_arcs(n, arcs, undirected=not directed)


def random_cobipartite(n: int, seed: int, p: float = 0.5) -> SideInfoGraph:
    """Complement of a random bipartite graph (its complement is perfect)."""
    rng = np.random.default_rng(seed)
    side = rng.integers(0, 2, size=n)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if side[i] != side[j] and rng.random() < p:
                edges.append((i, j))
    return complement(SideInfoGraph.from_arcs(n, edges, undirected=True))


def strict_improvement_witness() -> SideInfoGraph:
    """
    Directed 11-vertex instance on which the combined local and partial
    clique LP is strictly below both the partial clique cover and the local
    chromatic LP.

    Vertices 0..2 form a directed 3-cycle and know every other message.
    Vertices 3..7 form an undirected 5-cycle, vertices 8..10 a directed
    3-cycle, and these two parts know each other completely.
    """
    directed_triangle = cycle(3, directed=True)
    c5_with_triangle = join(cycle(5), cycle(3, directed=True))
    return join(directed_triangle, c5_with_triangle, mutual=False)


def small_strict_improvement_witness() -> SideInfoGraph:
    """Seeded 6-vertex digraph with lp = 3 < fpcc = 7/2 < flc = 4."""
    return random_graph(6, 0.7, seed=14, directed=True)


def catalogue() -> List[SideInfoGraph]:
    """Small named instances searched for strict LP improvements."""
    return [
        cycle(3, directed=True),
        cycle(5),
        cycle(5, directed=True),
        join(cycle(5), cycle(3, directed=True)),
        small_strict_improvement_witness(),
        strict_improvement_witness(),
    ]
