"""
Exact combinatorial oracles for small graphs.

Every oracle has a configured size or search budget; exceeding it raises
BudgetExceededException instead of falling back to an approximation.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import networkx as nx

from config.settings import get_settings
from graph.side_info_graph import SideInfoGraph, VertexSet, iter_bits
from utils.exceptions import BudgetExceededException, InputException, InternalInvariantError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CliqueFamily:
    cliques: Tuple[VertexSet, ...]
    size_cap: Optional[int] = None  # None means every size
    maximal_only: bool = False

    @property
    def exhaustive(self) -> bool:
        return self.size_cap is None and not self.maximal_only

    def __len__(self) -> int:
        return len(self.cliques)


def _check_size(g: SideInfoGraph, limit: Optional[int], default: int, what: str) -> None:
    limit = default if limit is None else limit
    if g.n > limit:
        raise BudgetExceededException(f"{what} oracle vertex count", limit, g.n)


def _require_undirected(g: SideInfoGraph, what: str) -> None:
    if not g.is_undirected:
        raise InputException(f"{what} requires an undirected graph")


def _nx_undirected(n: int, edges) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(n))
    h.add_edges_from(edges)
    return h


# -------------------
# Independent sets and cliques
# -------------------
def maximum_independent_set(g: SideInfoGraph, limit: Optional[int] = None) -> VertexSet:
    """Largest vertex set with no arc in either direction inside it."""
    _check_size(g, limit, get_settings().oracle_limit, "independence number")
    underlying = g.underlying_undirected()
    non_edges = [(i, j) for i in range(g.n) for j in range(i + 1, g.n) if not underlying.has_arc(i, j)]
    members, _ = nx.max_weight_clique(_nx_undirected(g.n, non_edges), weight=None)
    return tuple(sorted(members))


def independence_number(g: SideInfoGraph, limit: Optional[int] = None) -> int:
    return len(maximum_independent_set(g, limit))


def clique_number(g: SideInfoGraph, limit: Optional[int] = None) -> int:
    _require_undirected(g, "clique number")
    _check_size(g, limit, get_settings().oracle_limit, "clique number")
    _, weight = nx.max_weight_clique(_nx_undirected(g.n, g.edges()), weight=None)
    return int(weight)


def vertex_cover_number(g: SideInfoGraph, limit: Optional[int] = None) -> int:
    """Minimum vertex cover size of an undirected graph (n - alpha)."""
    _require_undirected(g, "vertex cover number")
    return g.n - independence_number(g, limit)


def enumerate_cliques(g: SideInfoGraph, size_cap: Optional[int] = None,
                      budget: Optional[int] = None) -> CliqueFamily:
    """
    All cliques (singletons included) of size at most size_cap.

    For directed graphs a clique is a set of vertices joined pairwise in
    both directions.

    Args:
        g: Graph
        size_cap: Largest clique size to list; None lists every clique
        budget: Maximum number of cliques before giving up

    Returns:
        CliqueFamily ordered by size, then lexicographically
    """
    budget = get_settings().clique_budget if budget is None else budget
    core = g.bidirected_core()
    found: List[VertexSet] = []
    for members in nx.enumerate_all_cliques(_nx_undirected(g.n, core.edges())):
        if size_cap is not None and len(members) > size_cap:
            break
        found.append(tuple(sorted(members)))
        if len(found) > budget:
            raise BudgetExceededException("clique enumeration count", budget)
    found.sort(key=lambda c: (len(c), c))
    return CliqueFamily(cliques=tuple(found), size_cap=size_cap)


def maximal_cliques(g: SideInfoGraph) -> List[VertexSet]:
    core = g.bidirected_core()
    return sorted(tuple(sorted(c)) for c in nx.find_cliques(_nx_undirected(g.n, core.edges())))


# -------------------
# Colorings
# -------------------
def greedy_coloring(g: SideInfoGraph) -> Dict[int, int]:
    """DSATUR greedy proper coloring of the underlying undirected graph."""
    underlying = g.underlying_undirected()
    return nx.coloring.greedy_color(_nx_undirected(g.n, underlying.edges()), strategy="DSATUR")


def _try_color(g: SideInfoGraph, k: int) -> Optional[Dict[int, int]]:
    n = g.n
    colors = [-1] * n
    neighbor_colors = [0] * n  # bitset of colors seen around each vertex

    def pick() -> int:
        best, best_key = -1, None
        for v in range(n):
            if colors[v] < 0:
                key = (neighbor_colors[v].bit_count(), g.degree(v), -v)
                if best_key is None or key > best_key:
                    best, best_key = v, key
        return best

    def backtrack(colored: int, used: int) -> bool:
        if colored == n:
            return True
        v = pick()
        # new colors are interchangeable, so only the first unused one is tried
        for c in range(min(k, used + 1)):
            if neighbor_colors[v] >> c & 1:
                continue
            colors[v] = c
            saved = []
            for u in iter_bits(g.out_mask(v)):
                saved.append((u, neighbor_colors[u]))
                neighbor_colors[u] |= 1 << c
            if backtrack(colored + 1, max(used, c + 1)):
                return True
            for u, mask in saved:
                neighbor_colors[u] = mask
            colors[v] = -1
        return False

    if backtrack(0, 0):
        return {v: colors[v] for v in range(n)}
    return None


def exact_coloring(g: SideInfoGraph, limit: Optional[int] = None) -> Dict[int, int]:
    """
    Proper coloring with chi(g) colors.

    Iterative deepening from the clique number up to the DSATUR greedy
    color count.
    """
    _require_undirected(g, "chromatic number")
    _check_size(g, limit, get_settings().oracle_limit, "chromatic number")
    greedy = greedy_coloring(g)
    upper = max(greedy.values()) + 1
    lower = clique_number(g, limit)
    for k in range(lower, upper):
        coloring = _try_color(g, k)
        if coloring is not None:
            logger.debug(f"exact coloring with {k} colors (greedy used {upper})")
            return coloring
    return greedy


def chromatic_number(g: SideInfoGraph, limit: Optional[int] = None) -> int:
    return max(exact_coloring(g, limit).values()) + 1


def is_proper_coloring(g: SideInfoGraph, coloring: Dict[int, int]) -> bool:
    if set(coloring) != set(range(g.n)):
        return False
    return all(coloring[i] != coloring[j] for i, j in g.edges())


# -------------------
# Triangle packing
# -------------------
def maximal_triangle_packing(g: SideInfoGraph) -> List[VertexSet]:
    """Greedy vertex-disjoint triangles in lexicographic order; maximal."""
    _require_undirected(g, "triangle packing")
    used = 0
    packing: List[VertexSet] = []

    def scan():
        for u in range(g.n):
            for v in iter_bits(g.out_mask(u) >> (u + 1) << (u + 1)):
                for w in iter_bits(g.out_mask(u) & g.out_mask(v) >> (v + 1) << (v + 1)):
                    yield u, v, w

    for u, v, w in scan():
        triangle_mask = (1 << u) | (1 << v) | (1 << w)
        if not used & triangle_mask:
            packing.append((u, v, w))
            used |= triangle_mask

    for u, v, w in scan():
        if not used & ((1 << u) | (1 << v) | (1 << w)):
            raise InternalInvariantError(f"triangle packing not maximal: {(u, v, w)} is unused")
    return packing


# -------------------
# Maximum acyclic induced subgraph
# -------------------
def _closes_cycle(g: SideInfoGraph, chosen: int, v: int) -> bool:
    """Whether adding v to the acyclic set chosen creates a directed cycle."""
    reach = 0
    frontier = g.out_mask(v) & chosen
    while frontier:
        reach |= frontier
        step = 0
        for u in iter_bits(frontier):
            step |= g.out_mask(u) & chosen
        frontier = step & ~reach
    return bool(g.in_mask(v) & reach)


def maximum_acyclic_set(g: SideInfoGraph, limit: Optional[int] = None) -> VertexSet:
    """Largest vertex set inducing a subgraph with no directed cycle."""
    _check_size(g, limit, get_settings().mais_limit, "MAIS")
    best = [0, 0]  # size, mask

    def search(chosen: int, candidates: int) -> None:
        candidates = sum(1 << u for u in iter_bits(candidates) if not _closes_cycle(g, chosen, u))
        # sources and sinks of the remaining graph never lie on a cycle
        changed = True
        while changed:
            changed = False
            live = chosen | candidates
            for u in iter_bits(candidates):
                if not g.out_mask(u) & live or not g.in_mask(u) & live:
                    chosen |= 1 << u
                    candidates &= ~(1 << u)
                    changed = True
        size = chosen.bit_count()
        if size + candidates.bit_count() <= best[0]:
            return
        if not candidates:
            best[0], best[1] = size, chosen
            return
        live = chosen | candidates
        v = max(iter_bits(candidates), key=lambda u: ((g.out_mask(u) | g.in_mask(u)) & live).bit_count())
        rest = candidates & ~(1 << v)
        search(chosen | (1 << v), rest)
        search(chosen, rest)

    search(0, g.full_mask)
    return tuple(u for u in range(g.n) if best[1] >> u & 1)


def mais(g: SideInfoGraph, limit: Optional[int] = None) -> int:
    return len(maximum_acyclic_set(g, limit))


# -------------------
# Minrank over GF(2)
# -------------------
def _reduce(vector: int, basis: Dict[int, int]) -> int:
    while vector:
        top = vector.bit_length() - 1
        if top not in basis:
            return vector
        vector ^= basis[top]
    return 0


def minrank_gf2(g: SideInfoGraph, budget: Optional[int] = None) -> int:
    """
    Minimum GF(2) rank of a matrix fitting g.

    Row i has a 1 on the diagonal, free entries exactly on the out-neighbors
    of i and zeros elsewhere. Rows are chosen one at a time while an XOR
    basis tracks the rank; branches whose rank already reaches the best
    found are cut.
    """
    settings = get_settings()
    budget = settings.minrank_budget if budget is None else budget
    free = g.arc_count
    if free > budget:
        raise BudgetExceededException("minrank free entries", budget, free)

    lower = mais(g) if g.n <= settings.mais_limit else 1
    options = []
    for i in range(g.n):
        neighbors = g.out_mask(i)
        rows = []
        sub = neighbors
        while True:
            rows.append((1 << i) | sub)
            if sub == 0:
                break
            sub = (sub - 1) & neighbors
        options.append(rows)

    best = [g.n]

    def search(i: int, basis: Dict[int, int], rank: int) -> None:
        if rank >= best[0] or best[0] == lower:
            return
        if i == g.n:
            best[0] = rank
            logger.debug(f"minrank improved to {rank}")
            return
        independent = []
        for row in options[i]:
            residue = _reduce(row, basis)
            if residue == 0:
                search(i + 1, basis, rank)
                if best[0] == lower:
                    return
            else:
                independent.append(residue)
        if rank + 1 >= best[0]:
            return
        seen = set()
        for residue in independent:
            top = residue.bit_length() - 1
            # rows with the same residue give the same span
            if residue in seen:
                continue
            seen.add(residue)
            basis[top] = residue
            search(i + 1, basis, rank + 1)
            del basis[top]
            if rank + 1 >= best[0]:
                return

    search(0, {}, 0)
    return best[0]
