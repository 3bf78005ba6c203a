"""
Colour-class rounding of half-integral LP solutions.

Both procedures keep the value-1 vertices, look at the vertices at 1/2
grouped by colour, and treat the largest class differently from the rest.
Each output is checked against the guarantee of the rounding before it is
returned.
"""
import logging
from collections import defaultdict
from fractions import Fraction
from typing import Dict, List

from graph.oracles import is_proper_coloring
from graph.side_info_graph import SideInfoGraph, VertexSet
from solvers.rational_lp import LpSolution
from utils.exceptions import InputException, InternalInvariantError

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


def vertex_values(solution: LpSolution, n: int) -> Dict[int, Fraction]:
    """x_v values of a vertex-indexed LP solution (fvc, alpha_F2)."""
    return {v: solution.assignment.get(f"x_{v}", Fraction(0)) for v in range(n)}


def _split(g: SideInfoGraph, frac: Dict[int, Fraction], coloring: Dict[int, int]):
    if not g.is_undirected:
        raise InputException("rounding requires an undirected graph")
    if set(frac) != set(range(g.n)):
        raise InputException("fractional solution must give a value to every vertex")
    for v, x in frac.items():
        if x not in (0, HALF, 1):
            raise InputException(f"vertex {v + 1} has non-half-integral value {x}")
    if not is_proper_coloring(g, coloring):
        raise InputException("coloring is not proper")
    ones = [v for v in range(g.n) if frac[v] == 1]
    classes: Dict[int, List[int]] = defaultdict(list)
    for v in range(g.n):
        if frac[v] == HALF:
            classes[coloring[v]].append(v)
    largest = max(sorted(classes), key=lambda c: len(classes[c])) if classes else None
    colors = max(2, len(set(coloring.values())))
    return ones, classes, largest, colors


def round_half_integral_vc(g: SideInfoGraph, frac: Dict[int, Fraction], coloring: Dict[int, int]) -> VertexSet:
    """
    Integral vertex cover from a half-integral fractional one.

    The largest colour class of half vertices is dropped, every other half
    vertex is taken.

    Args:
        g: Undirected graph
        frac: Fractional vertex cover with values in {0, 1/2, 1}
        coloring: Proper coloring with l colors

    Returns:
        Vertex cover of size at most (2l - 2) / l times the fractional value
    """
    ones, classes, largest, l = _split(g, frac, coloring)
    for i, j in g.edges():
        if frac[i] + frac[j] < 1:
            raise InputException(f"edge ({i + 1}, {j + 1}) is not fractionally covered")
    cover = set(ones)
    for color, members in classes.items():
        if color != largest:
            cover.update(members)
    if any(i not in cover and j not in cover for i, j in g.edges()):
        raise InternalInvariantError("rounded vertex set is not a cover")
    limit = Fraction(2 * l - 2, l) * sum(frac.values())
    if len(cover) > limit:
        raise InternalInvariantError(f"rounded cover of size {len(cover)} exceeds {limit}")
    logger.debug(f"vertex cover rounding: {len(cover)} <= {limit} with {l} colors")
    return tuple(sorted(cover))


def round_independent_set(g: SideInfoGraph, frac: Dict[int, Fraction], coloring: Dict[int, int]) -> VertexSet:
    """Keep the value-1 vertices and the largest colour class of half vertices."""
    ones, classes, largest, k = _split(g, frac, coloring)
    for i, j in g.edges():
        if frac[i] + frac[j] > 1:
            raise InputException(f"edge ({i + 1}, {j + 1}) carries more than 1")
    chosen = set(ones)
    if largest is not None:
        chosen.update(classes[largest])
    if any(i in chosen and j in chosen for i, j in g.edges()):
        raise InternalInvariantError("rounded vertex set is not independent")
    limit = Fraction(2, k) * sum(frac.values())
    if len(chosen) < limit:
        raise InternalInvariantError(f"rounded independent set of size {len(chosen)} is below {limit}")
    logger.debug(f"independent set rounding: {len(chosen)} >= {limit} with {k} colors")
    return tuple(sorted(chosen))
