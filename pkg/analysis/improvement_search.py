"""
Search for graphs on which the combined local and partial clique LP beats
both of its ingredients, plus the storage-capacity sandwich.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional

from graph.oracles import mais, vertex_cover_number
from graph.side_info_graph import SideInfoGraph
from solvers.ic_lps import fractional_local_chromatic, fractional_partial_clique_cover, local_partial_lp
from solvers.subset_family import SubsetFamily

logger = logging.getLogger(__name__)


@dataclass
class Improvement:
    graph: SideInfoGraph
    lp: Fraction
    fpcc: Fraction
    flc: Fraction

    @property
    def gap(self) -> Fraction:
        return min(self.fpcc, self.flc) - self.lp


def compare_schemes(g: SideInfoGraph, max_subset_size: Optional[int] = None) -> Improvement:
    fam = SubsetFamily.build(g, max_subset_size)
    return Improvement(
        graph=g,
        lp=local_partial_lp(g, fam).value,
        fpcc=fractional_partial_clique_cover(g, fam).value,
        flc=fractional_local_chromatic(g).value,
    )


def strict_improvement_search(graphs: Iterable[SideInfoGraph],
                              max_subset_size: Optional[int] = None) -> List[Improvement]:
    """Instances whose local and partial clique LP is strictly below min(fpcc, flc)."""
    found = []
    checked = 0
    for g in graphs:
        checked += 1
        result = compare_schemes(g, max_subset_size)
        if result.gap > 0:
            logger.info(f"strict improvement on {g!r}: lp = {result.lp}, fpcc = {result.fpcc}, flc = {result.flc}")
            found.append(result)
    logger.info(f"{len(found)} strict improvements among {checked} graphs")
    return found


def capacity_bounds(g: SideInfoGraph, upper: Optional[Fraction] = None) -> Dict[str, Fraction]:
    """
    Bounds on the storage capacity of g.

    Args:
        g: Graph
        upper: Best known achievable broadcast rate (local and partial clique LP by default)

    Returns:
        "lower" = n - upper, "mais" = n - MAIS and, for undirected g, "vc" = VC
    """
    upper = local_partial_lp(g).value if upper is None else upper
    bounds = {
        "lower": g.n - upper,
        "mais": Fraction(g.n - mais(g)),
    }
    if g.is_undirected:
        bounds["vc"] = Fraction(vertex_cover_number(g))
    return bounds
