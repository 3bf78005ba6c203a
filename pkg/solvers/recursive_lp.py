"""
Recursive local and partial clique LP.

The value IC(H) of a subgraph H is the optimum of the local LP in which a
subset S charges vertex v min(|S & closed(v)|, c_S), where c_S is the rate
already achievable on the subgraph induced by S: min(k_S + 1, IC(H|S)) for
a proper subset and k_S + 1 for the whole vertex set of H. Single vertices
have IC = 1. Subgraphs reached at the depth cap use the plain local and
partial clique LP instead of recursing.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Tuple

from config.settings import get_settings
from graph.side_info_graph import SideInfoGraph, VertexSet, induced, mask_of
from solvers.ic_lps import BoundValue, local_partial_lp, local_problem
from solvers.rational_lp import LpSolution, solve
from solvers.subset_family import SubsetFamily
from utils.exceptions import InputException, InternalInvariantError

logger = logging.getLogger(__name__)

KIND_SINGLE = "single"
KIND_LEAF = "leaf"  # local and partial clique LP at the depth cap
KIND_RECURSIVE = "recursive"

CHOICE_MDS = "mds"  # subset coded as a partial clique
CHOICE_SUB = "sub"  # subset coded by its own recursive scheme


@dataclass
class RecursiveNode:
    vertices: VertexSet  # global vertex ids, sorted
    depth: int
    kind: str
    value: Fraction
    graph: Optional[SideInfoGraph] = None  # induced subgraph, local ids
    family: Optional[SubsetFamily] = None
    solution: Optional[LpSolution] = None
    choices: Dict[VertexSet, str] = field(default_factory=dict)  # local subset -> CHOICE_*


class RecursiveLpTrace:
    """Memo of every subgraph evaluated for one top-level recursive LP."""

    def __init__(self, g: SideInfoGraph, depth_cap: int, max_subset_size: Optional[int] = None):
        if depth_cap < 1:
            raise InputException(f"depth cap must be at least 1, got {depth_cap}")
        self.g = g
        self.depth_cap = depth_cap
        self.max_subset_size = max_subset_size
        self.memo: Dict[Tuple[int, int], RecursiveNode] = {}
        self.restricted = False

    def node(self, vertices: VertexSet, depth: int) -> RecursiveNode:
        depth = min(depth, self.depth_cap)
        key = (mask_of(vertices), depth)
        if key not in self.memo:
            self.memo[key] = self._evaluate(vertices, depth)
        return self.memo[key]

    @property
    def root(self) -> RecursiveNode:
        return self.node(tuple(range(self.g.n)), 0)

    def child(self, parent: RecursiveNode, local_subset: VertexSet) -> RecursiveNode:
        return self.node(tuple(parent.vertices[i] for i in local_subset), parent.depth + 1)

    def _evaluate(self, vertices: VertexSet, depth: int) -> RecursiveNode:
        if len(vertices) == 1:
            return RecursiveNode(vertices, depth, KIND_SINGLE, Fraction(1))
        sub = self.g if len(vertices) == self.g.n else induced(self.g, vertices)
        fam = SubsetFamily.build(sub, self.max_subset_size)
        self.restricted = self.restricted or fam.restricted

        if depth >= self.depth_cap:
            bound = local_partial_lp(sub, fam)
            return RecursiveNode(vertices, depth, KIND_LEAF, bound.value, sub, fam, bound.certificate)

        node = RecursiveNode(vertices, depth, KIND_RECURSIVE, Fraction(0), sub, fam)
        capacity = []
        for members, k in fam:
            cap = Fraction(k + 1)
            choice = CHOICE_MDS
            if 1 < len(members) < sub.n:
                inner = self.child(node, members).value
                if inner < cap:
                    cap, choice = inner, CHOICE_SUB
            capacity.append(cap)
            node.choices[members] = choice

        closed = [sub.closed_interference_mask(v) for v in range(sub.n)]

        def charge(idx: int, mask: int, v: int) -> Fraction:
            return min(Fraction((mask & closed[v]).bit_count()), capacity[idx])

        problem = local_problem(sub, f"recursive_{depth}", list(fam.subsets), charge)
        solution = solve(problem)
        if not solution.optimal:
            raise InternalInvariantError(f"recursive LP on {list(vertices)} is {solution.status}")
        node.value = solution.value
        node.solution = solution
        logger.debug(f"IC{list(vertices)} at depth {depth} = {solution.value}")
        return node


def recursive_lp(g: SideInfoGraph, max_subset_size: Optional[int] = None,
                 depth_cap: Optional[int] = None) -> BoundValue:
    """
    Evaluate the recursive LP; single-threaded per call.

    Args:
        g: Graph
        max_subset_size: Subset family cap applied to every subgraph
        depth_cap: Recursion depth after which the plain LP is used

    Returns:
        BoundValue whose witness is the RecursiveLpTrace
    """
    depth_cap = get_settings().depth_cap if depth_cap is None else depth_cap
    trace = RecursiveLpTrace(g, depth_cap, max_subset_size)
    root = trace.root
    logger.info(f"recursive LP = {root.value} ({len(trace.memo)} subgraphs, depth cap {depth_cap})")
    return BoundValue("recursive", root.value, root.solution, trace.restricted, trace)


