"""
Linear programs bounding the broadcast rate.

Lower-bound side: fractional vertex cover and matching, clique packing,
the independent-set LP with small clique constraints. Upper-bound side:
fractional clique cover, fractional partial clique cover, the fractional
local chromatic LP and the combined local and partial clique LP.

Subset variables are named after their members (rho_0_2_3) so that an
LpSolution alone tells which subsets it uses.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, Optional, Sequence, Tuple

from graph.oracles import CliqueFamily, enumerate_cliques
from graph.side_info_graph import SideInfoGraph, VertexSet, mask_of
from solvers.rational_lp import (
    GE,
    HALF_INTEGRAL_TAG,
    LE,
    MAXIMIZE,
    MINIMIZE,
    LpProblem,
    LpSolution,
    solve,
)
from solvers.subset_family import SubsetFamily
from utils.exceptions import InputException, InternalInvariantError

logger = logging.getLogger(__name__)

LOCAL_VARIABLE = "t"


@dataclass
class BoundValue:
    name: str
    value: Fraction
    certificate: Optional[LpSolution] = None
    family_restricted: bool = False
    witness: Any = None


def subset_variable(members: Sequence[int]) -> str:
    return "rho_" + "_".join(str(v) for v in members)


def subset_of_variable(name: str) -> Optional[VertexSet]:
    if not name.startswith("rho_"):
        return None
    return tuple(int(part) for part in name[4:].split("_"))


def solution_weights(solution: LpSolution) -> Dict[VertexSet, Fraction]:
    """Positive subset weights of a covering LP solution."""
    weights = {}
    for name, value in solution.support().items():
        members = subset_of_variable(name)
        if members is not None:
            weights[members] = value
    return weights


def _require_undirected(g: SideInfoGraph, what: str) -> None:
    if not g.is_undirected:
        raise InputException(f"{what} requires an undirected graph")


def _solved(name: str, problem: LpProblem, restricted: bool = False, witness: Any = None) -> BoundValue:
    solution = solve(problem)
    if not solution.optimal:
        raise InternalInvariantError(f"{name} LP is {solution.status}")
    logger.debug(f"{name} = {solution.value} ({len(problem.variables)} variables, {solution.pivots} pivots)")
    return BoundValue(name, solution.value, solution, restricted, witness)


# -------------------
# Undirected LPs
# -------------------
def fvc_problem(g: SideInfoGraph) -> LpProblem:
    problem = LpProblem(MINIMIZE, name="fvc", tags={HALF_INTEGRAL_TAG})
    for v in range(g.n):
        problem.add_variable(f"x_{v}", cost=1)
    for i, j in g.edges():
        problem.add_constraint({f"x_{i}": 1, f"x_{j}": 1}, GE, 1, name=f"edge_{i}_{j}")
    return problem


def fmm_problem(g: SideInfoGraph) -> LpProblem:
    problem = LpProblem(MAXIMIZE, name="fmm")
    incident: Dict[int, Dict[str, int]] = {v: {} for v in range(g.n)}
    for i, j in g.edges():
        name = problem.add_variable(f"y_{i}_{j}", cost=1)
        incident[i][name] = 1
        incident[j][name] = 1
    for v in range(g.n):
        if incident[v]:
            problem.add_constraint(incident[v], LE, 1, name=f"load_{v}")
    return problem


def fvc(g: SideInfoGraph) -> BoundValue:
    _require_undirected(g, "fractional vertex cover")
    return _solved("fvc", fvc_problem(g))


def fmm(g: SideInfoGraph) -> BoundValue:
    _require_undirected(g, "fractional matching")
    return _solved("fmm", fmm_problem(g))


def alpha_fk(g: SideInfoGraph, k: int) -> BoundValue:
    """Independent-set LP with one constraint per clique of size 2..k."""
    _require_undirected(g, "alpha_Fk")
    if k < 2:
        raise InputException(f"alpha_Fk needs k >= 2, got {k}")
    cliques = enumerate_cliques(g, size_cap=k)
    problem = LpProblem(MAXIMIZE, name=f"alpha_f{k}")
    if k == 2:
        problem.tags.add(HALF_INTEGRAL_TAG)
    for v in range(g.n):
        problem.add_variable(f"x_{v}", cost=1)
    for members in cliques.cliques:
        if len(members) >= 2:
            problem.add_constraint({f"x_{v}": 1 for v in members}, LE, 1, name=subset_variable(members))
    return _solved(f"alphaf{k}", problem)


# -------------------
# Clique LPs
# -------------------
def _cliques_or_all(g: SideInfoGraph, cliques: Optional[CliqueFamily]) -> CliqueFamily:
    return enumerate_cliques(g) if cliques is None else cliques


def fcp(g: SideInfoGraph, cliques: Optional[CliqueFamily] = None) -> BoundValue:
    cliques = _cliques_or_all(g, cliques)
    problem = LpProblem(MAXIMIZE, name="fcp")
    load: Dict[int, Dict[str, int]] = {v: {} for v in range(g.n)}
    for members in cliques.cliques:
        name = problem.add_variable(subset_variable(members), cost=len(members) - 1)
        for v in members:
            load[v][name] = 1
    for v in range(g.n):
        if load[v]:
            problem.add_constraint(load[v], LE, 1, name=f"load_{v}")
    return _solved("fcp", problem, restricted=not cliques.exhaustive)


def _cover_problem(g: SideInfoGraph, name: str, subsets: Sequence[Tuple[VertexSet, Fraction]]) -> LpProblem:
    """min sum cost_S rho_S subject to every vertex covered at least once."""
    problem = LpProblem(MINIMIZE, name=name)
    cover: Dict[int, Dict[str, int]] = {v: {} for v in range(g.n)}
    for members, cost in subsets:
        variable = problem.add_variable(subset_variable(members), cost=cost)
        for v in members:
            cover[v][variable] = 1
    for v in range(g.n):
        if not cover[v]:
            raise InputException(f"vertex {v + 1} is not covered by any subset")
        problem.add_constraint(cover[v], GE, 1, name=f"cover_{v}")
    return problem


def fcc(g: SideInfoGraph, cliques: Optional[CliqueFamily] = None) -> BoundValue:
    cliques = _cliques_or_all(g, cliques)
    problem = _cover_problem(g, "fcc", [(members, Fraction(1)) for members in cliques.cliques])
    return _solved("fcc", problem, restricted=not cliques.exhaustive)


def fractional_partial_clique_cover(g: SideInfoGraph, fam: Optional[SubsetFamily] = None) -> BoundValue:
    fam = SubsetFamily.build(g) if fam is None else fam
    problem = _cover_problem(g, "fpcc", [(members, Fraction(k + 1)) for members, k in fam])
    return _solved("fpcc", problem, restricted=fam.restricted)


# -------------------
# Local LPs
# -------------------
def local_problem(g: SideInfoGraph, name: str, subsets: Sequence[VertexSet],
                  coefficient: Callable[[int, int, int], Fraction]) -> LpProblem:
    """
    min t subject to cover constraints and, for every vertex v,
    sum_S coefficient(index of S, mask of S, v) * rho_S <= t.
    """
    problem = _cover_problem(g, name, [(members, Fraction(0)) for members in subsets])
    problem.add_variable(LOCAL_VARIABLE, cost=1, lo=0, hi=g.n)
    masks = [mask_of(members) for members in subsets]
    for v in range(g.n):
        row: Dict[str, Fraction] = {LOCAL_VARIABLE: Fraction(-1)}
        for idx, (members, mask) in enumerate(zip(subsets, masks)):
            c = coefficient(idx, mask, v)
            if c:
                row[subset_variable(members)] = c
        problem.add_constraint(row, LE, 0, name=f"local_{v}")
    return problem


def fractional_local_chromatic(g: SideInfoGraph, cliques: Optional[CliqueFamily] = None) -> BoundValue:
    """Fractional local chromatic number of the complement, over cliques of g."""
    cliques = _cliques_or_all(g, cliques)
    closed = [g.closed_interference_mask(v) for v in range(g.n)]

    def hits(idx: int, mask: int, v: int) -> Fraction:
        return Fraction(1) if mask & closed[v] else Fraction(0)

    problem = local_problem(g, "flc", list(cliques.cliques), hits)
    return _solved("flc", problem, restricted=not cliques.exhaustive)


def local_partial_lp(g: SideInfoGraph, fam: Optional[SubsetFamily] = None) -> BoundValue:
    """
    Combined local and partial clique LP.

    A subset S charges vertex v min(|S & closed(v)|, k_S + 1), where closed(v)
    holds v and every vertex whose message v does not know.
    """
    fam = SubsetFamily.build(g) if fam is None else fam
    closed = [g.closed_interference_mask(v) for v in range(g.n)]

    def charge(idx: int, mask: int, v: int) -> Fraction:
        return Fraction(min((mask & closed[v]).bit_count(), fam.deficiencies[idx] + 1))

    problem = local_problem(g, "lp", list(fam.subsets), charge)
    return _solved("lp", problem, restricted=fam.restricted)


def integral_local_partial_rate(g: SideInfoGraph, partial_cliques: Sequence[VertexSet],
                                deficiencies: Sequence[int]) -> int:
    """Objective of the integral local partial clique program for a disjoint cover."""
    closed = [g.closed_interference_mask(v) for v in range(g.n)]
    masks = [mask_of(s) for s in partial_cliques]
    return max(
        sum(min((mask & closed[v]).bit_count(), k + 1) for mask, k in zip(masks, deficiencies))
        for v in range(g.n)
    )
