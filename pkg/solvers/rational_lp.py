"""
Exact rational linear programming.

A bounded-variable primal simplex over fractions.Fraction with a two-phase
start and Bland's smallest-index rule. Every optimum is a basic (vertex)
solution and is checked by substitution before it is returned.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Set, Tuple, Union

from utils.exceptions import DimensionMismatchException, InputException, InternalInvariantError

logger = logging.getLogger(__name__)

Number = Union[int, Fraction]

MINIMIZE = "min"
MAXIMIZE = "max"

LE = "<="
GE = ">="
EQ = "="

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

HALF_INTEGRAL_TAG = "half_integral"

_HALF_INTEGRAL_VALUES = (Fraction(0), Fraction(1, 2), Fraction(1))


@dataclass
class Constraint:
    coefficients: Dict[str, Fraction]
    sense: str
    rhs: Fraction
    name: str = ""


@dataclass
class LpProblem:
    direction: str = MINIMIZE
    objective: Dict[str, Fraction] = field(default_factory=dict)
    constraints: List[Constraint] = field(default_factory=list)
    variables: List[str] = field(default_factory=list)
    bounds: Dict[str, Tuple[Fraction, Fraction]] = field(default_factory=dict)
    tags: Set[str] = field(default_factory=set)
    name: str = ""

    def add_variable(self, name: str, cost: Number = 0, lo: Number = 0, hi: Number = 1) -> str:
        if name in self.bounds:
            raise DimensionMismatchException(f"variable '{name}' declared twice")
        self.variables.append(name)
        self.bounds[name] = (Fraction(lo), Fraction(hi))
        if cost:
            self.objective[name] = Fraction(cost)
        return name

    def add_constraint(self, coefficients: Dict[str, Number], sense: str, rhs: Number, name: str = "") -> None:
        if sense not in (LE, GE, EQ):
            raise InputException(f"unknown constraint sense '{sense}'")
        row = {var: Fraction(value) for var, value in coefficients.items() if value}
        self.constraints.append(Constraint(row, sense, Fraction(rhs), name))


@dataclass
class LpSolution:
    status: str
    value: Optional[Fraction] = None
    assignment: Dict[str, Fraction] = field(default_factory=dict)
    is_vertex: bool = False
    pivots: int = 0

    @property
    def optimal(self) -> bool:
        return self.status == OPTIMAL

    def support(self) -> Dict[str, Fraction]:
        """Variables with a nonzero value."""
        return {name: value for name, value in self.assignment.items() if value}


class _Tableau:
    """Dense simplex tableau B^-1 A with explicit values for every column."""

    def __init__(self, rows: List[List[Fraction]], rhs: List[Fraction], upper: List[Optional[Fraction]],
                 basis: List[int]):
        self.rows = rows
        self.upper = upper
        self.basis = basis
        self.width = len(upper)
        self.value = [Fraction(0)] * self.width
        for i, column in enumerate(basis):
            self.value[column] = rhs[i]
        self.is_basic = [False] * self.width
        for column in basis:
            self.is_basic[column] = True
        self.pivots = 0

    def reduced_costs(self, cost: List[Fraction]) -> List[Fraction]:
        reduced = list(cost)
        for i, column in enumerate(self.basis):
            weight = cost[column]
            if weight:
                for j, a in enumerate(self.rows[i]):
                    if a:
                        reduced[j] -= weight * a
        return reduced

    def pivot(self, p: int, q: int, reduced: List[Fraction]) -> None:
        row = self.rows[p]
        scale = row[q]
        if scale != 1:
            row[:] = [a / scale for a in row]
        nonzero = [j for j, a in enumerate(row) if a]
        for i, other in enumerate(self.rows):
            if i == p:
                continue
            factor = other[q]
            if factor:
                for j in nonzero:
                    other[j] -= factor * row[j]
        factor = reduced[q]
        if factor:
            for j in nonzero:
                reduced[j] -= factor * row[j]
        self.is_basic[self.basis[p]] = False
        self.basis[p] = q
        self.is_basic[q] = True
        self.pivots += 1

    def run(self, cost: List[Fraction]) -> str:
        """Minimize cost from the current basic feasible solution."""
        reduced = self.reduced_costs(cost)
        while True:
            entering, direction = None, 0
            for j in range(self.width):
                if self.is_basic[j]:
                    continue
                upper = self.upper[j]
                if upper is not None and upper == 0:
                    continue
                d = reduced[j]
                if d < 0 and self.value[j] == 0:
                    entering, direction = j, 1
                    break
                if d > 0 and upper is not None and self.value[j] == upper:
                    entering, direction = j, -1
                    break
            if entering is None:
                return OPTIMAL

            q = entering
            theta = self.upper[q]  # bound flip, None if unbounded above
            leaving_row = None
            for i, row in enumerate(self.rows):
                a = row[q]
                if not a:
                    continue
                column = self.basis[i]
                rate = -direction * a
                if rate < 0:
                    limit = self.value[column] / -rate
                else:
                    bound = self.upper[column]
                    if bound is None:
                        continue
                    limit = (bound - self.value[column]) / rate
                if theta is None or limit < theta or (
                        limit == theta and leaving_row is not None and column < self.basis[leaving_row]):
                    theta = limit
                    leaving_row = i
            if theta is None:
                return UNBOUNDED

            self.value[q] += direction * theta
            for i, row in enumerate(self.rows):
                a = row[q]
                if a:
                    self.value[self.basis[i]] -= direction * theta * a
            if leaving_row is None:
                continue  # bound flip, basis unchanged
            self.pivot(leaving_row, q, reduced)


def _validate(p: LpProblem) -> None:
    declared = set(p.variables)
    if len(declared) != len(p.variables):
        raise DimensionMismatchException("duplicate variable names")
    if set(p.bounds) != declared:
        raise DimensionMismatchException("bounds do not match the declared variables")
    for name in p.objective:
        if name not in declared:
            raise DimensionMismatchException(f"objective uses undeclared variable '{name}'")
    for constraint in p.constraints:
        for name in constraint.coefficients:
            if name not in declared:
                raise DimensionMismatchException(
                    f"constraint '{constraint.name}' uses undeclared variable '{name}'")
    for name, (lo, hi) in p.bounds.items():
        if lo is None or hi is None:
            raise InputException(f"variable '{name}' needs finite bounds")
    if p.direction not in (MINIMIZE, MAXIMIZE):
        raise InputException(f"unknown direction '{p.direction}'")


def _check_solution(p: LpProblem, solution: LpSolution) -> None:
    x = solution.assignment
    for name, (lo, hi) in p.bounds.items():
        if not lo <= x[name] <= hi:
            raise InternalInvariantError(f"{p.name}: variable {name}={x[name]} outside [{lo}, {hi}]")
    for constraint in p.constraints:
        lhs = sum((a * x[name] for name, a in constraint.coefficients.items()), Fraction(0))
        ok = (lhs <= constraint.rhs if constraint.sense == LE
              else lhs >= constraint.rhs if constraint.sense == GE
              else lhs == constraint.rhs)
        if not ok:
            raise InternalInvariantError(f"{p.name}: constraint '{constraint.name}' violated ({lhs} vs {constraint.rhs})")
    value = sum((a * x[name] for name, a in p.objective.items()), Fraction(0))
    if value != solution.value:
        raise InternalInvariantError(f"{p.name}: objective {value} differs from reported {solution.value}")
    if HALF_INTEGRAL_TAG in p.tags:
        odd = {name: v for name, v in x.items() if v not in _HALF_INTEGRAL_VALUES}
        if odd:
            raise InternalInvariantError(f"{p.name}: vertex solution is not half-integral: {odd}")


def solve(p: LpProblem) -> LpSolution:
    """
    Solve an LP exactly.

    Args:
        p: Problem with finite bounds on every variable

    Returns:
        LpSolution with an optimal vertex, or status infeasible/unbounded
    """
    _validate(p)
    names = p.variables
    nv = len(names)
    index = {name: j for j, name in enumerate(names)}
    lows = [p.bounds[name][0] for name in names]
    uppers: List[Optional[Fraction]] = [p.bounds[name][1] - p.bounds[name][0] for name in names]
    for name, span in zip(names, uppers):
        if span < 0:
            return LpSolution(status=INFEASIBLE)

    # shift x = lo + y, add slacks, flip rows to nonnegative rhs
    m = len(p.constraints)
    slack_of_row: List[Optional[int]] = []
    width = nv
    for constraint in p.constraints:
        if constraint.sense == EQ:
            slack_of_row.append(None)
        else:
            slack_of_row.append(width)
            width += 1
    rows: List[List[Fraction]] = []
    rhs: List[Fraction] = []
    for i, constraint in enumerate(p.constraints):
        row = [Fraction(0)] * width
        b = constraint.rhs
        for name, a in constraint.coefficients.items():
            j = index[name]
            row[j] = a
            b -= a * lows[j]
        slack = slack_of_row[i]
        if slack is not None:
            row[slack] = Fraction(1) if constraint.sense == LE else Fraction(-1)
        if b < 0:
            row = [-a for a in row]
            b = -b
        rows.append(row)
        rhs.append(b)
    uppers.extend([None] * (width - nv))

    basis: List[int] = []
    artificials: List[int] = []
    for i in range(m):
        slack = slack_of_row[i]
        if slack is not None and rows[i][slack] == 1:
            basis.append(slack)
            continue
        column = width + len(artificials)
        artificials.append(column)
        basis.append(column)
    total = width + len(artificials)
    for i, row in enumerate(rows):
        row.extend([Fraction(0)] * len(artificials))
        if basis[i] >= width:
            row[basis[i]] = Fraction(1)
    uppers.extend([None] * len(artificials))

    tableau = _Tableau(rows, rhs, uppers, basis)

    if artificials:
        phase_one = [Fraction(0)] * total
        for column in artificials:
            phase_one[column] = Fraction(1)
        tableau.run(phase_one)
        infeasibility = sum((tableau.value[c] for c in artificials), Fraction(0))
        if infeasibility > 0:
            logger.debug(f"{p.name}: infeasible (phase one residual {infeasibility})")
            return LpSolution(status=INFEASIBLE, pivots=tableau.pivots)
        for column in artificials:
            tableau.upper[column] = Fraction(0)

    sign = 1 if p.direction == MINIMIZE else -1
    cost = [Fraction(0)] * total
    for name, a in p.objective.items():
        cost[index[name]] = sign * a
    status = tableau.run(cost)
    if status == UNBOUNDED:
        return LpSolution(status=UNBOUNDED, pivots=tableau.pivots)

    assignment = {name: lows[j] + tableau.value[j] for j, name in enumerate(names)}
    value = sum((a * assignment[name] for name, a in p.objective.items()), Fraction(0))
    solution = LpSolution(status=OPTIMAL, value=value, assignment=assignment, is_vertex=True,
                          pivots=tableau.pivots)
    _check_solution(p, solution)
    logger.debug(f"{p.name or 'lp'}: optimum {value} after {tableau.pivots} pivots")
    return solution


def solve_dual_pair(primal: LpProblem, dual: LpProblem) -> Tuple[LpSolution, LpSolution]:
    return solve(primal), solve(dual)
