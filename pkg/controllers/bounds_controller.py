"""
`icx bounds`: compute the requested lower and upper bounds of a graph.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Annotated, Callable, Dict, List, Optional, Tuple

import typer

from coding.gic import GicStructure, GicViolation, gic_cover_bound, read_structure, validate_document, \
    whole_graph_candidates
from config.bound_registry import BOUND_DESCRIPTIONS, BOUND_ORDER, DEFAULT_ENABLED, UNDIRECTED_ONLY
from config.settings import get_settings
from constants import TOOL_VERSION
from controllers.common import (
    DepthCapOption,
    InputOption,
    LogLevelOption,
    MaxSubsetOption,
    NoTimingsOption,
    OracleLimitOption,
    OutOption,
    SeedOption,
    Stopwatch,
    StructureOption,
    configure_logging,
    emit,
    graph_meta,
    load_graph,
    split_names,
)
from graph.oracles import independence_number, mais, minrank_gf2
from graph.side_info_graph import SideInfoGraph
from models.rational import RationalValue
from models.report import BoundEntry, BoundsReport
from solvers.ic_lps import (
    BoundValue,
    alpha_fk,
    fcc,
    fcp,
    fmm,
    fractional_local_chromatic,
    fractional_partial_clique_cover,
    fvc,
    local_partial_lp,
)
from solvers.recursive_lp import recursive_lp
from solvers.subset_family import SubsetFamily
from utils.exceptions import BudgetExceededException, InputException

logger = logging.getLogger(__name__)
router = typer.Typer()


@dataclass
class BoundOptions:
    max_subset_size: Optional[int] = None
    oracle_limit: Optional[int] = None
    depth_cap: Optional[int] = None
    structures: List[GicStructure] = field(default_factory=list)
    _family: Optional[SubsetFamily] = None

    def family(self, g: SideInfoGraph) -> SubsetFamily:
        if self._family is None:
            self._family = SubsetFamily.build(g, self.max_subset_size)
        return self._family


def _exact(name: str, value: int) -> BoundValue:
    return BoundValue(name, Fraction(value))


COMPUTE: Dict[str, Callable[[SideInfoGraph, BoundOptions], BoundValue]] = {
    "alpha": lambda g, o: _exact("alpha", independence_number(g, o.oracle_limit)),
    "mais": lambda g, o: _exact("mais", mais(g, get_settings().mais_limit)),
    "minrank2": lambda g, o: _exact("minrank2", minrank_gf2(g)),
    "fvc": lambda g, o: fvc(g),
    "fmm": lambda g, o: fmm(g),
    "alphaf2": lambda g, o: alpha_fk(g, 2),
    "fcp": lambda g, o: fcp(g),
    "fcc": lambda g, o: fcc(g),
    "fpcc": lambda g, o: fractional_partial_clique_cover(g, o.family(g)),
    "flc": lambda g, o: fractional_local_chromatic(g),
    "lp": lambda g, o: local_partial_lp(g, o.family(g)),
    "recursive": lambda g, o: recursive_lp(g, o.max_subset_size, o.depth_cap),
    "gic": lambda g, o: gic_cover_bound(g, o.structures or whole_graph_candidates(g)),
}


def parse_enabled(text: Optional[str]) -> List[str]:
    """Requested bound names in report order; unknown names are input errors."""
    names = split_names(text) if text else list(DEFAULT_ENABLED)
    unknown = [name for name in names if name not in BOUND_DESCRIPTIONS]
    if unknown:
        raise InputException(f"unknown bound name(s): {', '.join(unknown)}; "
                             f"choose from {','.join(BOUND_ORDER)}")
    return [name for name in BOUND_ORDER if name in names]


def load_structures(g: SideInfoGraph, paths: Optional[List[Path]]) -> List[GicStructure]:
    structures = []
    for path in paths or []:
        result = validate_document(g, read_structure(path))
        if isinstance(result, GicViolation):
            raise InputException(f"{path}: GIC structure violates {result.property} at vertex "
                                 f"{result.vertex + 1}: {result.detail}")
        structures.append(result)
    return structures


def collect_bounds(g: SideInfoGraph, names: List[str], options: BoundOptions, watch: Stopwatch,
                   skip_over_budget: bool = False) -> Tuple[Dict[str, BoundEntry], Dict[str, str]]:
    """
    Compute each bound in order.

    Undirected-only bounds are skipped on directed graphs. With
    skip_over_budget, a bound whose exact search exceeds its budget is
    skipped too; otherwise the BudgetExceededException propagates.
    """
    bounds, skipped = {}, {}
    for name in names:
        if name in UNDIRECTED_ONLY and not g.is_undirected:
            skipped[name] = "requires an undirected graph"
            continue
        try:
            with watch.stage(name):
                result = COMPUTE[name](g, options)
        except BudgetExceededException as e:
            if not skip_over_budget:
                raise
            logger.warning(f"{name} skipped: {e.message}")
            skipped[name] = e.message
            continue
        bounds[name] = BoundEntry(
            value=RationalValue.from_fraction(result.value),
            family_restricted=result.family_restricted,
            description=BOUND_DESCRIPTIONS[name],
        )
        logger.info(f"{name} = {result.value}{' (restricted family)' if result.family_restricted else ''}")
    return bounds, skipped


# -------------------
# BOUNDS COMMAND
# -------------------
@router.command("bounds")
def bounds(
        input: InputOption,
        enable: Annotated[Optional[str], typer.Option("--enable", help="Comma-separated bound names")] = None,
        max_subset_size: MaxSubsetOption = None,
        oracle_limit: OracleLimitOption = None,
        depth_cap: DepthCapOption = None,
        structure: StructureOption = None,
        seed: SeedOption = 0,
        out: OutOption = None,
        no_timings: NoTimingsOption = False,
        log_level: LogLevelOption = None,
):
    """Compute exact rational bounds on the broadcast rate."""
    configure_logging(log_level)
    names = parse_enabled(enable)
    g = load_graph(input)
    options = BoundOptions(max_subset_size, oracle_limit, depth_cap, load_structures(g, structure))
    watch = Stopwatch()
    computed, skipped = collect_bounds(g, names, options, watch)
    report = BoundsReport(
        version=TOOL_VERSION,
        seed=seed,
        graph=graph_meta(g, input),
        bounds=computed,
        skipped=skipped,
        timings_ms=None if no_timings else watch.timings,
    )
    emit(report.to_json(), out)
