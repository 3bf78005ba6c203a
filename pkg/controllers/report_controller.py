"""
`icx report`: bounds, family checks and optional code certificates in one document.
"""
import logging
from pathlib import Path
from typing import Annotated, List, Optional

import typer

from analysis.family_report import FamilyHints, family_report
from analysis.geometry import exact, lambda_precision, read_point_cloud
from coding.code_builder import code_for_scheme
from coding.gic import whole_graph_candidates
from constants import TOOL_VERSION
from controllers.bounds_controller import BoundOptions, collect_bounds, load_structures, parse_enabled
from controllers.code_controller import Scheme
from controllers.common import (
    DepthCapOption,
    FieldOption,
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
)
from models.report import BoundsReport
from utils.exceptions import InputException

logger = logging.getLogger(__name__)
router = typer.Typer()


def _hints(chromatic: Optional[int], udg: bool, lam: Optional[str], points: Optional[Path],
           radius: Optional[str], planar: bool, outerplanar: bool) -> FamilyHints:
    lam_squared = exact(lam) ** 2 if lam is not None else None
    if points is not None:
        if radius is None:
            raise InputException("--points needs --radius")
        # distances measured in radii so that the disks have unit radius
        measured = lambda_precision(read_point_cloud(points)) / exact(radius) ** 2
        lam_squared = measured if lam_squared is None else min(lam_squared, measured)
        udg = True
    return FamilyHints(chromatic=chromatic, is_udg=udg, lam_squared=lam_squared, planar=planar,
                       outerplanar=outerplanar)


# -------------------
# REPORT COMMAND
# -------------------
@router.command("report")
def report(
        input: InputOption,
        enable: Annotated[Optional[str], typer.Option("--enable", help="Comma-separated bound names")] = None,
        scheme: Annotated[Optional[List[Scheme]], typer.Option("--scheme", help="Also build a code (repeatable)")] = None,
        field: FieldOption = None,
        structure: StructureOption = None,
        chromatic: Annotated[Optional[int], typer.Option("--chromatic", min=1, help="Asserted color count")] = None,
        udg: Annotated[bool, typer.Option("--udg", help="The graph is a unit disk graph")] = False,
        lam: Annotated[Optional[str], typer.Option("--lambda", help="Lambda-precision of the disk centres")] = None,
        points: Annotated[Optional[Path], typer.Option("--points", help="Disk centres the graph came from")] = None,
        radius: Annotated[Optional[str], typer.Option("--radius", help="Disk radius used with --points")] = None,
        planar: Annotated[bool, typer.Option("--planar", help="The graph is planar")] = False,
        outerplanar: Annotated[bool, typer.Option("--outerplanar", help="The graph is outerplanar")] = False,
        max_subset_size: MaxSubsetOption = None,
        oracle_limit: OracleLimitOption = None,
        depth_cap: DepthCapOption = None,
        seed: SeedOption = 0,
        out: OutOption = None,
        no_timings: NoTimingsOption = False,
        log_level: LogLevelOption = None,
):
    """Bounds, family checks and certificates for one graph."""
    configure_logging(log_level)
    names = parse_enabled(enable)
    hints = _hints(chromatic, udg, lam, points, radius, planar, outerplanar)
    g = load_graph(input)
    structures = load_structures(g, structure)
    options = BoundOptions(max_subset_size, oracle_limit, depth_cap, structures)

    watch = Stopwatch()
    computed, skipped = collect_bounds(g, names, options, watch, skip_over_budget=True)
    with watch.stage("family_report"):
        families = family_report(g, hints, oracle_limit)

    certificates = []
    for chosen in scheme or []:
        with watch.stage(f"code_{chosen.value}"):
            candidates = (structures or whole_graph_candidates(g)) if chosen is Scheme.gic else None
            certificates.append(code_for_scheme(g, chosen.value, p_hint=field, seed=seed, structures=candidates,
                                                max_subset_size=max_subset_size, depth_cap=depth_cap))

    document = BoundsReport(
        version=TOOL_VERSION,
        seed=seed,
        graph=graph_meta(g, input),
        bounds=computed,
        skipped=skipped,
        certificates=certificates,
        family_report=families,
        timings_ms=None if no_timings else watch.timings,
    )
    emit(document.to_json(), out)
