"""
`icx gic`: validate a generalized interlinked cycle structure and build its code.
"""
import logging
from pathlib import Path
from typing import Annotated, Optional

import orjson
import typer

from coding.code_builder import certificate_from_gic
from coding.gic import structure_document, whole_graph_candidates
from controllers.bounds_controller import load_structures
from controllers.common import (
    FieldOption,
    InputOption,
    LogLevelOption,
    OutOption,
    SeedOption,
    configure_logging,
    emit,
    load_graph,
)
from utils.exceptions import ConstructionException

logger = logging.getLogger(__name__)
router = typer.Typer()


@router.command("gic")
def gic(
        input: InputOption,
        structure: Annotated[Optional[Path], typer.Option("--structure", help="Structure file; "
                                                          "default is every vertex inner")] = None,
        field: FieldOption = None,
        build: Annotated[bool, typer.Option("--code/--no-code", help="Also build the verified certificate")] = True,
        seed: SeedOption = 0,
        out: OutOption = None,
        log_level: LogLevelOption = None,
):
    """Print the validated structure (1-based trees), its rate and optionally its certificate."""
    configure_logging(log_level)
    g = load_graph(input)
    if structure is not None:
        found = load_structures(g, [structure])
    else:
        found = whole_graph_candidates(g)
    if not found:
        raise ConstructionException("no GIC structure with every vertex inner validates on this graph",
                                    {"n": g.n})
    s = found[0]
    logger.info(f"GIC structure: {len(s.inner)} inner vertices, k = {s.k}, {len(s.relays)} relays, rate {s.rate}")

    payload = {"structure": structure_document(s).model_dump(), "rate": s.rate}
    if build:
        payload["certificate"] = certificate_from_gic(g, s, field, seed).model_dump()
    emit(orjson.dumps(payload, option=orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2), out)
