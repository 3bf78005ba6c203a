"""
`icx code`: build and verify a vector-linear code for one scheme.
"""
import logging
from enum import Enum
from typing import Annotated

import typer

from coding.code_builder import code_for_scheme
from coding.gic import whole_graph_candidates
from controllers.bounds_controller import load_structures
from controllers.common import (
    DepthCapOption,
    FieldOption,
    InputOption,
    LogLevelOption,
    MaxSubsetOption,
    OutOption,
    SeedOption,
    StructureOption,
    configure_logging,
    emit,
    load_graph,
)

logger = logging.getLogger(__name__)
router = typer.Typer()


class Scheme(str, Enum):
    clique_cover = "clique-cover"
    local_partial = "local-partial"
    recursive = "recursive"
    gic = "gic"


# -------------------
# CODE COMMAND
# -------------------
@router.command("code")
def code(
        input: InputOption,
        scheme: Annotated[Scheme, typer.Option("--scheme", help="Coding scheme")] = Scheme.local_partial,
        field: FieldOption = None,
        structure: StructureOption = None,
        max_subset_size: MaxSubsetOption = None,
        depth_cap: DepthCapOption = None,
        seed: SeedOption = 0,
        out: OutOption = None,
        log_level: LogLevelOption = None,
):
    """Build a verified code certificate and print its rate."""
    configure_logging(log_level)
    g = load_graph(input)
    structures = None
    if scheme is Scheme.gic:
        structures = load_structures(g, structure) or whole_graph_candidates(g)
    cert = code_for_scheme(g, scheme.value, p_hint=field, seed=seed, structures=structures,
                           max_subset_size=max_subset_size, depth_cap=depth_cap)
    emit(cert.to_json(), out)
    typer.echo(f"rate {cert.rate.value} over GF({cert.modulus})", err=True)
