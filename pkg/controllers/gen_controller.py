"""
`icx gen`: write generated graphs as .sig files.
"""
import logging
from pathlib import Path
from typing import Annotated

import typer

from analysis.geometry import generate_udg, read_point_cloud
from controllers.common import LogLevelOption, OutOption, SeedOption, configure_logging, emit
from graph import generators
from graph.sig_format import write_sig

logger = logging.getLogger(__name__)
router = typer.Typer(help="Generate side-information graphs.", no_args_is_help=True)

CountOption = Annotated[int, typer.Option("--n", min=1, help="Number of vertices")]


@router.command("udg")
def udg(
        points: Annotated[Path, typer.Option("--points", help="Point file with 'p x y' lines")],
        radius: Annotated[str, typer.Option("--radius", help="Disk radius as a decimal or p/q")],
        out: OutOption = None,
        log_level: LogLevelOption = None,
):
    """Unit disk graph: an edge whenever two disks meet."""
    configure_logging(log_level)
    g = generate_udg(read_point_cloud(points), radius)
    emit(write_sig(g, comment=f"unit disk graph of {points.name}, radius {radius}"), out)


@router.command("cycle")
def cycle(
        n: CountOption,
        directed: Annotated[bool, typer.Option("--directed", help="One arc per step instead of an edge")] = False,
        out: OutOption = None,
        log_level: LogLevelOption = None,
):
    configure_logging(log_level)
    emit(write_sig(generators.cycle(n, directed)), out)


@router.command("clique")
def clique(n: CountOption, out: OutOption = None, log_level: LogLevelOption = None):
    configure_logging(log_level)
    emit(write_sig(generators.clique(n)), out)


@router.command("random")
def random(
        n: CountOption,
        p: Annotated[float, typer.Option("--p", min=0.0, max=1.0, help="Edge probability")] = 0.5,
        seed: SeedOption = 0,
        directed: Annotated[bool, typer.Option("--directed", help="Draw each arc independently")] = False,
        out: OutOption = None,
        log_level: LogLevelOption = None,
):
    """Seeded G(n, p)."""
    configure_logging(log_level)
    g = generators.random_graph(n, p, seed, directed)
    emit(write_sig(g, comment=f"random graph n={n} p={p} seed={seed}"), out)
