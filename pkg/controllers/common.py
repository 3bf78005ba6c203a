"""
Options and helpers shared by the command modules.
"""
import logging
import time
from contextlib import contextmanager
from pathlib import Path
from typing import Annotated, Dict, Iterator, List, Optional, Union

import typer

from config.settings import get_settings
from graph.sig_format import read_sig
from graph.side_info_graph import SideInfoGraph
from models.report import GraphMeta
from utils.logger import setup_logging

logger = logging.getLogger(__name__)

InputOption = Annotated[Path, typer.Option("--input", "-i", help="Side-information graph in .sig format")]
OutOption = Annotated[Optional[Path], typer.Option("--out", "-o", help="Write the output here instead of stdout")]
SeedOption = Annotated[int, typer.Option("--seed", help="Seed for every random choice")]
LogLevelOption = Annotated[Optional[str], typer.Option("--log-level", help="DEBUG, INFO, WARNING or ERROR")]
NoTimingsOption = Annotated[bool, typer.Option("--no-timings", help="Leave stage timings out of the report")]
MaxSubsetOption = Annotated[Optional[int], typer.Option("--max-subset-size", min=1,
                                                        help="Largest subset in the partial clique family")]
OracleLimitOption = Annotated[Optional[int], typer.Option("--oracle-limit", min=1,
                                                          help="Largest graph handed to the exact oracles")]
DepthCapOption = Annotated[Optional[int], typer.Option("--depth-cap", min=1, help="Recursive LP depth cap")]
FieldOption = Annotated[Optional[int], typer.Option("--field", help="Prime to try first for the code field")]
StructureOption = Annotated[Optional[List[Path]], typer.Option("--structure",
                                                               help="GIC structure file (repeatable)")]


def configure_logging(log_level: Optional[str]) -> None:
    settings = get_settings()
    setup_logging(log_level=log_level or settings.log_level, log_file=settings.log_file)


def load_graph(path: Path) -> SideInfoGraph:
    g = read_sig(path)
    logger.info(f"read {path}: n = {g.n}, {g.edge_count} edges, {'undirected' if g.is_undirected else 'directed'}")
    return g


def graph_meta(g: SideInfoGraph, path: Optional[Path] = None) -> GraphMeta:
    return GraphMeta(n=g.n, edge_count=g.edge_count, undirected=g.is_undirected,
                     source=path.name if path is not None else None)


def emit(payload: Union[bytes, str], out: Optional[Path]) -> None:
    """Write a document to --out or stdout, newline-terminated."""
    if isinstance(payload, bytes):
        payload = payload.decode()
    if not payload.endswith("\n"):
        payload += "\n"
    if out is None:
        typer.echo(payload, nl=False)
        return
    out.write_text(payload, encoding="utf-8")
    logger.info(f"wrote {out}")


def split_names(text: str) -> List[str]:
    return [name.strip() for name in text.split(",") if name.strip()]


class Stopwatch:
    """Milliseconds spent per named stage."""

    def __init__(self):
        self.timings: Dict[str, int] = {}

    @contextmanager
    def stage(self, name: str) -> Iterator[None]:
        start = time.perf_counter()
        try:
            yield
        finally:
            self.timings[name] = int((time.perf_counter() - start) * 1000)
