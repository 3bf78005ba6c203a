"""
Reader and writer for the .sig side-information graph format.

    # comment
    n 5
    undirected          (optional, before any edge)
    e 1 2               (client 1 knows message 2; 1-based)
"""
from pathlib import Path
from typing import List, Optional, Tuple, Union

from graph.side_info_graph import SideInfoGraph
from utils.exceptions import InputException, ParseException


def parse_sig(text: str, source: Optional[str] = None) -> SideInfoGraph:
    """
    Parse .sig text into a graph.

    Args:
        text: File contents
        source: Name used in error messages

    Returns:
        SideInfoGraph with 0-based indices
    """
    n = None
    undirected = False
    arcs: List[Tuple[int, int]] = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        directive = tokens[0]

        if directive == "n":
            if n is not None:
                raise ParseException(line_no, "duplicate 'n' directive", source)
            if len(tokens) != 2:
                raise ParseException(line_no, "expected 'n <count>'", source)
            n = _parse_int(tokens[1], line_no, source)
            if n < 1:
                raise ParseException(line_no, f"vertex count must be positive, got {n}", source)
        elif directive == "undirected":
            if n is None:
                raise ParseException(line_no, "'undirected' before 'n'", source)
            if arcs:
                raise ParseException(line_no, "'undirected' must precede all edges", source)
            if len(tokens) != 1:
                raise ParseException(line_no, "'undirected' takes no arguments", source)
            undirected = True
        elif directive == "e":
            if n is None:
                raise ParseException(line_no, "edge before 'n' directive", source)
            if len(tokens) != 3:
                raise ParseException(line_no, "expected 'e <i> <j>'", source)
            i = _parse_int(tokens[1], line_no, source)
            j = _parse_int(tokens[2], line_no, source)
            if not (1 <= i <= n and 1 <= j <= n):
                raise ParseException(line_no, f"vertex out of range 1..{n}", source)
            if i == j:
                raise ParseException(line_no, f"self-loop at vertex {i}", source)
            arcs.append((i - 1, j - 1))
        else:
            raise ParseException(line_no, f"unknown directive '{directive}'", source)

    if n is None:
        raise ParseException(0, "missing 'n <count>' directive", source)
    try:
        return SideInfoGraph.from_arcs(n, arcs, undirected=undirected)
    except InputException as e:
        raise ParseException(0, e.message, source)


def _parse_int(token: str, line_no: int, source: Optional[str]) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseException(line_no, f"expected an integer, got '{token}'", source)


def read_sig(path: Union[str, Path]) -> SideInfoGraph:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise InputException(f"cannot read graph file {path}: {e.strerror}")
    return parse_sig(text, source=str(path))


def write_sig(g: SideInfoGraph, comment: Optional[str] = None) -> str:
    """Canonical .sig text for g (undirected graphs list each edge once)."""
    lines = []
    if comment:
        lines.extend(f"# {part}" for part in comment.splitlines())
    lines.append(f"n {g.n}")
    if g.is_undirected:
        lines.append("undirected")
        pairs = g.edges()
    else:
        pairs = g.arcs()
    lines.extend(f"e {i + 1} {j + 1}" for i, j in pairs)
    return "\n".join(lines) + "\n"
