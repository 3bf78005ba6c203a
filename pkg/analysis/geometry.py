"""
Exact planar geometry for disk graphs.

Coordinates are stored as Fractions and every comparison is made on
squared distances, so no square root or float enters a decision.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import Iterable, Optional, Tuple, Union

import numpy as np

from graph.side_info_graph import SideInfoGraph
from utils.exceptions import InputException, ParseException

Point = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class PointCloud:
    points: Tuple[Point, ...]

    @classmethod
    def of(cls, points: Iterable[Tuple[object, object]]) -> "PointCloud":
        return cls(tuple((exact(x), exact(y)) for x, y in points))

    def __len__(self) -> int:
        return len(self.points)

    def translated(self, dx, dy) -> "PointCloud":
        dx, dy = exact(dx), exact(dy)
        return PointCloud(tuple((x + dx, y + dy) for x, y in self.points))


def exact(value) -> Fraction:
    """Fraction from an int, a Fraction or a decimal or "p/q" string; floats go through their repr."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        value = repr(value)
    try:
        return Fraction(str(value).strip())
    except ValueError:
        raise InputException(f"not a finite decimal coordinate: '{value}'")


def squared_distance(a: Point, b: Point) -> Fraction:
    return (a[0] - b[0]) ** 2 + (a[1] - b[1]) ** 2


# -------------------
# Point-cloud files
# -------------------
def parse_point_cloud(text: str, source: Optional[str] = None) -> PointCloud:
    """Lines 'p <x> <y>' with '#' comments."""
    points = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] != "p" or len(tokens) != 3:
            raise ParseException(line_no, "expected 'p <x> <y>'", source)
        try:
            points.append((exact(tokens[1]), exact(tokens[2])))
        except InputException as e:
            raise ParseException(line_no, e.message, source)
    return PointCloud(tuple(points))


def read_point_cloud(path: Union[str, Path]) -> PointCloud:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise InputException(f"cannot read point file {path}: {e.strerror}")
    return parse_point_cloud(text, source=str(path))


def write_point_cloud(cloud: PointCloud) -> str:
    return "".join(f"p {x} {y}\n" for x, y in cloud.points)


# -------------------
# Disk graphs
# -------------------
def generate_udg(cloud: PointCloud, radius) -> SideInfoGraph:
    """
    Intersection graph of equal disks centred at the points.

    Args:
        cloud: Disk centres
        radius: Common radius

    Returns:
        Undirected graph with an edge iff the disks intersect or touch
    """
    r = exact(radius)
    if r <= 0:
        raise InputException(f"radius must be positive, got {radius}")
    if not cloud.points:
        raise InputException("point cloud is empty")
    threshold = (2 * r) ** 2
    edges = [(i, j) for i, j in combinations(range(len(cloud)), 2)
             if squared_distance(cloud.points[i], cloud.points[j]) <= threshold]
    return SideInfoGraph.from_arcs(len(cloud), edges, undirected=True)


def lambda_precision(cloud: PointCloud) -> Fraction:
    """Smallest squared distance between two centres."""
    if len(cloud) < 2:
        raise InputException("lambda precision needs at least two points")
    return min(squared_distance(a, b) for a, b in combinations(cloud.points, 2))


def is_lambda_precise(cloud: PointCloud, lam) -> bool:
    return lambda_precision(cloud) >= exact(lam) ** 2


# -------------------
# Random clouds
# -------------------
def random_point_cloud(n: int, side, seed: int, resolution: int = 100) -> PointCloud:
    """n points on the 1/resolution grid of the square [0, side]^2."""
    if n < 1:
        raise InputException(f"point count must be positive, got {n}")
    steps = int(exact(side) * resolution)
    rng = np.random.default_rng(seed)
    coords = rng.integers(0, steps + 1, size=(n, 2))
    return PointCloud(tuple((Fraction(int(x), resolution), Fraction(int(y), resolution)) for x, y in coords))


def random_lambda_cloud(n: int, lam, side, seed: int, resolution: int = 100, max_draws: int = 100_000) -> PointCloud:
    """Like random_point_cloud, rejecting points closer than lam to an accepted one."""
    lam2 = exact(lam) ** 2
    steps = int(exact(side) * resolution)
    rng = np.random.default_rng(seed)
    points = []
    for _ in range(max_draws):
        if len(points) == n:
            break
        x, y = rng.integers(0, steps + 1, size=2)
        candidate = (Fraction(int(x), resolution), Fraction(int(y), resolution))
        if all(squared_distance(candidate, q) >= lam2 for q in points):
            points.append(candidate)
    if len(points) < n:
        raise InputException(f"could not place {n} points at distance {lam} in a square of side {side}")
    return PointCloud(tuple(points))
