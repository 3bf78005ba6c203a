"""
Directed side-information graphs.

Vertex i is a client; an arc (i, j) means client i already holds message j.
Undirected graphs are stored as bidirected digraphs. Adjacency is kept as
one Python-int bitset per vertex, so vertex sets are cheap to intersect.
"""
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from config.settings import get_settings
from utils.exceptions import InputException

VertexSet = Tuple[int, ...]


def vertex_set(members: Iterable[int], n: Optional[int] = None) -> VertexSet:
    """
    Normalize members into a sorted duplicate-free vertex set.

    Args:
        members: Vertex indices in any order
        n: If given, every index must lie in [0, n)

    Returns:
        Sorted tuple of distinct indices
    """
    result = tuple(sorted(set(int(v) for v in members)))
    if n is not None and result and (result[0] < 0 or result[-1] >= n):
        raise InputException(f"vertex index out of range for a graph on {n} vertices: {list(result)}")
    return result


def mask_of(members: Iterable[int]) -> int:
    mask = 0
    for v in members:
        mask |= 1 << v
    return mask


def members_of(mask: int) -> VertexSet:
    result = []
    v = 0
    while mask:
        if mask & 1:
            result.append(v)
        mask >>= 1
        v += 1
    return tuple(result)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class SideInfoGraph:
    """Immutable directed graph on vertices 0..n-1."""

    __slots__ = ("n", "_out", "_in", "_undirected")

    def __init__(self, n: int, out_masks: Sequence[int]):
        if n < 1:
            raise InputException(f"a side-information graph needs at least one vertex, got n={n}")
        limit = get_settings().max_vertices
        if n > limit:
            raise InputException(f"graphs are limited to {limit} vertices, got n={n}")
        if len(out_masks) != n:
            raise InputException(f"expected {n} adjacency rows, got {len(out_masks)}")
        full = (1 << n) - 1
        for v, mask in enumerate(out_masks):
            if mask & ~full or mask < 0:
                raise InputException(f"vertex {v + 1} has a neighbor outside 1..{n}")
            if mask >> v & 1:
                raise InputException(f"self-loop at vertex {v + 1}")
        self.n = n
        self._out = tuple(out_masks)
        in_masks = [0] * n
        for v, mask in enumerate(self._out):
            for u in iter_bits(mask):
                in_masks[u] |= 1 << v
        self._in = tuple(in_masks)
        self._undirected = self._out == self._in

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[Tuple[int, int]], undirected: bool = False) -> "SideInfoGraph":
        """
        Build a graph from 0-based arcs.

        Args:
            n: Vertex count
            arcs: Pairs (i, j) meaning client i knows message j
            undirected: Insert both directions of every pair

        Returns:
            SideInfoGraph
        """
        out = [0] * n
        for i, j in arcs:
            if not (0 <= i < n and 0 <= j < n):
                raise InputException(f"arc ({i + 1}, {j + 1}) out of range for n={n}")
            if i == j:
                raise InputException(f"self-loop at vertex {i + 1}")
            out[i] |= 1 << j
            if undirected:
                out[j] |= 1 << i
        return cls(n, out)

    @classmethod
    def from_adjacency(cls, out_adj: Sequence[Iterable[int]]) -> "SideInfoGraph":
        return cls(len(out_adj), [mask_of(row) for row in out_adj])

    # ---- basic queries ----

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def out_adj(self) -> Tuple[VertexSet, ...]:
        return tuple(members_of(mask) for mask in self._out)

    @property
    def is_undirected(self) -> bool:
        return self._undirected

    def out_mask(self, v: int) -> int:
        return self._out[v]

    def in_mask(self, v: int) -> int:
        return self._in[v]

    def has_arc(self, i: int, j: int) -> bool:
        return bool(self._out[i] >> j & 1)

    def arcs(self) -> List[Tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in iter_bits(self._out[i])]

    def edges(self) -> List[Tuple[int, int]]:
        """Undirected edges {i, j} with i < j; an arc in either direction counts."""
        return [(i, j) for i in range(self.n) for j in iter_bits((self._out[i] | self._in[i]) >> (i + 1) << (i + 1))]

    @property
    def arc_count(self) -> int:
        return sum(mask.bit_count() for mask in self._out)

    @property
    def edge_count(self) -> int:
        """Number of undirected edges for undirected graphs, arcs otherwise."""
        return self.arc_count // 2 if self._undirected else self.arc_count

    def degree(self, v: int) -> int:
        return (self._out[v] | self._in[v]).bit_count()

    @property
    def max_degree(self) -> int:
        return max(self.degree(v) for v in range(self.n))

    def closed_interference_mask(self, v: int) -> int:
        """Vertices whose messages v does not know, including v itself."""
        return self.full_mask & ~self._out[v]

    # ---- derived graphs ----

    def underlying_undirected(self) -> "SideInfoGraph":
        return SideInfoGraph(self.n, [self._out[v] | self._in[v] for v in range(self.n)])

    def bidirected_core(self) -> "SideInfoGraph":
        """Keep only the arcs present in both directions."""
        return SideInfoGraph(self.n, [self._out[v] & self._in[v] for v in range(self.n)])

    def to_networkx(self):
        """Return a networkx Graph for undirected graphs, DiGraph otherwise."""
        if self._undirected:
            h = nx.Graph()
            h.add_nodes_from(range(self.n))
            h.add_edges_from(self.edges())
        else:
            h = nx.DiGraph()
            h.add_nodes_from(range(self.n))
            h.add_edges_from(self.arcs())
        return h

    # ---- dunder ----

    def __eq__(self, other) -> bool:
        return isinstance(other, SideInfoGraph) and self.n == other.n and self._out == other._out

    def __hash__(self) -> int:
        return hash((self.n, self._out))

    def __repr__(self) -> str:
        kind = "undirected" if self._undirected else "directed"
        return f"SideInfoGraph(n={self.n}, {kind}, edges={self.edge_count})"


# -------------------
# Core operations
# -------------------
def complement(g: SideInfoGraph) -> SideInfoGraph:
    full = g.full_mask
    return SideInfoGraph(g.n, [full & ~g.out_mask(v) & ~(1 << v) for v in range(g.n)])


def induced(g: SideInfoGraph, s: Iterable[int]) -> SideInfoGraph:
    """
    Subgraph induced on s, relabeled 0..|s|-1 in increasing order.

    Args:
        g: Graph
        s: Vertex subset of g

    Returns:
        SideInfoGraph on |s| vertices
    """
    members = vertex_set(s, g.n)
    if not members:
        raise InputException("cannot induce a subgraph on an empty vertex set")
    position = {v: idx for idx, v in enumerate(members)}
    sub_mask = mask_of(members)
    out = []
    for v in members:
        row = 0
        for u in iter_bits(g.out_mask(v) & sub_mask):
            row |= 1 << position[u]
        out.append(row)
    return SideInfoGraph(len(members), out)


def out_neighborhood(g: SideInfoGraph, v: int) -> VertexSet:
    if not 0 <= v < g.n:
        raise InputException(f"vertex index {v} out of range for n={g.n}")
    return members_of(g.out_mask(v))


def deficiency_of_mask(g: SideInfoGraph, mask: int) -> int:
    size = mask.bit_count()
    min_degree = min((g.out_mask(v) & mask).bit_count() for v in iter_bits(mask))
    return size - 1 - min_degree


def partial_clique_deficiency(g: SideInfoGraph, s: Iterable[int]) -> int:
    """
    Smallest k such that s is a k-partial clique.

    Args:
        g: Graph
        s: Nonempty vertex subset

    Returns:
        |s| - 1 - min over v in s of |N(v) & s|
    """
    members = vertex_set(s, g.n)
    if not members:
        raise InputException("partial clique deficiency of an empty set is undefined")
    return deficiency_of_mask(g, mask_of(members))


def disjoint_union(g: SideInfoGraph, h: SideInfoGraph) -> SideInfoGraph:
    """Place h after g with no arcs between the parts."""
    return SideInfoGraph(g.n + h.n, list(g._out) + [mask << g.n for mask in h._out])


def join(g: SideInfoGraph, h: SideInfoGraph, mutual: bool = True) -> SideInfoGraph:
    """
    Place h after g and let every vertex of g know every message of h.

    Args:
        g: First part, vertices 0..g.n-1
        h: Second part, vertices g.n..g.n+h.n-1
        mutual: Also let every vertex of h know every message of g

    Returns:
        SideInfoGraph on g.n + h.n vertices
    """
    h_all = ((1 << h.n) - 1) << g.n
    g_all = (1 << g.n) - 1
    out = [mask | h_all for mask in g._out]
    out += [(mask << g.n) | (g_all if mutual else 0) for mask in h._out]
    return SideInfoGraph(g.n + h.n, out)
