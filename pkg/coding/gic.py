"""
(k, n1) generalized interlinked cycles.

A structure is an inner vertex set V_I plus, for every inner root, a tree of
inner-avoiding paths to other inner vertices. Non-inner tree vertices are
relays. The broadcast sends one MDS combination of the inner messages and a
short block per relay; every client decodes linearly from its side
information.
"""
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np
import orjson
from pydantic import ValidationError

from coding.gf_linear import mds_matrix, prime_field, random_mds, solve_linear, to_ints
from config.settings import get_settings
from graph.side_info_graph import SideInfoGraph, VertexSet, iter_bits, mask_of, vertex_set
from models.gic_structure import GicStructureFile
from solvers.ic_lps import BoundValue
from solvers.rational_lp import GE, MINIMIZE, LpProblem, solve
from utils.exceptions import (
    BudgetExceededException,
    ConstructionException,
    DimensionMismatchException,
    InputException,
    InternalInvariantError,
)

logger = logging.getLogger(__name__)

PROPERTY_K_RANGE = "k-range"
PROPERTY_LEAF_COUNT = "leaf-count"
PROPERTY_PATH_UNIQUENESS = "path-uniqueness"
PROPERTY_RELAY_ACYCLIC = "relay-acyclic"
PROPERTY_SINGLE_INNER_CYCLE = "single-inner-cycle"
PROPERTY_SUBTREE_CONSISTENCY = "subtree-consistency"


@dataclass
class GicViolation:
    property: str
    vertex: Optional[int]
    detail: str


@dataclass
class GicStructure:
    g: SideInfoGraph
    inner: VertexSet
    k: int
    trees: Dict[int, Dict[int, int]]  # root -> {vertex: parent}
    d_out: Dict[int, VertexSet]  # out-neighbours in the union digraph D
    relays: VertexSet
    relay_order: VertexSet  # every relay after all of its D-out-neighbours
    _children: Dict[int, Dict[int, VertexSet]] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        for root, parents in self.trees.items():
            kids = defaultdict(list)
            for v, p in parents.items():
                kids[p].append(v)
            self._children[root] = {v: tuple(sorted(c)) for v, c in kids.items()}

    @property
    def vertices(self) -> VertexSet:
        return tuple(sorted(set(self.inner) | set(self.relays)))

    def children(self, root: int, v: int) -> VertexSet:
        return self._children[root].get(v, ())

    def leaves(self, root: int) -> VertexSet:
        inner = mask_of(self.inner)
        return tuple(sorted(v for v in self.trees[root] if inner >> v & 1))

    def subtree_relays(self, root: int, v: int) -> List[int]:
        """Non-inner vertices of the subtree of T_root hanging from v (v included)."""
        inner = mask_of(self.inner)
        found, stack = [], [v]
        while stack:
            u = stack.pop()
            if inner >> u & 1:
                continue
            found.append(u)
            stack.extend(self.children(root, u))
        return found

    def relay_width(self, j: int) -> int:
        return min(len(self.d_out[j]), self.k + 1)

    @property
    def rate(self) -> int:
        return self.k + 1 + sum(self.relay_width(j) for j in self.relays)


# -------------------
# Validation
# -------------------
def _tree(g: SideInfoGraph, root: int, inner_mask: int) -> Dict[int, int]:
    """Depth-first tree of inner-avoiding paths from root, pruned to branches ending in inner leaves."""
    parent: Dict[int, int] = {}
    visited = 1 << root

    def dfs(v: int) -> None:
        nonlocal visited
        for u in iter_bits(g.out_mask(v)):
            if visited >> u & 1:
                continue
            visited |= 1 << u
            parent[u] = v
            if not inner_mask >> u & 1:
                dfs(u)

    dfs(root)
    keep = {u for u in parent if inner_mask >> u & 1}
    for u in list(keep):
        w = parent[u]
        while w != root and w not in keep:
            keep.add(w)
            w = parent[w]
    return {u: parent[u] for u in sorted(keep)}


def _count_paths(d_out: Dict[int, VertexSet], source: int, inner_mask: int, budget: int) -> Dict[int, int]:
    counts: Dict[int, int] = defaultdict(int)
    explored = 0
    stack = [(source, 1 << source)]
    while stack:
        v, on_path = stack.pop()
        for u in d_out.get(v, ()):
            if on_path >> u & 1:
                continue
            explored += 1
            if explored > budget:
                raise BudgetExceededException("inner-avoiding path enumeration", budget)
            if inner_mask >> u & 1:
                counts[u] += 1
            else:
                stack.append((u, on_path | 1 << u))
    return counts


def validate_gic(g: SideInfoGraph, inner: Sequence[int], k: int,
                 path_budget: Optional[int] = None) -> Union[GicStructure, GicViolation]:
    """
    Build the trees T_i and the digraph D, then check the structure.

    Checks run in order: k range, leaf count, path uniqueness in D, D minus
    the inner set acyclic, no cycle through a single inner vertex, and
    agreement of shared relays across trees.

    Args:
        g: Graph
        inner: Inner vertex set (0-based)
        k: Deficiency parameter
        path_budget: Paths explored per source before giving up

    Returns:
        GicStructure when valid, otherwise the first GicViolation
    """
    inner = vertex_set(inner, g.n)
    if not inner:
        raise InputException("the inner vertex set must not be empty")
    n1 = len(inner)
    if not 0 <= k <= n1 - 1:
        return GicViolation(PROPERTY_K_RANGE, None, f"k must lie in 0..{n1 - 1}, got {k}")
    budget = get_settings().path_budget if path_budget is None else path_budget
    inner_mask = mask_of(inner)

    trees = {root: _tree(g, root, inner_mask) for root in inner}
    for root in inner:
        leaves = sum(1 for v in trees[root] if inner_mask >> v & 1)
        if leaves < n1 - k - 1:
            return GicViolation(PROPERTY_LEAF_COUNT, root,
                                f"tree of vertex {root + 1} reaches {leaves} inner vertices, needs {n1 - k - 1}")

    out_sets: Dict[int, set] = defaultdict(set)
    for parents in trees.values():
        for v, p in parents.items():
            out_sets[p].add(v)
    d_out = {v: tuple(sorted(s)) for v, s in out_sets.items()}

    for root in inner:
        for target, count in sorted(_count_paths(d_out, root, inner_mask, budget).items()):
            if count > 1:
                return GicViolation(PROPERTY_PATH_UNIQUENESS, root,
                                    f"{count} inner-avoiding paths from {root + 1} to {target + 1}")

    d = nx.DiGraph()
    d.add_nodes_from(set(inner) | {v for parents in trees.values() for v in parents})
    d.add_edges_from((v, u) for v, outs in d_out.items() for u in outs)
    relays = tuple(sorted(v for v in d.nodes if not inner_mask >> v & 1))
    relay_graph = d.subgraph(relays)
    if not nx.is_directed_acyclic_graph(relay_graph):
        cycle = [u for u, _ in nx.find_cycle(relay_graph)]
        return GicViolation(PROPERTY_RELAY_ACYCLIC, cycle[0], f"relay cycle {[u + 1 for u in cycle]}")

    for root in inner:
        allowed = d.subgraph([v for v in d.nodes if v == root or not inner_mask >> v & 1])
        if any(nx.has_path(allowed, u, root) for u in allowed.successors(root)):
            return GicViolation(PROPERTY_SINGLE_INNER_CYCLE, root,
                                f"a cycle of D meets the inner set only at {root + 1}")

    for root, parents in trees.items():
        kids = defaultdict(set)
        for v, p in parents.items():
            kids[p].add(v)
        for v in parents:
            if not inner_mask >> v & 1 and tuple(sorted(kids[v])) != d_out.get(v, ()):
                return GicViolation(PROPERTY_SUBTREE_CONSISTENCY, v,
                                    f"relay {v + 1} has different children in the tree of {root + 1} and in D")

    order = tuple(reversed(list(nx.lexicographical_topological_sort(relay_graph))))
    logger.debug(f"GIC valid: inner={[v + 1 for v in inner]}, k={k}, relays={[v + 1 for v in relays]}")
    return GicStructure(g, inner, k, trees, d_out, relays, order)


def require_structure(s) -> GicStructure:
    if not isinstance(s, GicStructure):
        raise InputException("GIC structure has not been validated")
    return s


# -------------------
# Vectors, encoder, decoder
# -------------------
def algorithm1_vectors(s: GicStructure, p: int, rng: Optional[np.random.Generator] = None) -> Dict[int, object]:
    """
    Inner vertices get the columns of an (k+1) x n1 MDS matrix; each relay,
    once its D-out-neighbours are assigned, gets minus their sum.
    """
    s = require_structure(s)
    n1 = len(s.inner)
    mds = mds_matrix(n1, s.k + 1, p) if rng is None else random_mds(n1, s.k + 1, p, rng)
    u = {v: mds[:, idx] for idx, v in enumerate(s.inner)}
    field_type = prime_field(p)
    for j in s.relay_order:
        total = field_type.Zeros(s.k + 1)
        for c in s.d_out[j]:
            total = total + u[c]
        u[j] = -total
    return u


def _degenerate_relays(s: GicStructure, u: Dict[int, object]) -> List[int]:
    return [j for j in s.relays if len(s.d_out[j]) >= s.k + 1 and not np.any(to_ints(u[j]))]


def gic_vectors(s: GicStructure, p: int, seed: Optional[int] = None) -> Dict[int, object]:
    """algorithm1_vectors with fresh nodes until no wide relay has a zero vector."""
    u = algorithm1_vectors(s, p)
    rng = np.random.default_rng(seed)
    attempts = get_settings().node_attempts
    for _ in range(attempts):
        bad = _degenerate_relays(s, u)
        if not bad:
            return u
        logger.debug(f"relays {[j + 1 for j in bad]} got zero vectors over GF({p}); redrawing nodes")
        u = algorithm1_vectors(s, p, rng)
    if _degenerate_relays(s, u):
        raise ConstructionException(f"no usable GIC vectors over GF({p})", {"modulus": p, "attempts": attempts + 1})
    return u


@dataclass
class GicBroadcast:
    p: int
    vectors: Dict[int, object]
    w_inner: object
    w_relays: Dict[int, object]

    @property
    def symbols(self) -> int:
        return len(self.w_inner) + sum(len(w) for w in self.w_relays.values())


def gic_encode(s: GicStructure, messages: Sequence[int], p: int,
               vectors: Optional[Dict[int, object]] = None) -> GicBroadcast:
    s = require_structure(s)
    if len(messages) != s.g.n:
        raise DimensionMismatchException(f"expected {s.g.n} messages, got {len(messages)}")
    field_type = prime_field(p)
    u = gic_vectors(s, p) if vectors is None else vectors
    x = field_type(np.mod(np.asarray(messages, dtype=np.int64), p))

    w_inner = field_type.Zeros(s.k + 1)
    for i in s.inner:
        w_inner = w_inner + u[i] * x[i]
    w_relays = {}
    for j in s.relays:
        outs = s.d_out[j]
        if len(outs) >= s.k + 1:
            w = field_type.Zeros(s.k + 1)
            for c in outs:
                w = w + u[c] * (x[j] + x[c])
        else:
            w = x[j] + x[list(outs)]
        w_relays[j] = w
    return GicBroadcast(p, u, w_inner, w_relays)


def side_information(g: SideInfoGraph, messages: Sequence[int]) -> Dict[int, Dict[int, int]]:
    return {v: {u: int(messages[u]) for u in iter_bits(g.out_mask(v))} for v in range(g.n)}


def gic_decode(s: GicStructure, broadcast: GicBroadcast, side_info: Dict[int, Dict[int, int]]) -> Dict[int, int]:
    """
    Every structure vertex recovers its message.

    Relays read their own block. An inner vertex strips what it knows from
    w_I, cancels each relay child's subtree sum, and solves for its own
    symbol against the at most k inner messages left.
    """
    s = require_structure(s)
    field_type = prime_field(broadcast.p)
    u = broadcast.vectors
    inner_mask = mask_of(s.inner)

    def known(v: int, c: int):
        try:
            return field_type(side_info[v][c] % broadcast.p)
        except KeyError:
            raise InternalInvariantError(f"vertex {v + 1} needs message {c + 1} but does not know it")

    def w_prime(j: int):
        outs = s.d_out[j]
        w = broadcast.w_relays[j]
        if len(outs) >= s.k + 1:
            return w
        total = field_type.Zeros(s.k + 1)
        for t, c in enumerate(outs):
            total = total + u[c] * w[t]
        return total

    recovered: Dict[int, int] = {}
    for j in s.relays:
        outs = s.d_out[j]
        w = broadcast.w_relays[j]
        if len(outs) < s.k + 1:
            recovered[j] = int(w[0] - known(j, outs[0]))
            continue
        rhs = w
        for c in outs:
            rhs = rhs - u[c] * known(j, c)
        coefficient = -u[j]
        nonzero = np.nonzero(to_ints(coefficient))[0]
        if nonzero.size == 0:
            raise InternalInvariantError(f"relay {j + 1} has a zero decoding coefficient")
        t = int(nonzero[0])
        recovered[j] = int(rhs[t] / coefficient[t])

    for i in s.inner:
        acc = broadcast.w_inner.copy()
        for c in s.children(i, i):
            xc = known(i, c)
            if inner_mask >> c & 1:
                acc = acc - u[c] * xc
                continue
            subtree = field_type.Zeros(s.k + 1)
            for l in s.subtree_relays(i, c):
                subtree = subtree + w_prime(l)
            acc = acc - (subtree + u[c] * xc)
        leaves = set(s.leaves(i))
        unknown = [l for l in s.inner if l != i and l not in leaves]
        columns = np.column_stack([to_ints(u[i])] + [to_ints(u[l]) for l in unknown])
        solution = solve_linear(field_type(columns), acc.reshape(-1, 1))
        if solution is None:
            raise InternalInvariantError(f"inner vertex {i + 1} cannot solve for its message")
        recovered[i] = int(solution[0, 0])
    return recovered


# -------------------
# Covers and candidates
# -------------------
def gic_cover_bound(g: SideInfoGraph, candidates: Sequence[GicStructure]) -> BoundValue:
    """min sum rate(s) * rho_s over candidate structures and singletons, every vertex covered."""
    problem = LpProblem(MINIMIZE, name="gic")
    covering: Dict[int, Dict[str, Fraction]] = defaultdict(dict)
    for idx, s in enumerate(candidates):
        s = require_structure(s)
        if s.g != g:
            raise DimensionMismatchException("candidate structure belongs to a different graph")
        name = problem.add_variable(f"gic_{idx}", cost=s.rate)
        for v in s.vertices:
            covering[v][name] = Fraction(1)
    for v in range(g.n):
        name = problem.add_variable(f"single_{v}", cost=1)
        covering[v][name] = Fraction(1)
        problem.add_constraint(covering[v], GE, 1, name=f"cover_{v}")
    solution = solve(problem)
    if not solution.optimal:
        raise InternalInvariantError(f"GIC cover LP is {solution.status}")
    logger.debug(f"gic = {solution.value} over {len(candidates)} candidates")
    return BoundValue("gic", solution.value, solution, witness=list(candidates))


def whole_graph_candidates(g: SideInfoGraph) -> List[GicStructure]:
    """The structure with every vertex inner, at the smallest k that validates (if any)."""
    for k in range(g.n):
        result = validate_gic(g, range(g.n), k)
        if isinstance(result, GicStructure):
            return [result]
        if result.property != PROPERTY_LEAF_COUNT:
            return []
    return []


def relay_instance(seed: int, n_inner: int = 4, n_relays: int = 2) -> Tuple[SideInfoGraph, VertexSet, int]:
    """
    Random graph with a valid structure: inner vertices 0..n_inner-1 and
    relays after them. Each relay hangs off one inner parent and points at
    inner vertices its parent reaches no other way.

    Returns:
        (graph, inner set, smallest valid k)
    """
    if n_inner < 2 or n_relays < 0:
        raise InputException("need at least 2 inner vertices and a non-negative relay count")
    rng = np.random.default_rng(seed)
    n = n_inner + n_relays
    pools = {i: [int(j) for j in rng.permutation([j for j in range(n_inner) if j != i])] for i in range(n_inner)}
    reached = [0] * n_inner
    arcs = []
    for r in range(n_inner, n):
        parents = [i for i in range(n_inner) if pools[i]]
        if not parents:
            raise InputException(f"{n_inner} inner vertices cannot host {n_relays} relays")
        parent = parents[int(rng.integers(len(parents)))]
        take = int(rng.integers(1, len(pools[parent]) + 1))
        children, pools[parent] = pools[parent][:take], pools[parent][take:]
        arcs.append((parent, r))
        arcs.extend((r, c) for c in children)
        reached[parent] += len(children)
    for i in range(n_inner):
        for j in pools[i]:
            if rng.random() < 0.5:
                arcs.append((i, j))
                reached[i] += 1
    g = SideInfoGraph.from_arcs(n, arcs)
    return g, tuple(range(n_inner)), n_inner - 1 - min(reached)


# -------------------
# Structure files
# -------------------
def structure_document(s: GicStructure) -> GicStructureFile:
    """1-based file form; parent arrays hold 0 for vertices outside a tree."""
    parents = {}
    for root, tree in s.trees.items():
        row = [0] * s.g.n
        for v, p in tree.items():
            row[v] = p + 1
        parents[str(root + 1)] = row
    return GicStructureFile(inner=[v + 1 for v in s.inner], k=s.k, parents=parents)


def read_structure(path: Union[str, Path]) -> GicStructureFile:
    path = Path(path)
    try:
        return GicStructureFile.model_validate(orjson.loads(path.read_bytes()))
    except OSError as e:
        raise InputException(f"cannot read structure file {path}: {e.strerror}")
    except orjson.JSONDecodeError as e:
        raise InputException(f"structure file {path} is not valid JSON: {e}")
    except ValidationError as e:
        raise InputException(f"invalid structure file {path}: {e.errors()[0]['msg']}")


def validate_document(g: SideInfoGraph, doc: GicStructureFile) -> Union[GicStructure, GicViolation]:
    """Validate a structure file's inner set and k against g; stored trees are recomputed."""
    if any(not 1 <= v <= g.n for v in doc.inner):
        raise InputException(f"inner vertex out of range 1..{g.n}")
    return validate_gic(g, [v - 1 for v in doc.inner], doc.k)
