"""
Vector-linear index codes from weighted subset covers, and the verifier.

Every construction is a plan of blocks. A block is either an MDS matrix
over one subset (k + 1 rows, one column per member) or a copy of a smaller
code. Realizing a plan over GF(p) draws each block, then mixes the stacked
block rows through a random Vandermonde matrix Phi down to the target
height. Vertices covered more often than needed lose their surplus columns.
Certainty comes from verify_certificate: each realization is checked and a
failing one is redrawn, first with fresh nodes and then over a larger prime.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, lcm
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import galois
import numpy as np

from coding.gf_linear import in_span, next_prime_above, prime_field, random_mds, rank, row_functional, to_ints
from coding.gic import GicStructure, gic_encode, gic_vectors, require_structure
from config.settings import get_settings
from constants import (
    SCHEME_CLIQUE_COVER,
    SCHEME_FRACTIONAL,
    SCHEME_GIC,
    SCHEME_INTEGRAL,
    SCHEME_RECURSIVE,
)
from graph.side_info_graph import SideInfoGraph, VertexSet, deficiency_of_mask, mask_of, vertex_set
from models.certificate import CodeCertificate
from solvers.ic_lps import BoundValue, fcc, integral_local_partial_rate, local_partial_lp, solution_weights
from solvers.rational_lp import LpSolution
from solvers.recursive_lp import CHOICE_SUB, KIND_LEAF, KIND_SINGLE, RecursiveLpTrace, RecursiveNode, recursive_lp
from solvers.subset_family import SubsetFamily
from utils.exceptions import (
    ConstructionException,
    DimensionMismatchException,
    InputException,
    InternalInvariantError,
)

logger = logging.getLogger(__name__)


@dataclass
class Verdict:
    passed: bool
    vertex: Optional[int] = None
    vector_index: Optional[int] = None
    reason: str = ""


@dataclass
class BlockSpec:
    vertices: VertexSet  # global ids
    rows: int
    sub: Optional["CodePlan"] = None  # None: MDS block over vertices


@dataclass
class CodePlan:
    vertices: VertexSet
    vectors_per_vertex: int
    height: int
    blocks: List[BlockSpec] = field(default_factory=list)

    @property
    def block_rows(self) -> int:
        return sum(b.rows for b in self.blocks)

    @property
    def widest(self) -> int:
        """Largest Vandermonde width needed anywhere in the plan."""
        widths = [self.block_rows] + [len(b.vertices) for b in self.blocks if b.sub is None]
        widths += [b.sub.widest for b in self.blocks if b.sub is not None]
        return max(widths)


# -------------------
# Planning
# -------------------
def _common_denominator(values: Sequence[Fraction]) -> int:
    return lcm(*(Fraction(v).denominator for v in values)) if values else 1


def weighted_plan(vertices: VertexSet, entries: Sequence[Tuple[VertexSet, Fraction, int, Optional[CodePlan]]],
                  value: Fraction, denominator_cap: Optional[int] = None) -> CodePlan:
    """
    Plan for a weighted cover.

    Args:
        vertices: Vertices the plan serves (global ids)
        entries: (subset, weight, k + 1, sub plan or None) per weighted subset
        value: LP value, the rate the plan must reach
        denominator_cap: Largest vectors-per-vertex count allowed

    Returns:
        CodePlan with N = lcm(weight denominators) * lcm(sub plan N) vectors per vertex
    """
    cap = get_settings().denominator_cap if denominator_cap is None else denominator_cap
    n_base = _common_denominator([w for _, w, _, _ in entries] + [value])
    n_sub = lcm(*(sub.vectors_per_vertex for _, _, _, sub in entries if sub is not None), 1)
    total = n_base * n_sub
    if total > cap:
        raise ConstructionException(
            f"{total} vectors per vertex exceeds the denominator cap {cap}; restrict the subset family",
            {"denominator": total, "cap": cap},
        )
    height = value * total
    if height.denominator != 1:
        raise InternalInvariantError(f"rate {value} times N={total} is not an integer")
    plan = CodePlan(tuple(vertices), total, int(height))
    for members, weight, rows, sub in entries:
        copies = int(weight * n_base) * n_sub
        if sub is not None:
            plan.blocks.extend(BlockSpec(members, sub.height, sub) for _ in range(copies // sub.vectors_per_vertex))
        else:
            plan.blocks.extend(BlockSpec(members, rows) for _ in range(copies))
    return plan


def _mds_entries(g: SideInfoGraph, weights: Dict[VertexSet, Fraction]):
    return [(members, w, deficiency_of_mask(g, mask_of(members)) + 1, None) for members, w in sorted(weights.items())]


def _node_plan(trace: RecursiveLpTrace, node: RecursiveNode, memo: Dict[Tuple[VertexSet, int], CodePlan]) -> CodePlan:
    key = (node.vertices, node.depth)
    if key in memo:
        return memo[key]
    if node.kind == KIND_SINGLE:
        plan = CodePlan(node.vertices, 1, 1, [BlockSpec(node.vertices, 1)])
    else:
        entries = []
        for local, weight in sorted(solution_weights(node.solution).items()):
            members = tuple(node.vertices[i] for i in local)
            rows = deficiency_of_mask(node.graph, mask_of(local)) + 1
            sub = None
            if node.kind != KIND_LEAF and node.choices.get(local) == CHOICE_SUB:
                sub = _node_plan(trace, trace.child(node, local), memo)
            entries.append((members, weight, rows, sub))
        plan = weighted_plan(node.vertices, entries, node.value)
    memo[key] = plan
    return plan


# -------------------
# Realization
# -------------------
def _realize(plan: CodePlan, p: int, rng: np.random.Generator) -> Tuple[List[int], np.ndarray]:
    """Owners and matrix (height x columns) of one random realization over GF(p)."""
    field_type = prime_field(p)
    quota = {v: plan.vectors_per_vertex for v in plan.vertices}
    phi = random_mds(plan.block_rows, plan.height, p, rng)
    owners: List[int] = []
    columns: List[np.ndarray] = []
    offset = 0
    for block in plan.blocks:
        if block.sub is None:
            block_owners = list(block.vertices)
            local = random_mds(len(block.vertices), block.rows, p, rng)
        else:
            block_owners, local_ints = _realize(block.sub, p, rng)
            local = field_type(local_ints)
        keep = []
        for c, v in enumerate(block_owners):
            if quota[v] > 0:
                quota[v] -= 1
                keep.append(c)
        if keep:
            mixed = phi[:, offset:offset + block.rows] @ local[:, keep]
            columns.append(to_ints(mixed))
            owners.extend(block_owners[c] for c in keep)
        offset += block.rows
    short = [v + 1 for v, left in quota.items() if left]
    if short:
        raise InternalInvariantError(f"vertices {short} received fewer than {plan.vectors_per_vertex} vectors")
    return owners, np.hstack(columns)


def _vertex_major(n: int, owners: List[int], matrix: np.ndarray) -> np.ndarray:
    order = [c for v in range(n) for c, owner in enumerate(owners) if owner == v]
    return matrix[:, order]


def loose_field_bound(g: SideInfoGraph, partial_cliques: Sequence[Sequence[int]], m: int) -> int:
    """max_j sum_{r=1}^{k_j+1} k_j C(n - n_j, m - r) C(n_j, r - 1) + n_j over the given partial cliques."""
    parts = []
    for s in partial_cliques:
        members = vertex_set(s, g.n)
        parts.append((len(members), deficiency_of_mask(g, mask_of(members))))
    return _loose_bound(g.n, parts, m)


def _safe_comb(a: int, b: int) -> int:
    return comb(a, b) if a >= 0 and 0 <= b <= a else 0


def _loose_bound(n: int, parts: Sequence[Tuple[int, int]], m: int) -> int:
    best = 0
    for n_j, k_j in parts:
        total = sum(k_j * _safe_comb(n - n_j, m - r) * _safe_comb(n_j, r - 1) for r in range(1, k_j + 2))
        best = max(best, total + n_j)
    return best


def _plan_base(n: int, plan: CodePlan) -> int:
    return max(n, plan.widest, plan.height)


def field_size_cap(n: int, plan: CodePlan) -> int:
    """Largest modulus the search should need: the loose existence bound or the first usable prime."""
    columns = n * plan.vectors_per_vertex
    parts = [(len(b.vertices) * (b.sub.vectors_per_vertex if b.sub else 1), b.rows - 1) for b in plan.blocks]
    return max(_loose_bound(columns, parts, plan.height), next_prime_above(_plan_base(n, plan)))


def _prime_candidates(base: int, p_hint: Optional[int], rounds: int) -> Iterator[int]:
    seen = set()
    if p_hint is not None:
        if p_hint > base and galois.is_prime(p_hint):
            seen.add(p_hint)
            yield p_hint
        else:
            logger.warning(f"ignoring field hint {p_hint}: need a prime above {base}")
    for r in range(rounds):
        p = next_prime_above(base * 2 ** r)
        if p not in seen:
            seen.add(p)
            yield p


def _search(g: SideInfoGraph, plan: CodePlan, scheme: str, seed: Optional[int], p_hint: Optional[int]) -> CodeCertificate:
    settings = get_settings()
    rng = np.random.default_rng(seed)
    base = _plan_base(g.n, plan)
    cap = field_size_cap(g.n, plan)
    last: Optional[Verdict] = None
    tried = []
    attempts = 0
    for p in _prime_candidates(base, p_hint, settings.prime_rounds):
        if p > cap:
            logger.warning(f"GF({p}) is above the field-size cap {cap}")
        tried.append(p)
        for attempt in range(settings.node_attempts):
            attempts += 1
            owners, matrix = _realize(plan, p, rng)
            cert = CodeCertificate.from_matrix(
                scheme, p, _vertex_major(g.n, owners, matrix), g.n, plan.vectors_per_vertex, seed,
                diagnostics={"attempts": attempts, "field_cap": str(cap)},
            )
            verdict = verify_certificate(g, cert)
            if verdict.passed:
                cert.verified = True
                logger.info(f"{scheme} code: rate {cert.rate.value}, N={cert.vectors_per_vertex}, GF({p})")
                return cert
            last = verdict
            logger.debug(f"GF({p}) attempt {attempt + 1} failed at vertex {verdict.vertex + 1}: {verdict.reason}")
    diagnostics = {"primes": tried, "attempts_per_prime": settings.node_attempts}
    if last is not None:
        diagnostics.update({"vertex": last.vertex + 1, "vector_index": last.vector_index, "reason": last.reason})
    raise ConstructionException(f"no verified {scheme} code found over the tried fields", diagnostics)


def _check_rate(cert: CodeCertificate, expected: Fraction) -> CodeCertificate:
    if cert.rate.to_fraction() != expected:
        raise InternalInvariantError(f"certificate rate {cert.rate.value} differs from the LP value {expected}")
    return cert


# -------------------
# Builders
# -------------------
def build_integral_code(g: SideInfoGraph, partial_cliques: Sequence[Sequence[int]], p_hint: Optional[int] = None,
                        seed: Optional[int] = None) -> CodeCertificate:
    """
    Scalar code for a disjoint partial clique cover.

    Args:
        g: Graph
        partial_cliques: Disjoint subsets covering every vertex (0-based)
        p_hint: Prime to try first
        seed: Seed for the node draws

    Returns:
        Verified certificate whose rate is the integral local partial clique value
    """
    cover = [vertex_set(s, g.n) for s in partial_cliques]
    seen = 0
    for members in cover:
        mask = mask_of(members)
        if not members or seen & mask:
            raise InputException("partial cliques must be nonempty and pairwise disjoint")
        seen |= mask
    if seen != g.full_mask:
        raise InputException("partial cliques must cover every vertex")
    deficiencies = [deficiency_of_mask(g, mask_of(s)) for s in cover]
    m = integral_local_partial_rate(g, cover, deficiencies)
    if not max(k + 1 for k in deficiencies) <= m <= sum(k + 1 for k in deficiencies):
        raise InternalInvariantError(f"integral rate {m} outside its partial clique range")
    entries = [(members, Fraction(1), k + 1, None) for members, k in zip(cover, deficiencies)]
    plan = weighted_plan(tuple(range(g.n)), entries, Fraction(m))
    return _check_rate(_search(g, plan, SCHEME_INTEGRAL, seed, p_hint), Fraction(m))


def build_fractional_code(g: SideInfoGraph, lp: Optional[LpSolution] = None, p_hint: Optional[int] = None,
                          seed: Optional[int] = None) -> CodeCertificate:
    """N vectors per vertex realizing an optimal local partial clique LP solution."""
    lp = local_partial_lp(g).certificate if lp is None else lp
    if not lp.optimal:
        raise InputException(f"cannot build a code from a {lp.status} LP")
    weights = solution_weights(lp)
    plan = weighted_plan(tuple(range(g.n)), _mds_entries(g, weights), lp.value)
    return _check_rate(_search(g, plan, SCHEME_FRACTIONAL, seed, p_hint), lp.value)


def build_clique_cover_code(g: SideInfoGraph, p_hint: Optional[int] = None, seed: Optional[int] = None) -> CodeCertificate:
    bound = fcc(g)
    plan = weighted_plan(tuple(range(g.n)), _mds_entries(g, solution_weights(bound.certificate)), bound.value)
    return _check_rate(_search(g, plan, SCHEME_CLIQUE_COVER, seed, p_hint), bound.value)


def build_recursive_code(g: SideInfoGraph, bound: Optional[BoundValue] = None, p_hint: Optional[int] = None,
                         seed: Optional[int] = None) -> CodeCertificate:
    """Compose sub-certificates along the recursive LP trace."""
    bound = recursive_lp(g) if bound is None else bound
    trace = bound.witness
    if not isinstance(trace, RecursiveLpTrace):
        raise InputException("recursive code needs the trace of a recursive LP evaluation")
    plan = _node_plan(trace, trace.root, {})
    return _check_rate(_search(g, plan, SCHEME_RECURSIVE, seed, p_hint), bound.value)


def certificate_from_gic(g: SideInfoGraph, structure: GicStructure, p: Optional[int] = None,
                         seed: Optional[int] = None) -> CodeCertificate:
    """
    Scalar certificate of the GIC broadcast; vertices outside the structure
    are sent uncoded on rows of their own.
    """
    structure = require_structure(structure)
    p = next_prime_above(max(len(structure.inner), 2)) if p is None else p
    prime_field(p)
    vectors = gic_vectors(structure, p, seed)
    outside = [v for v in range(g.n) if v not in set(structure.vertices)]
    columns = []
    for j in range(g.n):
        unit = [0] * g.n
        unit[j] = 1
        broadcast = gic_encode(structure, unit, p, vectors)
        parts = [to_ints(broadcast.w_inner)] + [to_ints(broadcast.w_relays[r]) for r in structure.relays]
        parts.append(np.array([1 if v == j else 0 for v in outside], dtype=np.int64))
        columns.append(np.concatenate(parts))
    matrix = np.column_stack(columns)
    cert = CodeCertificate.from_matrix(SCHEME_GIC, p, matrix, g.n, 1, seed,
                                       diagnostics={"inner": [v + 1 for v in structure.inner], "k": structure.k})
    verdict = verify_certificate(g, cert)
    if not verdict.passed:
        raise ConstructionException("GIC certificate failed verification",
                                    {"vertex": verdict.vertex + 1, "reason": verdict.reason})
    cert.verified = True
    return _check_rate(cert, Fraction(structure.rate + len(outside)))


def code_for_scheme(g: SideInfoGraph, scheme: str, p_hint: Optional[int] = None, seed: Optional[int] = None,
                    structures: Optional[Sequence[GicStructure]] = None, max_subset_size: Optional[int] = None,
                    depth_cap: Optional[int] = None) -> CodeCertificate:
    """Build the certificate for a CLI scheme name."""
    if scheme == "clique-cover":
        return build_clique_cover_code(g, p_hint, seed)
    if scheme == "local-partial":
        lp = local_partial_lp(g, SubsetFamily.build(g, max_subset_size))
        return build_fractional_code(g, lp.certificate, p_hint, seed)
    if scheme == "recursive":
        return build_recursive_code(g, recursive_lp(g, max_subset_size, depth_cap), p_hint, seed)
    if scheme == "gic":
        if not structures:
            raise ConstructionException("no valid GIC structure for this graph", {"candidates": 0})
        best = min(structures, key=lambda s: s.rate + g.n - len(s.vertices))
        return certificate_from_gic(g, best, p_hint, seed)
    raise InputException(f"unknown scheme '{scheme}'")


# -------------------
# Verification
# -------------------
def verify_certificate(g: SideInfoGraph, cert: CodeCertificate, trials: Optional[int] = None,
                       seed: Optional[int] = None) -> Verdict:
    """
    Check that every vertex can separate its N vectors from the vectors of
    the messages it does not know, then simulate decoding on random messages.

    Args:
        g: Graph
        cert: Certificate to check
        trials: Random message tuples to decode (default from settings)
        seed: Seed for the message draws (default: the certificate seed)

    Returns:
        Verdict naming the first failing vertex and vector, if any
    """
    if cert.n != g.n:
        raise DimensionMismatchException(f"certificate has {cert.n} vertices, graph has {g.n}")
    p = cert.modulus
    field_type = prime_field(p)
    big_n = cert.vectors_per_vertex
    u = field_type(cert.stacked())
    own_cols = [list(range(v * big_n, (v + 1) * big_n)) for v in range(g.n)]
    interfering = [
        [c for w in range(g.n) if w != v and not g.has_arc(v, w) for c in own_cols[w]]
        for v in range(g.n)
    ]

    decoders = {}
    for v in range(g.n):
        interference = u[:, interfering[v]]
        own = u[:, own_cols[v]]
        if rank(u[:, interfering[v] + own_cols[v]]) - rank(interference) < big_n:
            for j, col in enumerate(own_cols[v]):
                others = [c for c in own_cols[v] if c != col]
                if in_span(u[:, col], u[:, interfering[v] + others]):
                    return Verdict(False, v, j, "vector lies in the span of the interfering vectors")
            return Verdict(False, v, 0, "vectors are dependent on the interfering vectors")
        decoders[v] = row_functional(own, interference)

    trials = get_settings().decode_trials if trials is None else trials
    rng = np.random.default_rng(cert.seed if seed is None else seed)
    for _ in range(trials):
        x = field_type(rng.integers(0, p, size=g.n * big_n))
        y = u @ x
        for v in range(g.n):
            known = [c for w in range(g.n) if g.has_arc(v, w) for c in own_cols[w]]
            received = y - u[:, known] @ x[known] if known else y
            decoded = decoders[v] @ received
            wrong = np.nonzero(to_ints(decoded) != to_ints(x[own_cols[v]]))[0]
            if wrong.size:
                return Verdict(False, v, int(wrong[0]), "decoding recovered a wrong symbol")
    return Verdict(True)
