"""
Prime-field linear algebra on top of galois.

Matrices are galois FieldArrays; conversion helpers move between them and
plain int64 numpy arrays, which is what the certificates store.
"""
from functools import lru_cache
from itertools import combinations
from typing import Optional, Sequence

import galois
import numpy as np

from utils.exceptions import DimensionMismatchException, InputException, InternalInvariantError

MDS_EXHAUSTIVE_MAX_N = 12
MDS_SPOT_CHECKS = 32


@lru_cache(maxsize=None)
def prime_field(p: int):
    """GF(p) array class; p must be prime."""
    if p < 2 or not galois.is_prime(p):
        raise InputException(f"field modulus must be prime, got {p}")
    return galois.GF(p)


def next_prime_above(x: int) -> int:
    return int(galois.next_prime(max(int(x), 1)))


def to_field(values, p: int):
    field = prime_field(p)
    return field(np.mod(np.asarray(values, dtype=np.int64), p))


def to_ints(matrix) -> np.ndarray:
    return np.asarray(matrix.view(np.ndarray), dtype=np.int64)


def rank(matrix) -> int:
    if matrix.size == 0:
        return 0
    return int(np.linalg.matrix_rank(matrix))


def in_span(vector, basis) -> bool:
    """
    Whether vector lies in the column span of basis.

    Args:
        vector: Length-h field vector
        basis: h x r field matrix (r may be 0)

    Returns:
        True iff rank([basis | vector]) == rank(basis)
    """
    vector = vector.reshape(-1)
    if basis.ndim != 2 or basis.shape[0] != vector.shape[0]:
        raise DimensionMismatchException(
            f"vector of length {vector.shape[0]} against basis of shape {tuple(basis.shape)}")
    if type(vector) is not type(basis):
        raise DimensionMismatchException("vector and basis live in different fields")
    if basis.shape[1] == 0:
        return not np.any(to_ints(vector))
    stacked = type(basis)(np.hstack([to_ints(basis), to_ints(vector).reshape(-1, 1)]))
    return rank(stacked) == rank(basis)


def vandermonde(nodes: Sequence[int], rows: int, p: int, multipliers: Optional[Sequence[int]] = None):
    """rows x len(nodes) matrix with entry (r, c) = multiplier_c * node_c^r mod p."""
    multipliers = multipliers if multipliers is not None else [1] * len(nodes)
    entries = [[(m * pow(int(node), r, p)) % p for node, m in zip(nodes, multipliers)] for r in range(rows)]
    return to_field(np.array(entries, dtype=np.int64).reshape(rows, len(nodes)), p)


def mds_matrix(n: int, k: int, p: int, nodes: Optional[Sequence[int]] = None,
               multipliers: Optional[Sequence[int]] = None):
    """
    k x n matrix whose every k columns are independent.

    A (generalized) Vandermonde matrix on distinct nonzero nodes, which
    needs p > n. A single row only needs nonzero entries, so k = 1 works
    over any prime field.

    Args:
        n: Column count
        k: Row count, 1 <= k <= n
        p: Field modulus
        nodes: Distinct nonzero evaluation points (default 1..n)
        multipliers: Nonzero column scalings (default all 1)

    Returns:
        galois FieldArray of shape (k, n)
    """
    prime_field(p)
    if k < 1 or k > n:
        raise InputException(f"MDS matrix needs 1 <= k <= n, got k={k}, n={n}")
    if multipliers is not None and any(m % p == 0 for m in multipliers):
        raise InputException("MDS column multipliers must be nonzero")
    if k == 1:
        return vandermonde([1] * n, 1, p, multipliers)
    if p <= n:
        raise InputException(f"an MDS matrix with {n} columns needs a prime above {n}, got {p}")
    nodes = list(range(1, n + 1)) if nodes is None else [int(x) % p for x in nodes]
    if len(nodes) != n or len(set(nodes)) != n or 0 in nodes:
        raise InputException("Vandermonde nodes must be n distinct nonzero field elements")
    matrix = vandermonde(nodes, k, p, multipliers)
    if not _spot_check_mds(matrix):
        raise InternalInvariantError(f"Vandermonde matrix on {nodes} over GF({p}) is not MDS")
    return matrix


def random_mds(n: int, k: int, p: int, rng: np.random.Generator):
    """MDS matrix on random distinct nonzero nodes with random column scalings."""
    multipliers = [int(m) for m in rng.integers(1, p, size=n)]
    if k == 1:
        return mds_matrix(n, 1, p, multipliers=multipliers)
    nodes = [int(x) for x in rng.choice(np.arange(1, p), size=n, replace=False)]
    return mds_matrix(n, k, p, nodes, multipliers)


def is_mds(matrix) -> bool:
    """Exhaustive check that every k-subset of columns is nonsingular."""
    k, n = matrix.shape
    for columns in combinations(range(n), k):
        if rank(matrix[:, list(columns)]) < k:
            return False
    return True


def _spot_check_mds(matrix) -> bool:
    k, n = matrix.shape
    if n <= MDS_EXHAUSTIVE_MAX_N:
        return is_mds(matrix)
    rng = np.random.default_rng(0)
    for _ in range(MDS_SPOT_CHECKS):
        columns = sorted(int(c) for c in rng.choice(n, size=k, replace=False))
        if rank(matrix[:, columns]) < k:
            return False
    return True


def solve_left(a, b):
    """One solution x of x @ a = b, or None."""
    solution = solve_linear(type(a)(to_ints(a).T.copy()), type(b)(to_ints(b).T.copy()))
    if solution is None:
        return None
    return type(a)(to_ints(solution).T.copy())


def solve_linear(a, b):
    """
    One solution x of a @ x = b, or None when the system is inconsistent.

    Free variables are set to zero.
    """
    if a.shape[0] != b.shape[0]:
        raise DimensionMismatchException(f"system of shape {tuple(a.shape)} with right side {tuple(b.shape)}")
    field = type(a)
    rows, cols = a.shape
    width = b.shape[1]
    if rows == 0:
        return field(np.zeros((cols, width), dtype=np.int64))
    augmented = field(np.hstack([to_ints(a), to_ints(b)]))
    reduced = to_ints(augmented.row_reduce(ncols=cols)) if cols else to_ints(augmented)
    solution = np.zeros((cols, width), dtype=np.int64)
    for r in range(rows):
        pivots = np.nonzero(reduced[r, :cols])[0]
        if pivots.size == 0:
            if np.any(reduced[r, cols:]):
                return None
            continue
        solution[pivots[0]] = reduced[r, cols:]
    return field(solution)


def row_functional(wanted, interference):
    """
    Matrix D with D @ wanted = I and D @ interference = 0, or None.

    Args:
        wanted: h x N vectors a client must separate
        interference: h x r vectors it cannot cancel

    Returns:
        N x h field matrix, or None when the vectors are not separable
    """
    field = type(wanted)
    own = wanted.shape[1]
    stacked = field(np.hstack([to_ints(wanted), to_ints(interference)]))
    target = np.zeros((stacked.shape[1], own), dtype=np.int64)
    target[:own, :own] = np.eye(own, dtype=np.int64)
    transposed = field(to_ints(stacked).T.copy())
    solution = solve_linear(transposed, field(target))
    if solution is None:
        return None
    return field(to_ints(solution).T.copy())
