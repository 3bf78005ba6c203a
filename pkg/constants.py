"""
Application-wide constants.
Centralizes default limits, budgets and exit codes for better maintainability.
"""

TOOL_NAME = "icx"
TOOL_VERSION = "1.0.0"

# Exit codes
EXIT_OK = 0
EXIT_FAILURE = 1  # verification failed / internal error
EXIT_INPUT_ERROR = 2
EXIT_BUDGET_ERROR = 3
EXIT_CONSTRUCTION_ERROR = 4

# Graph limits
MAX_VERTICES = 64  # bitset-backed vertex sets

# Exact oracle limits (vertex counts)
DEFAULT_ORACLE_LIMIT = 24
DEFAULT_MAIS_LIMIT = 20

# Search budgets
DEFAULT_MINRANK_BUDGET = 22  # free off-diagonal entries
DEFAULT_CLIQUE_BUDGET = 200_000  # cliques enumerated before giving up
DEFAULT_PATH_BUDGET = 10_000  # inner-avoiding paths per ordered pair

# Subset families
FULL_FAMILY_MAX_N = 10  # all subsets up to this many vertices
RESTRICTED_SUBSET_SIZE = 5

# Recursive LP
DEFAULT_DEPTH_CAP = 2

# Code construction
DEFAULT_DENOMINATOR_CAP = 64
DEFAULT_PRIME_ROUNDS = 8  # first prime > base, > 2*base, > 4*base, ...
DEFAULT_NODE_ATTEMPTS = 3  # fresh Vandermonde nodes per prime
DEFAULT_DECODE_TRIALS = 20  # random message tuples per verification

# Certificate scheme tags
SCHEME_INTEGRAL = "integral-local-partial"
SCHEME_FRACTIONAL = "fractional-local-partial"
SCHEME_RECURSIVE = "recursive"
SCHEME_GIC = "gic"
SCHEME_CLIQUE_COVER = "clique-cover"

# Family report verdicts
VERDICT_HOLDS = "holds"
VERDICT_VIOLATED = "violated"
VERDICT_HYPOTHESIS_UNMET = "hypothesis-unmet"
VERDICT_NA = "n/a"
