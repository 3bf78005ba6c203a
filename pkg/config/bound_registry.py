"""
Registry of the bound identifiers accepted by `icx bounds --enable`.
Groups them by the kind of graph they accept and by what they measure.
"""

BOUND_DESCRIPTIONS = {
    # Lower bounds (exact oracles)
    "alpha": "independence number",
    "mais": "maximum acyclic induced subgraph",
    # Scalar-linear optimum over GF(2)
    "minrank2": "minrank over GF(2)",
    # Undirected LPs
    "fvc": "fractional vertex cover",
    "fmm": "fractional maximum matching",
    "alphaf2": "independent-set LP with edge constraints",
    # Clique LPs
    "fcp": "fractional clique packing",
    "fcc": "fractional clique cover",
    # Partial clique / local LPs
    "fpcc": "fractional partial clique cover",
    "flc": "fractional local chromatic number of the complement",
    "lp": "combined local and partial clique LP",
    "recursive": "recursive local and partial clique LP",
    # Generalized interlinked cycles
    "gic": "fractional cover by whole-graph GIC structures",
}

UNDIRECTED_ONLY = {"fvc", "fmm", "alphaf2"}

DEFAULT_ENABLED = ["alpha", "mais", "fcc", "fpcc", "flc", "lp"]

# Order used when assembling reports
BOUND_ORDER = list(BOUND_DESCRIPTIONS)
