"""
Script to check the exact bound relations on seeded random corpora:
fvc == fmm and fcc == n - fcp on undirected graphs, the chain
alpha <= MAIS <= recursive <= lp <= min(fpcc, flc) <= fcc with
MAIS <= minrank2 <= n on directed graphs, and fcc == alpha == MAIS on
graphs with bipartite complements.
"""
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

from graph.generators import random_cobipartite, random_graph
from graph.oracles import independence_number, mais, minrank_gf2
from solvers.ic_lps import fcc, fcp, fmm, fractional_local_chromatic, fractional_partial_clique_cover, fvc, \
    local_partial_lp
from solvers.recursive_lp import recursive_lp
from utils.logger import setup_logging

logger = setup_logging(log_level="WARNING")

CORPUS = 200
PERFECT_CORPUS = 50


def undirected_sweep():
    failures = 0
    for seed in range(CORPUS):
        g = random_graph(2 + seed % 11, 0.5, seed)
        if fvc(g).value != fmm(g).value or fcc(g).value != g.n - fcp(g).value:
            failures += 1
            print(f"undirected seed {seed}: fvc = {fvc(g).value}, fmm = {fmm(g).value}")
    return failures


def chain_sweep():
    failures = 0
    for seed in range(CORPUS):
        g = random_graph(2 + seed % 7, 0.5, seed, directed=True)
        alpha, acyclic, rank = independence_number(g), mais(g), minrank_gf2(g)
        rec, lp = recursive_lp(g).value, local_partial_lp(g).value
        best = min(fractional_partial_clique_cover(g).value, fractional_local_chromatic(g).value)
        if not (alpha <= acyclic <= rec <= lp <= best <= fcc(g).value and acyclic <= rank <= g.n):
            failures += 1
            print(f"directed seed {seed}: {alpha} {acyclic} {rec} {lp} {best} minrank {rank}")
    return failures


def perfect_sweep():
    failures = 0
    for seed in range(PERFECT_CORPUS):
        g = random_cobipartite(2 + seed % 9, seed)
        if not fcc(g).value == independence_number(g) == mais(g):
            failures += 1
            print(f"co-bipartite seed {seed}: fcc = {fcc(g).value}, alpha = {independence_number(g)}")
    return failures


if __name__ == "__main__":
    print("=" * 100)
    print("BOUND CHAIN SWEEP")
    print("=" * 100)
    total = 0
    for name, sweep in (("duality", undirected_sweep), ("chain", chain_sweep), ("perfect", perfect_sweep)):
        start = time.perf_counter()
        failures = sweep()
        total += failures
        print(f"{name:<10} {failures} failure(s) in {time.perf_counter() - start:.1f} s")
    sys.exit(1 if total else 0)
