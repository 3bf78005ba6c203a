"""
Script to search for graphs on which the combined local and partial clique LP
is strictly below both the partial clique cover and the local chromatic LP.
Searches the catalogue first, then seeded random directed graphs.
"""
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

from analysis.improvement_search import strict_improvement_search
from graph.generators import catalogue, random_graph
from graph.sig_format import write_sig
from utils.logger import setup_logging

logger = setup_logging(log_level="WARNING")

RANDOM_GRAPHS = 400
MAX_N = 8
ARC_PROBABILITIES = (0.3, 0.5, 0.7)
TIME_BUDGET_S = 600


def random_directed(seed: int):
    n = 4 + seed % (MAX_N - 3)
    p = ARC_PROBABILITIES[seed % len(ARC_PROBABILITIES)]
    return random_graph(n, p, seed, directed=True)


def run_search():
    """Print every strict improvement found within the time budget."""
    print("=" * 100)
    print("STRICT IMPROVEMENT SEARCH - lp < min(fpcc, flc)")
    print("=" * 100)
    start = time.perf_counter()

    found = strict_improvement_search(catalogue())
    print(f"\nCatalogue: {len(found)} instance(s) with a strict improvement")

    for seed_batch in range(0, RANDOM_GRAPHS, 50):
        if time.perf_counter() - start > TIME_BUDGET_S:
            print(f"\nTime budget of {TIME_BUDGET_S} s reached after {seed_batch} random graphs")
            break
        batch = [random_directed(seed) for seed in range(seed_batch, seed_batch + 50)]
        hits = strict_improvement_search(batch)
        print(f"Random graphs {seed_batch}-{seed_batch + 49}: {len(hits)} hit(s)")
        found.extend(hits)

    print("\n" + "=" * 100)
    print(f"{'n':<6} {'lp':<12} {'fpcc':<12} {'flc':<12} {'gap':<12}")
    print("-" * 100)
    for hit in found:
        print(f"{hit.graph.n:<6} {str(hit.lp):<12} {str(hit.fpcc):<12} {str(hit.flc):<12} {str(hit.gap):<12}")
    print("-" * 100)
    print(f"TOTAL: {len(found)} in {time.perf_counter() - start:.1f} s")

    if found:
        smallest = min(found, key=lambda hit: hit.graph.n)
        print("\nSmallest instance:\n")
        print(write_sig(smallest.graph, comment=f"lp = {smallest.lp}, fpcc = {smallest.fpcc}, flc = {smallest.flc}"))
    return 0 if found else 1


if __name__ == "__main__":
    sys.exit(run_search())
