"""
Script to check the unit disk graph facts on random clouds:
chi <= 3 omega - 2 and fcc <= 3 alpha on random unit disk graphs, and
omega <= 64 / lambda^2 on random lambda-precise clouds.
"""
import sys
import time
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

from analysis.geometry import generate_udg, lambda_precision, random_lambda_cloud, random_point_cloud
from graph.oracles import chromatic_number, clique_number, independence_number
from solvers.ic_lps import fcc
from utils.logger import setup_logging

logger = setup_logging(log_level="WARNING")

UDG_COUNT = 1000
LAMBDA_COUNT = 200
MAX_N = 14
SIDE = 6  # square side in disk radii
LAMBDAS = (Fraction(1, 4), Fraction(1, 2), Fraction(7, 10))


def udg_sweep():
    failures = 0
    for seed in range(UDG_COUNT):
        n = 2 + seed % (MAX_N - 1)
        g = generate_udg(random_point_cloud(n, SIDE, seed), 1)
        omega, chi, alpha = clique_number(g), chromatic_number(g), independence_number(g)
        cover = fcc(g).value
        if chi > 3 * omega - 2 or cover > 3 * alpha:
            failures += 1
            print(f"seed {seed}: chi = {chi}, omega = {omega}, fcc = {cover}, alpha = {alpha}")
    return failures


def lambda_sweep():
    failures = 0
    for seed in range(LAMBDA_COUNT):
        lam = LAMBDAS[seed % len(LAMBDAS)]
        n = 2 + seed % (MAX_N - 1)
        cloud = random_lambda_cloud(n, lam, SIDE, seed)
        lam_squared = lambda_precision(cloud)
        omega = clique_number(generate_udg(cloud, 1))
        if omega > 64 / lam_squared:
            failures += 1
            print(f"seed {seed}: omega = {omega} above 64 / {lam_squared}")
    return failures


if __name__ == "__main__":
    print("=" * 100)
    print("UNIT DISK GRAPH SWEEP")
    print("=" * 100)
    start = time.perf_counter()
    udg_failures = udg_sweep()
    print(f"\n{UDG_COUNT} unit disk graphs: {udg_failures} failure(s) ({time.perf_counter() - start:.1f} s)")
    start = time.perf_counter()
    lambda_failures = lambda_sweep()
    print(f"{LAMBDA_COUNT} lambda-precise clouds: {lambda_failures} failure(s) ({time.perf_counter() - start:.1f} s)")
    sys.exit(1 if udg_failures or lambda_failures else 0)
