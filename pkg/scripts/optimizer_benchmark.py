#!/usr/bin/env python3
"""Time the multi-start Lagrangian maximizer on random r-graphs and report KKT residuals."""

import argparse
import itertools
import time

import numpy as np

from hylag.hypergraph import Hypergraph
from hylag.lagrangian import OptimizerConfig, maximize


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--graphs", type=int, default=20)
    ap.add_argument("--n", type=int, default=9)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    print(f"{'r':>2} {'n':>3} {'edges':>6} {'lambda':>14} {'kkt':>9} {'sec':>6}")
    for i in range(args.graphs):
        r = int(rng.integers(2, 6))
        sets = list(itertools.combinations(range(args.n), r))
        g = Hypergraph(r, args.n, tuple(s for s in sets if rng.random() < 0.4))
        t = time.perf_counter()
        res = maximize(g, OptimizerConfig(seed=args.seed))
        print(f"{r:>2} {g.n:>3} {g.num_edges:>6} {res.lambda_lower:>14.10f} {res.kkt_residual:>9.1e} {time.perf_counter() - t:>6.2f}")


if __name__ == "__main__":
    main()
