#!/usr/bin/env python3
"""Empirical basin census: run many gradient descents from Haar-random
starts and tabulate which sign pattern each limit lands on.

Generically everything should drain to the unique index-0 pattern; any
other row in the table is a descent that grazed a saddle.
"""

import argparse

import numpy as np

import rotmorse as rm
from rotmorse.riemannian import FlowConfig


def pattern_key(eps):
    return "".join("+" if e > 0 else "-" for e in eps)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=4)
    parser.add_argument("--samples", type=int, default=1000)
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--tol", type=float, default=1e-8)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    c = rm.default_costs(args.n)
    config = FlowConfig(grad_tol=args.tol)

    counts, iterations = {}, []
    for _ in range(args.samples):
        result = rm.gradient_flow(rm.haar_sample(args.n, rng), c, config)
        key = (
            pattern_key(result.classified_pattern)
            if result.classified_pattern is not None
            else "unclassified"
        )
        counts[key] = counts.get(key, 0) + 1
        iterations.append(result.iterations)

    index_of = {
        pattern_key(r.pattern): r.index for r in rm.enumerate_critical_points(args.n, c)
    }
    print(f"n={args.n}, {args.samples} descents, seed {args.seed}, tol {args.tol:g}")
    print(
        f"iterations: min {min(iterations)}, mean {np.mean(iterations):.1f}, "
        f"max {max(iterations)}"
    )
    print("limit pattern    count    index")
    for key, count in sorted(counts.items(), key=lambda kv: -kv[1]):
        idx = index_of.get(key, "-")
        print(f"  {key:<12}  {count:6d}    {idx}")


if __name__ == "__main__":
    main()
