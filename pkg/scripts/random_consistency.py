"""Compare the single-generator fast path with the general decision on random pairs."""

import argparse
import random
import time
from collections import Counter

from torus_rigidity.action import MatrixAction
from torus_rigidity.decide import decide_cyclic, decide_nonaffine
from torus_rigidity.random_systems import random_unimodular


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pairs", type=int, default=200)
    parser.add_argument("--seed", type=int, default=20240601)
    parser.add_argument("--max-dim", type=int, default=4)
    parser.add_argument("--entry-bound", type=int, default=3)
    args = parser.parse_args()
    rng = random.Random(args.seed)
    kinds, bad = Counter(), 0
    start = time.perf_counter()
    for _ in range(args.pairs):
        A = random_unimodular(rng, rng.randint(1, args.max_dim), args.entry_bound)
        B = random_unimodular(rng, rng.randint(1, args.max_dim), args.entry_bound)
        exact = decide_nonaffine(MatrixAction((A,)), MatrixAction((B,)))
        kinds[exact.certificate.kind] += 1
        bad += decide_cyclic(A, B).exists_nonaffine != exact.exists_nonaffine
    print(f"{args.pairs} pairs in {time.perf_counter() - start:.2f}s, disagreements: {bad}")
    for kind, n in kinds.most_common():
        print(f"  {kind}: {n}")


if __name__ == "__main__":
    main()
