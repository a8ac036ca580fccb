"""How close the greedy connector search comes to its forbidden-vertex bound.

For random instances at the common-neighbor threshold this reports, per k,
the largest observed (forbidden common neighbors - bound) and whether any
run needed backtracking.  Positive values mean the greedy saw more forbidden
vertices than |U| + 2|A| + 5k - 10.

    python scripts/lemma_slack.py --trials 500 --seed 1
"""
import argparse
import random
import sys
from collections import defaultdict

from rainbow_turan.lemma import check_path, find_rainbow_alternating_path, random_instance


def main(argv=None):
    ap = argparse.ArgumentParser(description="greedy lemma slack on random instances")
    ap.add_argument("--trials", type=int, default=300)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--ks", default="2,3,4,5")
    ap.add_argument("--noise", type=float, default=0.15)
    args = ap.parse_args(argv)
    rng = random.Random(args.seed)
    worst = defaultdict(lambda: -10 ** 9)
    backtracks = defaultdict(int)
    for k in map(int, args.ks.split(",")):
        for _ in range(args.trials):
            inst = random_instance(k, rng, slack=0, noise=args.noise)
            p = find_rainbow_alternating_path(inst, strict_bound=False)
            assert not check_path(inst, p)
            worst[k] = max(worst[k], p.max_forbidden - inst.forbidden_bound)
            backtracks[k] += p.backtracked
        print(f"k={k}: max(forbidden - bound) = {worst[k]:+d}, backtracked {backtracks[k]}/{args.trials}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
