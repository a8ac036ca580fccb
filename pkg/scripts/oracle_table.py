"""Exact ex(n, H, rainbow-F) for small n, as a table or JSON lines.

    python scripts/oracle_table.py --pairs P4:P4,M2:M2,P3:P3 --n 2-6
"""
import argparse
import json
import sys
import time

from rainbow_turan.oracle import SearchBudget, exact_extremal
from rainbow_turan.patterns import parse_pattern


def main(argv=None):
    ap = argparse.ArgumentParser(description="small-n extremal table")
    ap.add_argument("--pairs", default="P4:P4,M2:M2,P3:P3,C4:C4")
    ap.add_argument("--n", default="2-6", help="range lo-hi")
    ap.add_argument("--time-limit", type=float)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)
    lo, hi = map(int, args.n.split("-"))
    budget = SearchBudget(time_limit=args.time_limit)
    for pair in args.pairs.split(","):
        h, f = map(parse_pattern, pair.split(":"))
        for n in range(lo, hi + 1):
            t0 = time.perf_counter()
            res = exact_extremal(n, h, f, budget)
            secs = time.perf_counter() - t0
            if args.json:
                print(json.dumps(dict(res.to_dict(), seconds=round(secs, 3)), sort_keys=True))
            else:
                print(f"ex({n}, {h.name}, rainbow-{f.name}) = {res.value:>4}  [{res.status.value}, "
                      f"{res.hosts_examined} hosts, {secs:.2f}s]")
    return 0


if __name__ == "__main__":
    sys.exit(main())
