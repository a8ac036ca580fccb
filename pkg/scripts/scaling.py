"""Copy counts of the lower-bound constructions over growing n, with log-log fits.

Fits are reported against the requested size n, the actual vertex count and
the blow-up size b; the last isolates the growth exponent from the fixed
skeleton vertices that dominate at small n.

    python scripts/scaling.py [--csv out.csv]
"""
import argparse
import csv
import sys

from rainbow_turan import constructions as C
from rainbow_turan.census import count_copies
from rainbow_turan.oracle import fit_exponent
from rainbow_turan.patterns import clique, cycle, path

SERIES = [
    ("path k=5", lambda n: C.path_lower(5, n_target=n), path(5), (20, 40, 80), 2),
    ("path k=6", lambda n: C.path_lower(6, n_target=n), path(6), (24, 48, 96), 3),
    ("odd cycle k=2", lambda n: C.odd_cycle_lower(2, n_target=n), cycle(5), (20, 40, 80), 3),
    ("even cycle k=3", lambda n: C.even_cycle_lower(3, n_target=n), cycle(6), (20, 40, 80), 2),
    ("clique r=4", lambda n: C.clique_lower(4, n_target=n), clique(4), (16, 32, 64), 2),
]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--csv", help="write the raw rows here")
    args = ap.parse_args(argv)
    rows = []
    print(f"{'series':<16} {'n':>5} {'vertices':>9} {'count':>10}")
    for name, build, h, ns, expect in SERIES:
        pts = []
        for n in ns:
            g = build(n)
            c = count_copies(g, h)
            pts.append((n, g.n, c))
            rows.append({"series": name, "n": n, "vertices": g.n, "count": c})
            print(f"{name:<16} {n:>5} {g.n:>9} {c:>10}")
        s_n = fit_exponent([(n, c) for n, _, c in pts]).slope
        s_v = fit_exponent([(v, c) for _, v, c in pts]).slope
        print(f"{'':<16} slope vs n {s_n:.3f}, vs vertices {s_v:.3f}, expected {expect}")
    # path k=6 against b directly: classes of size b are U1, U3, U4, U6
    bs = [(b, count_copies(C.path_lower(6, b=b), path(6))) for b in (5, 11, 23)]
    print(f"path k=6 against b {[b for b, _ in bs]}: slope {fit_exponent(bs).slope:.3f}")
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=["series", "n", "vertices", "count"])
            w.writeheader()
            w.writerows(rows)
    return 0


if __name__ == "__main__":
    sys.exit(main())
