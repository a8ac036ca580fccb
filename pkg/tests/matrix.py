"""Desk-scale parameterizations of every generator, with the pattern each must avoid."""
from rainbow_turan import constructions as C
from rainbow_turan.patterns import Pattern, clique, cycle, matching, path, spider

CATERPILLAR = Pattern(8, ((0, 1), (1, 2), (2, 3), (0, 4), (0, 5), (3, 6), (3, 7)), "Caterpillar8")
SPIDER = spider(2, 2, 2)


def cases():
    """``(label, builder, pattern, b, lower_bound)`` tuples; ``lower_bound`` may be None."""
    out = []
    for k in (5, 6, 7):
        for b in (1, 2, 3):
            out.append((f"path k={k} b={b}", lambda k=k, b=b: C.path_lower(k, b=b), path(k), b, b ** (k // 2)))
    for b in (1, 2):
        out.append((f"odd-cycle k=2 b={b}", lambda b=b: C.odd_cycle_lower(2, b=b), cycle(5), b, b ** 3))
    for b in (1, 2):
        out.append((f"even-cycle k=3 b={b}", lambda b=b: C.even_cycle_lower(3, b=b), cycle(6), b, b ** 2))
    for n in (10, 14, 26):  # layers of 5, 7 and 13 vertices
        out.append((f"c4 n={n}", lambda n=n: C.c4_lower(n), cycle(4), None, None))
    for b in (1, 2, 3):
        out.append((f"clique r=4 b={b}", lambda b=b: C.clique_lower(4, b=b), clique(4), b, b * b))
    for h in (matching(2), matching(3), path(4)):
        out.append((f"disjoint {h.name}", lambda h=h: C.disjoint_components(h, b=2), h, 2, None))
    for t in (path(6), path(7), SPIDER, CATERPILLAR):
        for b in (2, 3):
            out.append((f"tree {t.name} b={b}", lambda t=t, b=b: C.tree_lower(t, b=b), t, b, None))
    for strat in ("A", "B", "C"):
        t = {"A": CATERPILLAR, "B": SPIDER, "C": CATERPILLAR}[strat]
        out.append((f"tree strategy {strat} on {t.name}", lambda t=t, s=strat: C.tree_lower(t, b=2, strategy=s),
                    t, 2, None))
    for n in (4, 9):
        out.append((f"p4-extremal n={n}", lambda n=n: C.p4_extremal(n), path(4), None, 12 * (n // 4)))
    return out
