"""Small uncolored pattern graphs: named families, parsing, automorphisms."""
from __future__ import annotations

import re
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property

from .graph import ColoredGraph, Edge, edge

#: Largest pattern the automorphism scan accepts.
MAX_AUT_VERTICES = 12


class UnsupportedPatternError(ValueError):
    pass


@dataclass(frozen=True)
class Pattern:
    t: int
    edges: tuple[Edge, ...]
    name: str = ""

    def __post_init__(self):
        if self.t < 1:
            raise ValueError("a pattern needs at least one vertex")
        norm = sorted({edge(u, v) for u, v in self.edges})
        if len(norm) != len(self.edges):
            raise ValueError("pattern has repeated edges")
        if norm and not (norm[0][0] >= 0 and max(v for _, v in norm) < self.t):
            raise ValueError("pattern edge out of range")
        object.__setattr__(self, "edges", tuple(norm))
        if not self.name:
            object.__setattr__(self, "name", "E[" + ",".join(f"{u}-{v}" for u, v in norm) + f"]/{self.t}")

    @cached_property
    def adj(self) -> tuple[frozenset, ...]:
        nb: list[set] = [set() for _ in range(self.t)]
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        return tuple(frozenset(s) for s in nb)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @cached_property
    def aut_count(self) -> int:
        return automorphism_count(self)

    def components(self) -> list[list[int]]:
        return _components(self.t, self.adj)

    def as_graph(self) -> ColoredGraph:
        return ColoredGraph.from_edges(self.t, self.edges)

    def __str__(self):
        return self.name


def _components(n: int, adj) -> list[list[int]]:
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [], [s]
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


# ---------------------------------------------------------------------------
# families


def path(k: int) -> Pattern:
    """P_k, the path on k vertices."""
    if k < 1:
        raise ValueError("P_k needs k >= 1")
    return Pattern(k, tuple((i, i + 1) for i in range(k - 1)), f"P{k}")


def cycle(l: int) -> Pattern:
    if l < 3:
        raise ValueError("C_l needs l >= 3")
    return Pattern(l, tuple((i, (i + 1) % l) for i in range(l)), f"C{l}")


def star(p: int) -> Pattern:
    """S_p: a center (vertex 0) joined to p leaves."""
    if p < 1:
        raise ValueError("S_p needs p >= 1")
    return Pattern(p + 1, tuple((0, i) for i in range(1, p + 1)), f"S{p}")


def double_star(p: int, r: int) -> Pattern:
    """S_{p,r}: adjacent centers 0 and 1 with p and r pendant leaves."""
    if p < 1 or r < 1:
        raise ValueError("S_{p,r} needs p, r >= 1")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(p)]
    edges += [(1, 2 + p + i) for i in range(r)]
    return Pattern(2 + p + r, tuple(edges), f"S{p}.{r}")


def matching(k: int) -> Pattern:
    if k < 1:
        raise ValueError("M_k needs k >= 1")
    return Pattern(2 * k, tuple((2 * i, 2 * i + 1) for i in range(k)), f"M{k}")


def clique(r: int) -> Pattern:
    if r < 1:
        raise ValueError("K_r needs r >= 1")
    return Pattern(r, tuple((i, j) for i in range(r) for j in range(i + 1, r)), f"K{r}")


def spider(*legs: int) -> Pattern:
    """A center (vertex 0) with one pendant path per entry of ``legs``."""
    edges, nxt = [], 1
    for length in legs:
        if length < 1:
            raise ValueError("spider legs need length >= 1")
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Pattern(nxt, tuple(edges), "Spider" + ".".join(map(str, legs)))


def from_edges(edges: Iterable[tuple[int, int]], t: int = None, name: str = "") -> Pattern:
    edges = [tuple(e) for e in edges]
    if t is None:
        t = 1 + max((max(e) for e in edges), default=0)
    return Pattern(t, tuple(edges), name)


_FAMILY = re.compile(r"^([PCSMK])(\d+)(?:\.(\d+))?$")
_EDGE = re.compile(r"^\s*(\d+)\s*-\s*(\d+)\s*$")


def parse_pattern(text: str) -> Pattern:
    """Parse ``Pk``, ``Ck``, ``Sp``, ``Sp.r``, ``Mk``, ``Kr`` or an edge list ``0-1,1-2``.

    An edge-list literal may end with ``/t`` to fix the vertex count.
    """
    s = text.strip()
    m = _FAMILY.match(s)
    if m:
        fam, a, b = m.group(1), int(m.group(2)), m.group(3)
        if b is not None:
            if fam != "S":
                raise ValueError(f"only stars take a second parameter: {text!r}")
            return double_star(a, int(b))
        return {"P": path, "C": cycle, "S": star, "M": matching, "K": clique}[fam](a)
    t = None
    if "/" in s:
        s, _, tail = s.rpartition("/")
        t = int(tail)
    s = s.strip().strip("[]")
    edges = []
    for part in filter(None, (p.strip() for p in s.split(","))):
        em = _EDGE.match(part)
        if not em:
            raise ValueError(f"cannot parse pattern {text!r}")
        edges.append((int(em.group(1)), int(em.group(2))))
    if not edges and t is None:
        raise ValueError(f"cannot parse pattern {text!r}")
    return from_edges(edges, t)


# ---------------------------------------------------------------------------
# automorphisms


def automorphisms(h: Pattern) -> Iterator[tuple[int, ...]]:
    """Yield every automorphism as a tuple ``sigma`` with ``sigma[v]`` the image of ``v``.

    Permutation scan with degree filtering and incremental edge checks.
    """
    if h.t > MAX_AUT_VERTICES:
        raise UnsupportedPatternError(f"automorphism scan supports t <= {MAX_AUT_VERTICES}, got {h.t}")
    t, adj = h.t, h.adj
    deg = [len(a) for a in adj]
    image = [-1] * t
    taken = [False] * t

    def rec(v):
        if v == t:
            yield tuple(image)
            return
        for w in range(t):
            if taken[w] or deg[w] != deg[v]:
                continue
            if any((image[x] in adj[w]) != (x in adj[v]) for x in range(v)):
                continue
            image[v] = w
            taken[w] = True
            yield from rec(v + 1)
            taken[w] = False
        image[v] = -1

    yield from rec(0)


def automorphism_count(h: Pattern) -> int:
    return sum(1 for _ in automorphisms(h))


# ---------------------------------------------------------------------------
# tree helpers


def is_connected(h: Pattern) -> bool:
    return len(h.components()) == 1


def is_tree(h: Pattern) -> bool:
    return h.m == h.t - 1 and is_connected(h)


def leaves(h: Pattern) -> list[int]:
    return [v for v in range(h.t) if h.degree(v) == 1]


def is_star(h: Pattern) -> bool:
    """A tree with a vertex adjacent to all others (includes K1 and K2)."""
    return is_tree(h) and any(h.degree(v) == h.t - 1 for v in range(h.t))


def is_double_star(h: Pattern) -> bool:
    """A tree with an edge ``uv`` such that every vertex is adjacent to ``u`` or ``v``, and not a star."""
    if not is_tree(h) or is_star(h):
        return False
    return any(all(x in (u, v) or x in h.adj[u] or x in h.adj[v] for x in range(h.t)) for u, v in h.edges)


def minimum_edge_coloring(h: Pattern) -> dict[Edge, int]:
    """A proper edge coloring of ``h`` with the fewest colors (backtracking; small patterns only)."""
    edges = list(h.edges)
    if not edges:
        return {}
    delta = max(h.degree(v) for v in range(h.t))
    for k in range(delta, delta + 2):
        col: dict[Edge, int] = {}
        used = [set() for _ in range(h.t)]

        def rec(i):
            if i == len(edges):
                return True
            u, v = edges[i]
            top = min(k, 1 + max(col.values(), default=-1) + 1)
            for c in range(top):
                if c in used[u] or c in used[v]:
                    continue
                col[edges[i]] = c
                used[u].add(c)
                used[v].add(c)
                if rec(i + 1):
                    return True
                used[u].discard(c)
                used[v].discard(c)
                del col[edges[i]]
            return False

        if rec(0):
            return col
    raise AssertionError("Vizing bound violated")  # pragma: no cover
