"""Edge-colored simple graphs and the basic operations the constructions need.

Vertices are the integers ``0..n-1``.  Edges are normalized ``(u, v)`` tuples
with ``u < v``.  A coloring is a partial map from edges to non-negative
integer color ids.  Graphs are immutable: every operation returns a new graph.
"""
from __future__ import annotations

import enum
import warnings
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType
from typing import Optional

Edge = tuple[int, int]

#: Sizes above this still work but are far outside what the generators produce.
SOFT_VERTEX_LIMIT = 100_000


def edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class ColoredGraph:
    n: int
    edges: tuple[Edge, ...]
    colors: Mapping[Edge, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if self.n > SOFT_VERTEX_LIMIT:
            warnings.warn(f"graph with {self.n} vertices exceeds the soft limit {SOFT_VERTEX_LIMIT}")
        norm = set()
        for u, v in self.edges:
            e = edge(u, v)
            if not (0 <= e[0] and e[1] < self.n):
                raise ValueError(f"edge {e} out of range for n={self.n}")
            if e in norm:
                raise ValueError(f"parallel edge {e}")
            norm.add(e)
        cols = {}
        for e, c in dict(self.colors).items():
            e = edge(*e)
            if e not in norm:
                raise ValueError(f"color given for non-edge {e}")
            if c is None:
                continue
            if not isinstance(c, int) or c < 0:
                raise ValueError(f"color ids are non-negative integers, got {c!r} on {e}")
            cols[e] = c
        object.__setattr__(self, "edges", tuple(sorted(norm)))
        object.__setattr__(self, "colors", MappingProxyType(cols))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   colors: Optional[Mapping[tuple[int, int], int]] = None) -> "ColoredGraph":
        return cls(n, tuple(edges), dict(colors or {}))

    @classmethod
    def from_colored_edges(cls, n: int, triples: Iterable[tuple[int, int, Optional[int]]]) -> "ColoredGraph":
        triples = list(triples)
        return cls(n, tuple((u, v) for u, v, _ in triples),
                   {(u, v): c for u, v, c in triples if c is not None})

    # -- structure ---------------------------------------------------------

    @cached_property
    def adj(self) -> tuple[frozenset, ...]:
        nbrs: list[set] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and v in self.adj[u]

    def color(self, u: int, v: int) -> Optional[int]:
        return self.colors.get(edge(u, v))

    def colored_edges(self) -> list[tuple[int, int, Optional[int]]]:
        return [(u, v, self.colors.get((u, v))) for u, v in self.edges]

    # -- coloring queries --------------------------------------------------

    @property
    def is_total(self) -> bool:
        return len(self.colors) == len(self.edges)

    @property
    def palette(self) -> frozenset:
        return frozenset(self.colors.values())

    @property
    def palette_size(self) -> int:
        return len(self.palette)

    @property
    def is_dense(self) -> bool:
        """True when the used color ids are exactly ``0..palette_size-1``."""
        return self.palette == frozenset(range(self.palette_size))

    @property
    def is_proper(self) -> bool:
        return not validate_proper(self)

    # -- derived graphs ----------------------------------------------------

    def with_colors(self, colors: Mapping[tuple[int, int], int]) -> "ColoredGraph":
        return ColoredGraph(self.n, self.edges, dict(colors))

    def uncolored(self) -> "ColoredGraph":
        return ColoredGraph(self.n, self.edges, {})

    def compact_colors(self) -> "ColoredGraph":
        """Renumber colors to ``0..p-1`` preserving their relative order."""
        remap = {c: i for i, c in enumerate(sorted(self.palette))}
        return self.with_colors({e: remap[c] for e, c in self.colors.items()})

    def relabel(self, perm: list[int]) -> "ColoredGraph":
        """Vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("relabeling must be a permutation of the vertices")
        return ColoredGraph(
            self.n,
            tuple(edge(perm[u], perm[v]) for u, v in self.edges),
            {edge(perm[u], perm[v]): c for (u, v), c in self.colors.items()},
        )

    def without_edges(self, removed: Iterable[tuple[int, int]]) -> "ColoredGraph":
        drop = {edge(*e) for e in removed}
        keep = tuple(e for e in self.edges if e not in drop)
        return ColoredGraph(self.n, keep, {e: c for e, c in self.colors.items() if e not in drop})

    def disjoint_union(self, other: "ColoredGraph") -> "ColoredGraph":
        s = self.n
        edges = self.edges + tuple((u + s, v + s) for u, v in other.edges)
        colors = dict(self.colors)
        colors.update({(u + s, v + s): c for (u, v), c in other.colors.items()})
        return ColoredGraph(self.n + other.n, edges, colors)

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        for u, v, c in self.colored_edges():
            g.add_edge(u, v, color=c)
        return g


# ---------------------------------------------------------------------------
# properness


@dataclass(frozen=True)
class Violation:
    kind: str  # "uncolored" or "clash"
    vertex: Optional[int]
    edges: tuple[Edge, ...]
    color: Optional[int] = None

    def __str__(self):
        if self.kind == "uncolored":
            return f"edge {self.edges[0]} has no color"
        return f"edges {self.edges[0]} and {self.edges[1]} share color {self.color} at vertex {self.vertex}"


def validate_proper(g: ColoredGraph) -> list[Violation]:
    """Every pair of same-colored edges meeting at a vertex, plus every uncolored edge.

    An empty list means the coloring is total and proper.
    """
    out = [Violation("uncolored", None, (e,)) for e in g.edges if e not in g.colors]
    for w in range(g.n):
        seen: dict[int, Edge] = {}
        for x in sorted(g.adj[w]):
            e = edge(w, x)
            c = g.colors.get(e)
            if c is None:
                continue
            if c in seen:
                out.append(Violation("clash", w, (seen[c], e), c))
            else:
                seen[c] = e
    return out


def _partial_clashes(g: ColoredGraph) -> list[Violation]:
    return [v for v in validate_proper(g) if v.kind == "clash"]


# ---------------------------------------------------------------------------
# blow-up


def blow_up(g: ColoredGraph, v: int, b: int) -> ColoredGraph:
    """Replace ``v`` by ``b`` pairwise non-adjacent clones with the same neighborhood.

    The first clone keeps index ``v``; the others get ``n, n+1, ..., n+b-2``,
    so all other vertex indices are unchanged.  Colors on edges at ``v`` are
    dropped (copying them would clash at every shared neighbor).
    """
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for n={g.n}")
    if b < 1:
        raise ValueError("multiplicity must be at least 1")
    nbrs = sorted(g.adj[v])
    clones = [v] + list(range(g.n, g.n + b - 1))
    edges = [e for e in g.edges if v not in e]
    colors = {e: c for e, c in g.colors.items() if v not in e}
    edges += [edge(c, x) for c in clones for x in nbrs]
    return ColoredGraph(g.n + b - 1, tuple(edges), colors)


def blow_up_clones(g: ColoredGraph, v: int, b: int) -> list[int]:
    """The vertex ids :func:`blow_up` assigns to the clones of ``v``."""
    return [v] + list(range(g.n, g.n + b - 1))


# ---------------------------------------------------------------------------
# greedy coloring


def extend_coloring_greedy(g: ColoredGraph, start: int = 0) -> ColoredGraph:
    """Color every uncolored edge with the smallest id ``>= start`` free at both ends.

    Edges are processed in lexicographic order; pre-assigned colors are kept.
    Raises ``ValueError`` if the pre-assigned colors already clash.
    """
    clashes = _partial_clashes(g)
    if clashes:
        raise ValueError(f"partial coloring is not proper: {clashes[0]}")
    used: list[set] = [set() for _ in range(g.n)]
    colors = dict(g.colors)
    for (u, v), c in colors.items():
        used[u].add(c)
        used[v].add(c)
    for e in g.edges:
        if e in colors:
            continue
        u, v = e
        c = start
        while c in used[u] or c in used[v]:
            c += 1
        colors[e] = c
        used[u].add(c)
        used[v].add(c)
    return g.with_colors(colors)


# ---------------------------------------------------------------------------
# common neighbors


class PairKind(enum.Enum):
    THIN = "thin"
    FAT = "fat"


def common_neighbors(g: ColoredGraph, u: int, v: int) -> frozenset:
    if u == v:
        raise ValueError("common neighbors need two distinct vertices")
    return g.adj[u] & g.adj[v]


def classify_pair(g: ColoredGraph, u: int, v: int, threshold: int) -> PairKind:
    """Thin when the pair has at most ``threshold`` common neighbors, fat otherwise."""
    if threshold < 0:
        raise ValueError("threshold must be non-negative")
    return PairKind.THIN if len(common_neighbors(g, u, v)) <= threshold else PairKind.FAT
