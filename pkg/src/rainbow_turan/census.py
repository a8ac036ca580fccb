"""Copy counting and rainbow-copy search by backtracking subgraph embedding.

A *copy* of a pattern ``h`` in a host ``g`` is a (not necessarily induced)
subgraph of ``g`` isomorphic to ``h``.  The engine enumerates labeled
embeddings (injective vertex maps sending pattern edges to host edges); the
number of copies is the embedding count divided by ``|Aut(h)|``.
"""
from __future__ import annotations

import json
import time
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .graph import ColoredGraph, Edge, edge
from .patterns import Pattern, automorphism_count, automorphisms

__all__ = [
    "CensusReport", "Embedding", "EnumerationResult", "SearchBudgetExceeded",
    "automorphism_count", "count_embeddings", "count_copies", "enumerate_copies",
    "find_rainbow_copy", "run_census",
]


class SearchBudgetExceeded(RuntimeError):
    """The node limit was hit; ``partial`` is what had been found so far (a lower bound)."""

    def __init__(self, partial: int, nodes: int):
        super().__init__(f"node budget exhausted after {nodes} nodes ({partial} found so far)")
        self.partial = partial
        self.nodes = nodes


class _Stop(Exception):
    pass


@dataclass(frozen=True)
class Embedding:
    vertices: tuple[int, ...]  # vertices[p] is the host image of pattern vertex p
    edges: tuple[Edge, ...]  # host images of the pattern edges, in pattern edge order
    colors: tuple[Optional[int], ...] = ()

    @property
    def is_rainbow(self) -> bool:
        return None not in self.colors and len(set(self.colors)) == len(self.colors)


def _embedding(g_colors, h: Pattern, vt: Sequence[int]) -> Embedding:
    es = tuple(edge(vt[a], vt[b]) for a, b in h.edges)
    return Embedding(tuple(vt), es, tuple(g_colors.get(e) for e in es))


# ---------------------------------------------------------------------------
# search plan


@dataclass(frozen=True)
class Plan:
    order: tuple[int, ...]  # pattern vertices in placement order
    back: tuple[tuple[int, ...], ...]  # back[i]: earlier positions adjacent to position i
    pdeg: tuple[int, ...]  # pattern degree at each position


def make_plan(h: Pattern, first: Optional[tuple[int, int]] = None) -> Plan:
    """Placement order where every vertex after a component's root touches an earlier one.

    Inside a component the next vertex is the one with most already-placed
    neighbors (ties: higher degree, then lower index).  With ``first=(a, b)``
    the order starts ``a, b``.
    """
    comps = h.components()
    if first is not None:
        a, b = first
        if b not in h.adj[a]:
            raise ValueError(f"{first} is not a pattern edge")
        comps.sort(key=lambda c: a not in c)
    else:
        comps.sort(key=lambda c: (-len(c), c[0]))
    order: list[int] = []
    for comp in comps:
        rest = set(comp)
        if first is not None and first[0] in rest:
            start = [first[0], first[1]]
        else:
            start = [max(comp, key=lambda v: (h.degree(v), -v))]
        for v in start:
            order.append(v)
            rest.discard(v)
        while rest:
            placed = set(order)
            nxt = max(rest, key=lambda v: (len(h.adj[v] & placed), h.degree(v), -v))
            order.append(nxt)
            rest.discard(nxt)
    pos = {v: i for i, v in enumerate(order)}
    back = tuple(tuple(sorted(pos[u] for u in h.adj[v] if pos[u] < i)) for i, v in enumerate(order))
    return Plan(tuple(order), back, tuple(h.degree(v) for v in order))


# ---------------------------------------------------------------------------
# core backtracking


@dataclass
class Host:
    """Raw adjacency view the search runs on.  ``adj`` may be mutated between searches."""

    n: int
    adj: Sequence  # adj[v]: set-like of neighbors
    colors: dict = field(default_factory=dict)
    order: Optional[Sequence] = None  # order[v]: neighbor iteration order (defaults to adj[v])

    @classmethod
    def of(cls, g: ColoredGraph) -> "Host":
        return cls(g.n, g.adj, dict(g.colors), tuple(tuple(sorted(a)) for a in g.adj))


def search(host: Host, plan: Plan, *, rainbow: bool = False,
           on_match: Optional[Callable[[list], Optional[bool]]] = None,
           max_nodes: Optional[int] = None, roots: Optional[Sequence[int]] = None,
           seed: Sequence[int] = ()) -> tuple[int, int]:
    """Enumerate embeddings; returns ``(matches, nodes)``.

    ``on_match`` receives the host images in *plan order* and may return
    ``False`` to stop the search.  ``roots`` restricts the image of the first
    placed vertex; ``seed`` fixes the images of the first ``len(seed)``
    positions.  With ``rainbow`` every pattern edge must carry a distinct color.
    """
    t = len(plan.order)
    adj, nb_order, colors = host.adj, host.order or host.adj, host.colors
    back, pdeg = plan.back, plan.pdeg
    image = [-1] * t
    used = set()
    used_colors: set = set()
    nseed = len(seed)
    state = [0, 0]  # matches, nodes
    everything = range(host.n)

    def rec(i):
        if i == t:
            state[0] += 1
            if on_match is not None and on_match(image) is False:
                raise _Stop
            return
        bk = back[i]
        if i < nseed:
            cands = (seed[i],)
        elif bk:
            pivot = image[bk[0]]
            if len(bk) > 1:
                pivot = min((image[j] for j in bk), key=lambda y: len(adj[y]))
            cands = nb_order[pivot]
        elif i == 0 and roots is not None:
            cands = roots
        else:
            cands = everything
        need = pdeg[i]
        for x in cands:
            if x in used or len(adj[x]) < need:
                continue
            new_cols = []
            ok = True
            for j in bk:
                y = image[j]
                if x not in adj[y]:
                    ok = False
                    break
                if rainbow:
                    c = colors.get((x, y) if x < y else (y, x))
                    if c is None or c in used_colors or c in new_cols:
                        ok = False
                        break
                    new_cols.append(c)
            if not ok:
                continue
            state[1] += 1
            if max_nodes is not None and state[1] > max_nodes:
                raise SearchBudgetExceeded(state[0], state[1])
            image[i] = x
            used.add(x)
            used_colors.update(new_cols)
            rec(i + 1)
            used.discard(x)
            used_colors.difference_update(new_cols)
        image[i] = -1

    try:
        rec(0)
    except _Stop:
        pass
    return state[0], state[1]


def _by_pattern_vertex(plan: Plan, image: Sequence[int]) -> list[int]:
    vt = [0] * len(plan.order)
    for i, p in enumerate(plan.order):
        vt[p] = image[i]
    return vt


# ---------------------------------------------------------------------------
# counting


def _count_chunk(n, edges, h, roots, max_nodes):
    g = ColoredGraph(n, tuple(edges))
    return search(Host.of(g), make_plan(h), roots=roots, max_nodes=max_nodes)


def count_embeddings(g: ColoredGraph, h: Pattern, max_nodes: Optional[int] = None,
                     threads: int = 1) -> tuple[int, int]:
    """Number of labeled embeddings of ``h`` into ``g`` and search nodes used."""
    if h.t > g.n:
        return 0, 0
    if threads <= 1 or g.n < 2:
        return search(Host.of(g), make_plan(h), max_nodes=max_nodes)
    chunks = [list(range(i, g.n, threads)) for i in range(threads)]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(_count_chunk, [g.n] * threads, [g.edges] * threads,
                                [h] * threads, chunks, [max_nodes] * threads))
    return sum(r[0] for r in results), sum(r[1] for r in results)


class CountInvariantError(AssertionError):
    pass


def count_copies(g: ColoredGraph, h: Pattern, max_nodes: Optional[int] = None, threads: int = 1) -> int:
    """Exact number of subgraphs of ``g`` isomorphic to ``h``.

    Raises :class:`SearchBudgetExceeded` instead of returning a partial count.
    """
    labeled, _ = count_embeddings(g, h, max_nodes=max_nodes, threads=threads)
    aut = h.aut_count
    if labeled % aut:
        raise CountInvariantError(f"{labeled} embeddings not divisible by |Aut|={aut}")
    return labeled // aut


@dataclass(frozen=True)
class EnumerationResult:
    visited: int
    aborted: bool
    nodes: int


_ORBIT_LIMIT = 5040


def enumerate_copies(g: ColoredGraph, h: Pattern, visitor: Callable[[Embedding], Optional[bool]],
                     max_nodes: Optional[int] = None) -> EnumerationResult:
    """Call ``visitor`` once per copy, in a deterministic order.

    A copy is reported through its lexicographically least embedding.  The
    visitor may return ``False`` to abort; the result records that.
    """
    if h.t > g.n:
        return EnumerationResult(0, False, 0)
    plan = make_plan(h)
    colors = dict(g.colors)
    auts = list(automorphisms(h)) if h.aut_count <= _ORBIT_LIMIT else None
    seen: set = set()
    visited = [0, False]

    def on_match(image):
        vt = _by_pattern_vertex(plan, image)
        if auts is not None:
            key = tuple(vt)
            for s in auts:
                if tuple(vt[s[p]] for p in range(h.t)) < key:
                    return None
        else:
            emb_edges = frozenset(edge(vt[a], vt[b]) for a, b in h.edges)
            key2 = (frozenset(vt), emb_edges)
            if key2 in seen:
                return None
            seen.add(key2)
        visited[0] += 1
        if visitor(_embedding(colors, h, vt)) is False:
            visited[1] = True
            return False
        return None

    _, nodes = search(Host.of(g), plan, on_match=on_match, max_nodes=max_nodes)
    return EnumerationResult(visited[0], visited[1], nodes)


def find_rainbow_copy(g: ColoredGraph, h: Pattern, max_nodes: Optional[int] = None,
                      require_proper: bool = False) -> Optional[Embedding]:
    """An embedding of ``h`` whose edges carry pairwise distinct colors, or ``None``.

    Uncolored host edges never take part in a rainbow copy.
    """
    if require_proper:
        from .graph import validate_proper

        bad = validate_proper(g)
        if bad:
            raise ValueError(f"host coloring is not proper: {bad[0]}")
    if h.t > g.n:
        return None
    plan = make_plan(h)
    found: list = []

    def on_match(image):
        found.append(_by_pattern_vertex(plan, image))
        return False

    search(Host.of(g), plan, rainbow=True, on_match=on_match, max_nodes=max_nodes)
    return _embedding(g.colors, h, found[0]) if found else None


# ---------------------------------------------------------------------------
# report


@dataclass
class CensusReport:
    pattern: str
    copy_count: int
    rainbow_witness: Optional[Embedding]
    nodes_explored: int
    elapsed: float
    rainbow_checked: bool = True

    @property
    def rainbow_found(self) -> bool:
        return self.rainbow_witness is not None

    def to_dict(self) -> dict:
        w = self.rainbow_witness
        return {
            "pattern": self.pattern,
            "copy_count": self.copy_count,
            "rainbow_found": self.rainbow_found if self.rainbow_checked else None,
            "witness_vertices": list(w.vertices) if w else None,
            "witness_edges": [list(e) for e in w.edges] if w else None,
            "nodes": self.nodes_explored,
            "millis": round(self.elapsed * 1000, 3),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def run_census(g: ColoredGraph, h: Pattern, rainbow: bool = True, max_nodes: Optional[int] = None,
               threads: int = 1) -> CensusReport:
    t0 = time.perf_counter()
    labeled, nodes = count_embeddings(g, h, max_nodes=max_nodes, threads=threads)
    if labeled % h.aut_count:
        raise CountInvariantError(f"{labeled} embeddings not divisible by |Aut|={h.aut_count}")
    witness = None
    if rainbow:
        witness = find_rainbow_copy(g, h, max_nodes=max_nodes)
    return CensusReport(h.name, labeled // h.aut_count, witness, nodes,
                        time.perf_counter() - t0, rainbow_checked=rainbow)
