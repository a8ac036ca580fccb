"""Exhaustive ground truth on tiny instances.

* :func:`rainbow_free_colorable` searches proper edge colorings of a fixed
  graph for one with no rainbow copy of a pattern.
* :func:`exact_extremal` maximizes the number of copies of ``h`` over all
  ``n``-vertex hosts admitting such a coloring for ``f``.
* :func:`p4_characterize` decides rainbow-P4-free colorability from the
  component structure alone.
* :func:`fit_exponent` fits ``count ~ n**e`` on a log-log scale.
"""
from __future__ import annotations

import enum
import itertools
import json
import math
import time
from dataclasses import dataclass, field
from typing import Iterator, Optional

import numpy as np

from . import cge
from .census import Host, count_copies, find_rainbow_copy, make_plan, search
from .constructions import k4_matching_coloring
from .graph import ColoredGraph, edge, validate_proper
from .patterns import Pattern, automorphisms

#: Largest n for which deduplicated host enumeration is available.
MAX_DEDUPE_N = 7
#: Largest n for which raw labeled host enumeration is allowed.
MAX_LABELED_N = 6


class Status(str, enum.Enum):
    EXACT = "exact"
    INCOMPLETE = "incomplete"


class OracleInvariantError(AssertionError):
    pass


@dataclass(frozen=True)
class SearchBudget:
    max_graphs: Optional[int] = None
    max_coloring_nodes: Optional[int] = None
    dedupe: bool = True
    time_limit: Optional[float] = None  # seconds

    def __post_init__(self):
        for name in ("max_graphs", "max_coloring_nodes", "time_limit"):
            val = getattr(self, name)
            if val is not None and val <= 0:
                raise ValueError(f"{name} must be positive")


# ---------------------------------------------------------------------------
# colorings


@dataclass
class ColoringResult:
    status: str  # "found", "absent" or "incomplete"
    coloring: Optional[ColoredGraph]
    nodes: int
    binding_cap: Optional[str] = None

    @property
    def found(self) -> bool:
        return self.status == "found"


def _ordered_edge_orbits(f: Pattern) -> list[tuple[int, int]]:
    """One representative per Aut(f)-orbit of ordered pattern edges."""
    auts = list(automorphisms(f))
    reps, seen = [], set()
    for a, b in f.edges:
        for pair in ((a, b), (b, a)):
            if pair in seen:
                continue
            reps.append(pair)
            seen.update((s[pair[0]], s[pair[1]]) for s in auts)
    return reps


class _Budgeted(Exception):
    def __init__(self, cap):
        self.cap = cap


def rainbow_free_colorable(g: ColoredGraph, f: Pattern, budget: Optional[SearchBudget] = None,
                           deadline: Optional[float] = None) -> ColoringResult:
    """A proper total coloring of ``g`` with no rainbow copy of ``f``, or proof that none exists.

    Edges are colored in lexicographic order; edge ``i`` may only use a color
    at most one above the largest used so far, which enumerates colorings up
    to renaming colors.  After each assignment only copies of ``f`` through
    the new edge are checked.
    """
    budget = budget or SearchBudget()
    if f.m == 0:
        raise ValueError("forbidden pattern needs an edge")
    if budget.time_limit is not None and deadline is None:
        deadline = time.monotonic() + budget.time_limit
    edges = list(g.edges)
    adj: list[set] = [set() for _ in range(g.n)]
    colors: dict = {}
    used: list[set] = [set() for _ in range(g.n)]
    host = Host(g.n, adj, colors)
    plans = [(make_plan(f, first=rep)) for rep in _ordered_edge_orbits(f)]
    cap = budget.max_coloring_nodes
    nodes = 0

    def rainbow_through(u, v) -> bool:
        for plan in plans:
            hits, _ = search(host, plan, rainbow=True, seed=(u, v), on_match=lambda _: False)
            if hits:
                return True
        return False

    def rec(i, top):
        nonlocal nodes
        if i == len(edges):
            return True
        u, v = edges[i]
        for c in range(top + 2):
            if c in used[u] or c in used[v]:
                continue
            nodes += 1
            if cap is not None and nodes > cap:
                raise _Budgeted("max_coloring_nodes")
            if deadline is not None and nodes % 256 == 0 and time.monotonic() > deadline:
                raise _Budgeted("time_limit")
            colors[(u, v)] = c
            used[u].add(c)
            used[v].add(c)
            adj[u].add(v)
            adj[v].add(u)
            if not rainbow_through(u, v) and rec(i + 1, max(top, c)):
                return True
            adj[u].discard(v)
            adj[v].discard(u)
            used[u].discard(c)
            used[v].discard(c)
            del colors[(u, v)]
        return False

    try:
        ok = rec(0, -1)
    except _Budgeted as exc:
        return ColoringResult("incomplete", None, nodes, exc.cap)
    if ok:
        return ColoringResult("found", g.with_colors(dict(colors)), nodes)
    return ColoringResult("absent", None, nodes)


# ---------------------------------------------------------------------------
# hosts


def hosts(n: int, dedupe: bool = True) -> Iterator[ColoredGraph]:
    """All graphs on ``n`` vertices; one per isomorphism class when ``dedupe`` is set."""
    if dedupe:
        if n > MAX_DEDUPE_N:
            raise ValueError(f"deduplicated enumeration supports n <= {MAX_DEDUPE_N}")
        from networkx.generators.atlas import graph_atlas_g

        for a in graph_atlas_g():
            if a.number_of_nodes() == n:
                yield ColoredGraph(n, tuple(edge(u, v) for u, v in a.edges()))
        return
    if n > MAX_LABELED_N:
        raise ValueError(f"labeled enumeration supports n <= {MAX_LABELED_N}")
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield ColoredGraph(n, tuple(p for i, p in enumerate(pairs) if mask >> i & 1))


# ---------------------------------------------------------------------------
# extremal values


@dataclass
class ExtremalResult:
    n: int
    h: str
    f: str
    value: int
    witness: Optional[ColoredGraph]
    status: Status
    binding_cap: Optional[str] = None
    hosts_examined: int = 0
    coloring_nodes: int = 0

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "h": self.h,
            "f": self.f,
            "value": self.value,
            "status": self.status.value,
            "binding_cap": self.binding_cap,
            "hosts_examined": self.hosts_examined,
            "coloring_nodes": self.coloring_nodes,
            "witness_cge": cge.dumps(self.witness) if self.witness is not None else None,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def exact_extremal(n: int, h: Pattern, f: Pattern, budget: Optional[SearchBudget] = None) -> ExtremalResult:
    """Largest number of copies of ``h`` in an ``n``-vertex graph with a rainbow-``f``-free proper coloring.

    Hosts are ranked by copy count (then by edge list) and tried in that
    order; the first colorable one is the answer and the witness.  Any host
    the budget leaves undecided above the answer makes the result
    ``INCOMPLETE`` with the value as a certified lower bound.
    """
    budget = budget or SearchBudget()
    deadline = time.monotonic() + budget.time_limit if budget.time_limit else None
    ranked = sorted(((count_copies(g, h), g.edges, g) for g in hosts(n, budget.dedupe)),
                    key=lambda r: (-r[0], r[1]))
    examined = nodes = 0
    undecided_above: Optional[int] = None
    cap = None
    for count, _, g in ranked:
        if count == 0 or g.m == 0:
            # the edgeless host is always colorable; nothing below beats it
            witness = ColoredGraph(n, ())
            return _finish(n, h, f, 0, witness, undecided_above, cap, examined, nodes)
        if budget.max_graphs is not None and examined >= budget.max_graphs:
            cap = cap or "max_graphs"
            undecided_above = max(undecided_above or 0, count)
            break
        if deadline is not None and time.monotonic() > deadline:
            cap = cap or "time_limit"
            undecided_above = max(undecided_above or 0, count)
            break
        examined += 1
        res = rainbow_free_colorable(g, f, budget, deadline)
        nodes += res.nodes
        if res.found:
            return _finish(n, h, f, count, res.coloring, undecided_above, cap, examined, nodes)
        if res.status == "incomplete":
            cap = cap or res.binding_cap
            undecided_above = max(undecided_above or 0, count)
    return ExtremalResult(n, h.name, f.name, 0, ColoredGraph(n, ()), Status.INCOMPLETE, cap, examined, nodes)


def _finish(n, h, f, value, witness, undecided_above, cap, examined, nodes) -> ExtremalResult:
    if validate_proper(witness):
        raise OracleInvariantError("witness coloring is not proper")
    if find_rainbow_copy(witness, f) is not None:
        raise OracleInvariantError("witness contains a rainbow copy")
    if count_copies(witness, h) != value:
        raise OracleInvariantError("witness count does not match the value")
    exact = undecided_above is None or undecided_above <= value
    return ExtremalResult(n, h.name, f.name, value, witness, Status.EXACT if exact else Status.INCOMPLETE,
                          None if exact else cap, examined, nodes)


# ---------------------------------------------------------------------------
# P4 characterization


@dataclass
class P4Verdict:
    colorable: bool
    coloring: Optional[ColoredGraph] = None
    reason: str = ""
    component: list = field(default_factory=list)


def _components(g: ColoredGraph) -> list[list[int]]:
    seen, comps = set(), []
    for s in range(g.n):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in g.adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def _walk(g: ColoredGraph, start: int, comp_size: int) -> list[int]:
    """Vertices of a path or cycle component in traversal order from ``start``."""
    order, prev, cur = [start], None, start
    while len(order) < comp_size:
        nxt = min(y for y in g.adj[cur] if y != prev and y not in order[-2:-1])
        prev, cur = cur, nxt
        order.append(cur)
    return order


def p4_characterize(g: ColoredGraph) -> P4Verdict:
    """Decide whether ``g`` has a proper coloring without a rainbow P4, with a witness.

    Every component must be a star, a path, an even cycle, or have at most
    four vertices.  Paths and even cycles alternate two colors, stars use
    distinct colors, small components inherit the matching coloring of K4.
    """
    colors: dict = {}
    for comp in _components(g):
        size = len(comp)
        cedges = [e for e in g.edges if e[0] in comp]
        degs = {v: g.degree(v) for v in comp}
        is_tree = len(cedges) == size - 1
        if size <= 4:
            padded = list(comp) + [g.n + i for i in range(4 - size)]
            full = k4_matching_coloring(padded)
            colors.update({e: full[e] for e in cedges})
        elif is_tree and max(degs.values()) == size - 1:
            center = max(comp, key=lambda v: degs[v])
            colors.update({edge(center, x): i for i, x in enumerate(sorted(g.adj[center]))})
        elif is_tree and max(degs.values()) <= 2:
            start = min(v for v in comp if degs[v] == 1)
            order = _walk(g, start, size)
            colors.update({edge(a, b): i % 2 for i, (a, b) in enumerate(zip(order, order[1:]))})
        elif len(cedges) == size and all(d == 2 for d in degs.values()):
            if size % 2:
                return P4Verdict(False, reason=f"odd cycle C{size}", component=comp)
            order = _walk(g, comp[0], size)
            ring = order + [order[0]]
            colors.update({edge(a, b): i % 2 for i, (a, b) in enumerate(zip(ring, ring[1:]))})
        else:
            return P4Verdict(False, reason="component with more than four vertices that is not a star, "
                                           "path or even cycle", component=comp)
    return P4Verdict(True, g.with_colors(colors), "every component is a star, path, even cycle or small")


# ---------------------------------------------------------------------------
# exponent fits


@dataclass(frozen=True)
class FitResult:
    slope: float
    intercept: float
    residual: float  # root mean square residual in log space


def fit_exponent(points) -> FitResult:
    """Least-squares slope of ``log(count)`` against ``log(n)``."""
    pts = [(float(n), float(c)) for n, c in points]
    if len(pts) < 3:
        raise ValueError("need at least three points")
    if any(n <= 0 or c <= 0 for n, c in pts):
        raise ValueError("sizes and counts must be positive")
    x = np.log([n for n, _ in pts])
    if np.ptp(x) == 0:
        raise ValueError("all sizes are equal")
    y = np.log([c for _, c in pts])
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (slope * x + intercept)
    return FitResult(float(slope), float(intercept), float(math.sqrt(np.mean(resid ** 2))))
