"""Greedy construction of rainbow alternating paths ``v1 u1 v2 u2 ... u_{k-1} vk``.

Given anchors ``v1..vk`` in a properly colored graph, a forbidden vertex set
``U`` and a forbidden color set ``A``, the connectors ``u_i`` are picked one at
a time as the smallest common neighbor of ``v_i, v_{i+1}`` that keeps the path
rainbow and avoids ``U``, ``A``, the anchors and earlier connectors.  The
precondition is that every consecutive anchor pair has at least
``|U| + 2|A| + 5k - 9`` common neighbors.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Optional

from .graph import ColoredGraph, edge


class NotFound(Exception):
    """No connector available at anchor pair ``stuck_index`` (0-based), or the precondition failed."""

    def __init__(self, stuck_index: Optional[int], precondition_met: bool, deficits=()):
        self.stuck_index = stuck_index
        self.precondition_met = precondition_met
        self.deficits = list(deficits)
        if stuck_index is None:
            msg = f"precondition fails at anchor pairs {[d[0] for d in self.deficits]}; search not attempted"
        else:
            msg = f"no valid connector between anchors {stuck_index} and {stuck_index + 1}"
        super().__init__(msg)


class LemmaInconsistency(AssertionError):
    """The greedy failed or over-counted although the common-neighbor bound holds."""


@dataclass(frozen=True)
class LemmaInstance:
    g: ColoredGraph
    anchors: tuple[int, ...]
    forbidden_vertices: frozenset = frozenset()
    forbidden_colors: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "anchors", tuple(self.anchors))
        object.__setattr__(self, "forbidden_vertices", frozenset(self.forbidden_vertices))
        object.__setattr__(self, "forbidden_colors", frozenset(self.forbidden_colors))
        if len(set(self.anchors)) != len(self.anchors):
            raise ValueError("anchors must be pairwise distinct")
        if not self.anchors:
            raise ValueError("need at least one anchor")
        if any(not 0 <= v < self.g.n for v in self.anchors):
            raise ValueError("anchor out of range")

    @property
    def k(self) -> int:
        return len(self.anchors)

    @property
    def required_common(self) -> int:
        return len(self.forbidden_vertices) + 2 * len(self.forbidden_colors) + 5 * self.k - 9

    @property
    def forbidden_bound(self) -> int:
        return self.required_common - 1

    def deficits(self) -> list[tuple[int, int, int]]:
        """``(i, have, need)`` for every anchor pair ``i, i+1`` below the bound."""
        out = []
        for i in range(self.k - 1):
            have = len(self.g.adj[self.anchors[i]] & self.g.adj[self.anchors[i + 1]])
            if have < self.required_common:
                out.append((i, have, self.required_common))
        return out

    @property
    def precondition_holds(self) -> bool:
        return not self.deficits()


@dataclass(frozen=True)
class AlternatingPath:
    vertices: tuple[int, ...]  # v1 u1 v2 ... u_{k-1} vk
    colors: tuple[int, ...]  # colors along the path
    precondition_met: bool
    forbidden_counts: tuple[int, ...] = ()  # forbidden common neighbors seen at each step
    backtracked: bool = False

    @property
    def connectors(self) -> tuple[int, ...]:
        return self.vertices[1::2]

    @property
    def edges(self) -> list:
        return [edge(a, b) for a, b in zip(self.vertices, self.vertices[1:])]

    @property
    def max_forbidden(self) -> int:
        return max(self.forbidden_counts, default=0)


def _forbidden_reason(g, x, vj, vk, anchors, U, path_vertices, bad_colors):
    if x in U:
        return "U"
    if x in anchors:
        return "anchor"
    if x in path_vertices:
        return "path"
    c1, c2 = g.colors.get(edge(x, vj)), g.colors.get(edge(x, vk))
    if c1 is None or c2 is None:
        return "uncolored"
    if c1 in bad_colors or c2 in bad_colors or c1 == c2:
        return "color"
    return None


def _candidates(inst: LemmaInstance, j: int, path: list, colors: list) -> tuple[list[int], int]:
    """Valid connectors between anchors ``j`` and ``j+1`` (ascending) and the forbidden count."""
    g = inst.g
    vj, vn = inst.anchors[j], inst.anchors[j + 1]
    bad_colors = inst.forbidden_colors | set(colors)
    on_path = set(path)
    anchors = set(inst.anchors)
    valid, forbidden = [], 0
    for x in sorted(g.adj[vj] & g.adj[vn]):
        if _forbidden_reason(g, x, vj, vn, anchors, inst.forbidden_vertices, on_path, bad_colors) is None:
            valid.append(x)
        else:
            forbidden += 1
    return valid, forbidden


def _extend(inst, j, path, colors):
    if j == inst.k - 1:
        return list(path), list(colors)
    valid, _ = _candidates(inst, j, path, colors)
    vj, vn = inst.anchors[j], inst.anchors[j + 1]
    for x in valid:
        got = _extend(inst, j + 1, path + [x, vn],
                      colors + [inst.g.colors[edge(vj, x)], inst.g.colors[edge(x, vn)]])
        if got is not None:
            return got
    return None


def find_rainbow_alternating_path(inst: LemmaInstance, best_effort: bool = False,
                                  strict_bound: bool = True) -> AlternatingPath:
    """Greedy rainbow path through the anchors with one connector between consecutive anchors.

    Without ``best_effort`` an instance violating the common-neighbor bound is
    rejected with :class:`NotFound` before searching.  With ``strict_bound``
    a step whose forbidden common neighbors exceed ``|U| + 2|A| + 5k - 10``
    while the bound holds raises :class:`LemmaInconsistency`.  If the greedy
    gets stuck although the bound holds, connectors are backtracked before
    giving up (``backtracked`` is then set on the result).
    """
    g = inst.g
    deficits = inst.deficits()
    ok = not deficits
    if not ok and not best_effort:
        raise NotFound(None, False, deficits)
    path = [inst.anchors[0]]
    colors: list[int] = []
    counts = []
    for j in range(inst.k - 1):
        vj, vn = inst.anchors[j], inst.anchors[j + 1]
        valid, forbidden = _candidates(inst, j, path, colors)
        counts.append(forbidden)
        if ok and strict_bound and forbidden > inst.forbidden_bound:
            raise LemmaInconsistency(
                f"step {j}: {forbidden} forbidden common neighbors exceeds the bound {inst.forbidden_bound}")
        if not valid:
            if not ok:
                raise NotFound(j, False, deficits)
            full = _extend(inst, 0, [inst.anchors[0]], [])
            if full is None:
                raise LemmaInconsistency(f"no rainbow path exists although the precondition holds (greedy stuck at step {j})")
            return AlternatingPath(tuple(full[0]), tuple(full[1]), ok, tuple(counts), backtracked=True)
        x = valid[0]
        colors += [g.colors[edge(vj, x)], g.colors[edge(x, vn)]]
        path += [x, vn]
    return AlternatingPath(tuple(path), tuple(colors), ok, tuple(counts))


def check_path(inst: LemmaInstance, p: AlternatingPath) -> list[str]:
    """Everything wrong with ``p`` as an answer to ``inst`` (empty when valid)."""
    problems = []
    g = inst.g
    if p.vertices[0::2] != inst.anchors:
        problems.append("anchors out of place")
    for a, b in zip(p.vertices, p.vertices[1:]):
        if not g.has_edge(a, b):
            problems.append(f"non-edge {a}-{b}")
    if len(set(p.vertices)) != len(p.vertices):
        problems.append("repeated vertex")
    cols = [g.colors.get(e) for e in p.edges]
    if len(set(cols)) != len(cols) or None in cols:
        problems.append("not rainbow")
    if set(cols) & inst.forbidden_colors:
        problems.append("uses a forbidden color")
    if set(p.connectors) & inst.forbidden_vertices:
        problems.append("connector in U")
    return problems


@dataclass(frozen=True)
class RainbowCycle:
    vertices: tuple[int, ...]
    colors: tuple[int, ...]


def close_rainbow_odd_cycle(g: ColoredGraph, anchors: Iterable[int], extra_colors: Iterable[int] = (),
                            best_effort: bool = False) -> RainbowCycle:
    """Rainbow odd cycle: an alternating path through ``anchors`` closed by the edge ``v_last v_1``.

    The closing edge's color is added to the forbidden colors.  With ``m``
    anchors the cycle has length ``2m - 1``.
    """
    anchors = tuple(anchors)
    if len(anchors) < 2:
        raise ValueError("need at least two anchors")
    c = g.color(anchors[-1], anchors[0])
    if c is None:
        raise ValueError("closing edge missing or uncolored")
    inst = LemmaInstance(g, anchors, frozenset(), frozenset(extra_colors) | {c})
    p = find_rainbow_alternating_path(inst, best_effort=best_effort)
    return RainbowCycle(p.vertices, p.colors + (c,))


# ---------------------------------------------------------------------------
# random instances for property checks


def random_proper_coloring(g: ColoredGraph, rng: random.Random, spread: int = 3) -> ColoredGraph:
    """Proper total coloring: edges in random order, each takes one of the ``spread`` smallest free ids."""
    used = [set() for _ in range(g.n)]
    edges = list(g.edges)
    rng.shuffle(edges)
    colors = {}
    for u, v in edges:
        free, c = [], 0
        while len(free) < spread:
            if c not in used[u] and c not in used[v]:
                free.append(c)
            c += 1
        c = rng.choice(free)
        colors[(u, v)] = c
        used[u].add(c)
        used[v].add(c)
    return g.with_colors(colors)


def random_instance(k: int, rng: random.Random, max_u: int = 3, max_a: int = 3,
                    slack: int = 2, noise: float = 0.15) -> LemmaInstance:
    """A random instance built to satisfy the common-neighbor bound.

    Each consecutive anchor pair gets ``|U| + 2|A| + 5k - 9 + s`` fresh common
    neighbors (``0 <= s <= slack``); random noise edges are added, then a
    random proper coloring; ``U`` is drawn from all vertices (anchors
    included) and ``A`` from the palette.
    """
    nu, na = rng.randint(0, max_u), rng.randint(0, max_a)
    need = max(nu + 2 * na + 5 * k - 9, 1)
    anchors = list(range(k))
    n = k
    edges = set()
    for i in range(k - 1):
        for _ in range(need + rng.randint(0, slack)):
            edges.add((anchors[i], n))
            edges.add((anchors[i + 1], n))
            n += 1
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < noise:
                edges.add((u, v))
    perm = list(range(n))
    rng.shuffle(perm)
    g = ColoredGraph(n, tuple(edges)).relabel(perm)
    g = random_proper_coloring(g, rng)
    U = frozenset(rng.sample(range(n), nu))
    palette = sorted(g.palette)
    A = frozenset(rng.sample(palette, min(na, len(palette))))
    inst = LemmaInstance(g, tuple(perm[a] for a in anchors), U, A)
    if not inst.precondition_holds:  # U or A shrank the bound only; cannot happen
        raise AssertionError("random instance misses the bound")
    return inst
