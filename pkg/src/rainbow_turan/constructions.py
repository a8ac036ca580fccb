"""Properly edge-colored host graphs with many copies of a pattern and no rainbow copy.

Every generator takes either a vertex budget ``n_target`` (the class size
``b`` is then the largest value that fits) or an explicit ``b``.  Colors the
construction prescribes occupy ids ``0..p-1``; the remaining edges are
colored greedily starting at ``p``.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import patterns as pat
from .graph import ColoredGraph, blow_up, blow_up_clones, edge, extend_coloring_greedy
from .patterns import Pattern


class ConstructionError(ValueError):
    pass


def _class_size(n_target: Optional[int], b: Optional[int], fixed: int, per_b: int) -> int:
    """Largest ``b`` with ``fixed + per_b * b <= n_target`` (or the explicit ``b``, checked)."""
    if b is not None:
        if b < 1:
            raise ConstructionError("class size b must be at least 1")
        if n_target is not None and fixed + per_b * b > n_target:
            raise ConstructionError(f"b={b} needs {fixed + per_b * b} vertices, budget is {n_target}")
        return b
    if n_target is None:
        raise ConstructionError("give n_target or b")
    if n_target < fixed + per_b:
        raise ConstructionError(f"skeleton needs at least {fixed + per_b} vertices, budget is {n_target}")
    return (n_target - fixed) // per_b


def _finish(n: int, edges, preset: dict, palette_start: int) -> ColoredGraph:
    g = ColoredGraph(n, tuple(edges), preset)
    return extend_coloring_greedy(g, start=palette_start)


class _Namer:
    """Hands out consecutive vertex ids for named classes."""

    def __init__(self):
        self.n = 0
        self.classes: dict = {}

    def add(self, key, size: int) -> list[int]:
        ids = list(range(self.n, self.n + size))
        self.n += size
        self.classes[key] = ids
        return ids


# ---------------------------------------------------------------------------
# paths


def path_class_sizes(k: int) -> list[bool]:
    """``big[i]`` for ``i = 1..k`` (index 0 unused): whether U_i is a class of size b."""
    big = [False] * (k + 1)
    if k % 2:
        for i in range(1, k + 1):
            big[i] = i in (1, 3, 4) or (i >= 7 and i % 2 == 1)
    else:
        for i in range(1, k + 1):
            big[i] = i in (1, 3) or (i >= 4 and i % 2 == 0)
    return big


def path_lower(k: int, n_target: Optional[int] = None, b: Optional[int] = None) -> ColoredGraph:
    """Rainbow-P_k-free host with at least ``b**(k//2)`` copies of P_k.

    Layers U_1..U_k alternate between classes of size ``b`` and singletons.
    ``u2 - u3_i`` and ``u4_i - u5`` both get color ``i``; ``u3_i - u4_i`` is a
    matching; consecutive layers from U_5 on are complete to each other.
    The matching gets one shared color ``b``: for k = 5 the path
    ``u3_j u4_j u5 u4_i u3_i`` avoids ``u2`` and would otherwise be rainbow
    under some extensions.
    """
    if k < 5:
        raise ConstructionError("path_lower needs k >= 5")
    big = path_class_sizes(k)
    nbig = sum(big)
    b = _class_size(n_target, b, k - nbig, nbig)
    nm = _Namer()
    U = {i: nm.add(i, b if big[i] else 1) for i in range(1, k + 1)}
    u2, u5 = U[2][0], U[5][0]
    edges, preset = [], {}
    for x in U[1]:
        edges.append(edge(x, u2))
    for i in range(b):
        e1, e2, e3 = edge(u2, U[3][i]), edge(U[3][i], U[4][i]), edge(U[4][i], u5)
        edges += [e1, e2, e3]
        preset[e1] = preset[e3] = i
        preset[e2] = b
    for i in range(5, k):
        edges += [edge(x, y) for x in U[i] for y in U[i + 1]]
    return _finish(nm.n, edges, preset, b + 1)


# ---------------------------------------------------------------------------
# cycles


def odd_cycle_lower(k: int, n_target: Optional[int] = None, b: Optional[int] = None) -> ColoredGraph:
    """Blow-up of C_{2k+1} where two non-adjacent class pairs carry one shared-color matching each.

    Classes are ``V_0..V_{2k}`` (vertex ``j`` of ``V_i`` is ``i*b + j``); the
    matchings sit on ``V_0V_1`` and ``V_2V_3`` and both get color 0.
    """
    if k < 2:
        raise ConstructionError("odd_cycle_lower needs k >= 2 (C_3 admits no rainbow-free copy)")
    L = 2 * k + 1
    b = _class_size(n_target, b, 0, L)
    V = [list(range(i * b, (i + 1) * b)) for i in range(L)]
    edges, preset = [], {}
    for i in range(L):
        j = (i + 1) % L
        if i in (0, 2):
            for x, y in zip(V[i], V[j]):
                e = edge(x, y)
                edges.append(e)
                preset[e] = 0
        else:
            edges += [edge(x, y) for x in V[i] for y in V[j]]
    return _finish(L * b, edges, preset, 1)


def odd_cycle_matchings(k: int, b: int) -> tuple[list, list]:
    """The two matchings of :func:`odd_cycle_lower` as edge lists."""
    L = 2 * k + 1
    V = [list(range(i * b, (i + 1) * b)) for i in range(L)]
    return [edge(x, y) for x, y in zip(V[0], V[1])], [edge(x, y) for x, y in zip(V[2], V[3])]


def even_cycle_blown_positions(k: int) -> list[int]:
    """Cycle positions (1-based) replaced by classes: 3, 6, 8, ..., 2k."""
    return [3] + list(range(6, 2 * k + 1, 2))


def even_cycle_lower(k: int, n_target: Optional[int] = None, b: Optional[int] = None) -> ColoredGraph:
    """Blow-up of C_{2k} at positions 3, 6, 8, ..., 2k; edges v1v2 and v4v5 share color 0.

    Every copy of C_{2k} winds once around the cycle and so uses both
    equal-colored edges.  ``k = 2`` delegates to :func:`c4_lower`.
    """
    if k == 2:
        if n_target is None:
            raise ConstructionError("the k = 2 case is c4_lower and needs n_target")
        return c4_lower(n_target)
    if k < 2:
        raise ConstructionError("even_cycle_lower needs k >= 2")
    L = 2 * k
    blown = set(even_cycle_blown_positions(k))
    b = _class_size(n_target, b, L - len(blown), len(blown))
    nm = _Namer()
    V = {i: nm.add(i, b if i in blown else 1) for i in range(1, L + 1)}
    edges, preset = [], {}
    for i in range(1, L + 1):
        j = i % L + 1
        edges += [edge(x, y) for x in V[i] for y in V[j]]
    preset[edge(V[1][0], V[2][0])] = 0
    preset[edge(V[4][0], V[5][0])] = 0
    return _finish(nm.n, edges, preset, 1)


def even_cycle_shared_edges(k: int, b: int) -> tuple[tuple, tuple]:
    """Vertex ids of the edges v1v2 and v4v5 in :func:`even_cycle_lower` output."""
    blown = set(even_cycle_blown_positions(k))
    start, pos = {}, 0
    for i in range(1, 2 * k + 1):
        start[i] = pos
        pos += b if i in blown else 1
    return edge(start[1], start[2]), edge(start[4], start[5])


# ---------------------------------------------------------------------------
# C4


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % d for d in range(2, math.isqrt(q) + 1))


def projective_points(q: int) -> list[tuple[int, int, int]]:
    """Normalized representatives of the points of PG(2, q): first non-zero coordinate is 1."""
    pts = [(1, y, z) for y in range(q) for z in range(q)]
    pts += [(0, 1, z) for z in range(q)]
    pts.append((0, 0, 1))
    return pts


def polarity_graph(q: int) -> ColoredGraph:
    """Points of PG(2, q), ``x ~ y`` iff ``x . y = 0 (mod q)``, loops dropped.

    Any two points share at most one orthogonal point, so the graph has no C4.
    """
    if not _is_prime(q):
        raise ValueError(f"q={q} is not prime")
    pts = projective_points(q)
    edges = []
    for i, x in enumerate(pts):
        for j in range(i + 1, len(pts)):
            y = pts[j]
            if (x[0] * y[0] + x[1] * y[1] + x[2] * y[2]) % q == 0:
                edges.append((i, j))
    return ColoredGraph(len(pts), tuple(edges))


def c4_free_layer(m: int) -> ColoredGraph:
    """Polarity graph for the largest prime q with q^2 + q + 1 <= m; C5 when m < 7."""
    if m < 5:
        raise ConstructionError("the C4-free layer needs at least 5 vertices")
    q = max((q for q in range(2, math.isqrt(m) + 1) if _is_prime(q) and q * q + q + 1 <= m), default=None)
    if q is None:
        return pat.cycle(5).as_graph()
    return polarity_graph(q)


def c4_lower(n_target: int) -> ColoredGraph:
    """Two copies of a C4-free layer joined by a perfect matching of color 0.

    Layer vertex ``v`` is ``v`` in the first copy and ``v + s`` in the second.
    """
    if n_target < 10:
        raise ConstructionError("c4_lower needs n_target >= 10")
    layer = c4_free_layer(n_target // 2)
    s = layer.n
    edges = list(layer.edges) + [(u + s, v + s) for u, v in layer.edges]
    preset = {}
    for v in range(s):
        edges.append((v, v + s))
        preset[(v, v + s)] = 0
    return _finish(2 * s, edges, preset, 1)


# ---------------------------------------------------------------------------
# disjoint components


def _is_triangle(h: Pattern) -> bool:
    return h.t == 3 and h.m == 3


def disjoint_components(h: Pattern, n_target: Optional[int] = None, b: Optional[int] = None) -> ColoredGraph:
    """``b`` vertex-disjoint copies of each component of ``h``, every copy of a component colored alike.

    Each component gets a minimum proper edge coloring, so the palette is the
    largest chromatic index m of a component; since ``h`` has more than m
    edges no copy of ``h`` can be rainbow.
    """
    if h.m == 0:
        raise ConstructionError("pattern has no edges")
    if pat.is_star(pat.Pattern(h.t, h.edges)) or _is_triangle(h):
        raise ConstructionError(f"{h.name} is a star or a triangle: every proper coloring of a copy is rainbow")
    comps = h.components()
    b = _class_size(n_target, b, 0, h.t)
    edges, preset = [], {}
    offset = 0
    palette = 0
    for comp in comps:
        idx = {v: i for i, v in enumerate(comp)}
        sub_edges = [(idx[u], idx[v]) for u, v in h.edges if u in idx]
        sub = Pattern(len(comp), tuple(sub_edges))
        coloring = pat.minimum_edge_coloring(sub)
        palette = max(palette, len(set(coloring.values())))
        for _ in range(b):
            for (u, v), c in coloring.items():
                e = (u + offset, v + offset)
                edges.append(e)
                preset[e] = c
            offset += len(comp)
    if palette >= h.m:
        raise ConstructionError(f"{h.name}: palette {palette} is not smaller than the edge count")
    return ColoredGraph(offset, tuple(edges), preset)


# ---------------------------------------------------------------------------
# trees


def tree_core(t: Pattern) -> tuple[list[int], list]:
    """Vertices and edges of the tree with all leaves deleted."""
    lv = set(pat.leaves(t))
    verts = [v for v in range(t.t) if v not in lv]
    return verts, [e for e in t.edges if e[0] not in lv and e[1] not in lv]


def _independent_pair(edges: list) -> Optional[tuple]:
    for i, e in enumerate(edges):
        for f in edges[i + 1:]:
            if not set(e) & set(f):
                return e, f
    return None


def find_bare_path(t: Pattern) -> Optional[tuple[int, int, int, int]]:
    """A path v1 v2 v3 v4 with deg(v2) = deg(v3) = 2 and deg(v1) != 2, or None."""
    for v1 in range(t.t):
        if t.degree(v1) == 2:
            continue
        for v2 in sorted(t.adj[v1]):
            if t.degree(v2) != 2:
                continue
            (v3,) = t.adj[v2] - {v1}
            if t.degree(v3) != 2:
                continue
            (v4,) = t.adj[v3] - {v2}
            return v1, v2, v3, v4
    return None


def _check_tree(t: Pattern) -> None:
    if not pat.is_tree(t):
        raise ConstructionError(f"{t.name} is not a tree")
    if pat.is_star(t):
        raise ConstructionError(f"{t.name} is a star: every proper coloring of a star is rainbow, so the count is 0")
    if pat.is_double_star(t):
        raise ConstructionError(f"{t.name} is a double star: its count is only linear in n")


def tree_strategy(t: Pattern) -> str:
    """``'P5'``, ``'A'`` (leaf blow-up), ``'B'`` (core is a star) or ``'C'`` (bare path).

    Bare paths are used when ``t > 4*leaves - 3``, else the leaf blow-up when
    the leafless core has two independent edges, else the star-core gadget.
    """
    _check_tree(t)
    if t.t == 5 and t.m == 4 and all(t.degree(v) <= 2 for v in range(5)):
        return "P5"
    ell = len(pat.leaves(t))
    if t.t > 4 * ell - 3:
        return "C"
    _, core_edges = tree_core(t)
    return "A" if _independent_pair(core_edges) else "B"


@dataclass
class TreeGadget:
    """A tree host before coloring: which pattern vertices got which host vertices."""

    n: int
    edges: list
    preset: dict
    palette_start: int
    classes: dict = field(default_factory=dict)  # pattern vertex -> host vertices


def _blow_up_leaves(t: Pattern, chosen: list[int], b: int) -> tuple[ColoredGraph, dict]:
    g = t.as_graph()
    classes = {v: [v] for v in range(t.t)}
    for v in chosen:
        classes[v] = blow_up_clones(g, v, b)
        g = blow_up(g, v, b)
    return g, classes


def tree_leaf_blowup(t: Pattern, n_target: Optional[int] = None, b: Optional[int] = None) -> ColoredGraph:
    """Every leaf replaced by ``b`` copies; two independent core edges share color 0."""
    _check_tree(t)
    _, core_edges = tree_core(t)
    pair = _independent_pair(core_edges)
    if pair is None:
        raise ConstructionError(f"{t.name}: the leafless core has no two independent edges")
    lv = pat.leaves(t)
    b = _class_size(n_target, b, t.t - len(lv), len(lv))
    g, _ = _blow_up_leaves(t, lv, b)
    return extend_coloring_greedy(g.with_colors({pair[0]: 0, pair[1]: 0}), start=1)


def star_core_roles(t: Pattern) -> tuple[int, int, int, int]:
    """``(u, v, w, v')`` for the star-core gadget.

    ``u`` is the core center, ``v`` a core leaf of least degree in ``t``,
    ``w`` another core leaf and ``v'`` a leaf neighbor of ``v``.
    """
    _check_tree(t)
    core, core_edges = tree_core(t)
    if _independent_pair(core_edges):
        raise ConstructionError(f"{t.name}: the leafless core is not a star")
    cdeg = {v: sum(v in e for e in core_edges) for v in core}
    u = max(core, key=lambda v: (cdeg[v], -v))
    core_leaves = sorted(v for v in core if v != u)
    v = min(core_leaves, key=lambda x: (t.degree(x), x))
    w = next(x for x in core_leaves if x != v)
    vp = min(x for x in t.adj[v] if t.degree(x) == 1)
    return u, v, w, vp


def tree_star_case(t: Pattern, n_target: Optional[int] = None, b: Optional[int] = None) -> ColoredGraph:
    """Leaves not adjacent to ``v`` replaced by ``b`` copies; ``uw`` and ``vv'`` share color 0."""
    u, v, w, vp = star_core_roles(t)
    chosen = [x for x in pat.leaves(t) if x not in t.adj[v]]
    if not chosen:
        raise ConstructionError(f"{t.name}: every leaf hangs off v")
    b = _class_size(n_target, b, t.t - len(chosen), len(chosen))
    g, _ = _blow_up_leaves(t, chosen, b)
    return extend_coloring_greedy(g.with_colors({edge(u, w): 0, edge(v, vp): 0}), start=1)


def bare_path_gadget(t: Pattern, b: int) -> TreeGadget:
    """The bare-path construction before the greedy extension.

    ``v2`` and ``v3`` become ``u_1..u_b`` and ``u'_1..u'_b`` with edges
    ``v1 u_i``, ``u_i u'_i``, ``u'_i v4``; then every leaf of ``t`` other than
    ``v1``, ``v4`` is replaced by ``b`` copies; then the remaining degree-2
    vertices are visited in breadth-first order from ``v1`` and replaced by
    ``b`` copies while their degree is still 2.  ``v1 u_i`` and ``u'_i v4``
    get color ``i``, every ``u_i u'_i`` gets color ``b``.
    """
    bp = find_bare_path(t)
    if bp is None:
        raise ConstructionError(f"{t.name} has no bare path")
    v1, v2, v3, v4 = bp
    nbrs = {x: set(t.adj[x]) for x in range(t.t)}
    classes = {x: [x] for x in range(t.t)}
    nxt = t.t
    U = [v2] + list(range(nxt, nxt + b - 1))
    nxt += b - 1
    Up = [v3] + list(range(nxt, nxt + b - 1))
    nxt += b - 1
    classes[v2], classes[v3] = U, Up

    # host adjacency keyed by host vertex; start from t minus the bare path interior
    adj: dict[int, set] = {x: set() for x in range(nxt)}
    for a, c in t.edges:
        if {a, c} & {v2, v3}:
            continue
        adj[a].add(c)
        adj[c].add(a)
    preset = {}
    for i in range(b):
        for a, c, col in ((v1, U[i], i), (U[i], Up[i], b), (Up[i], v4, i)):
            adj[a].add(c)
            adj[c].add(a)
            preset[edge(a, c)] = col

    def replace(x):
        nonlocal nxt
        clones = [x] + list(range(nxt, nxt + b - 1))
        nxt += b - 1
        for cl in clones[1:]:
            adj[cl] = set()
        for y in adj[x]:
            for cl in clones[1:]:
                adj[cl].add(y)
                adj[y].add(cl)
        classes[x] = clones

    if b > 1:
        for x in pat.leaves(t):
            if x not in (v1, v4):
                replace(x)
        seen, order, dq = {v1}, [], deque([v1])
        while dq:
            x = dq.popleft()
            order.append(x)
            for y in sorted(nbrs[x]):
                if y not in seen:
                    seen.add(y)
                    dq.append(y)
        for x in order:
            if t.degree(x) == 2 and x not in (v2, v3) and len(adj[x]) == 2:
                replace(x)
    edges = sorted({edge(a, c) for a in adj for c in adj[a]})
    return TreeGadget(nxt, edges, preset, b + 1, classes)


def tree_bare_path(t: Pattern, n_target: Optional[int] = None, b: Optional[int] = None) -> ColoredGraph:
    _check_tree(t)
    if find_bare_path(t) is None:
        raise ConstructionError(f"{t.name} has no bare path")
    if b is None:
        if n_target is None:
            raise ConstructionError("give n_target or b")
        # vertex count is affine in b for b >= 2
        n2, n3 = bare_path_gadget(t, 2).n, bare_path_gadget(t, 3).n
        b = _class_size(n_target, None, n2 - 2 * (n3 - n2), n3 - n2)
    elif n_target is not None and bare_path_gadget(t, b).n > n_target:
        raise ConstructionError(f"b={b} does not fit in {n_target} vertices")
    gad = bare_path_gadget(t, b)
    return _finish(gad.n, gad.edges, gad.preset, gad.palette_start)


def tree_lower(t: Pattern, n_target: Optional[int] = None, b: Optional[int] = None,
               strategy: Optional[str] = None) -> ColoredGraph:
    """Rainbow-T-free host for a tree that is neither a star nor a double star.

    ``strategy`` forces ``'A'``, ``'B'`` or ``'C'``; by default it is chosen
    by :func:`tree_strategy`, and P5 is handled by :func:`path_lower`.
    """
    s = strategy or tree_strategy(t)
    if s == "P5":
        return path_lower(5, n_target, b)
    try:
        fn = {"A": tree_leaf_blowup, "B": tree_star_case, "C": tree_bare_path}[s]
    except KeyError:
        raise ConstructionError(f"unknown tree strategy {s!r}") from None
    return fn(t, n_target, b)


# ---------------------------------------------------------------------------
# cliques and P4


def clique_part_sizes(r: int, n: int) -> list[int]:
    q, rem = divmod(n, r)
    return [q + (1 if i < rem else 0) for i in range(r)]


def clique_lower(r: int, n_target: Optional[int] = None, b: Optional[int] = None) -> ColoredGraph:
    """Parts S_1..S_r; matchings S_1-S_2 and S_3-S_4 all of color 0; other part pairs complete."""
    if r < 4:
        raise ConstructionError("clique_lower needs r >= 4")
    if b is not None:
        sizes = [_class_size(n_target, b, 0, r)] * r
    else:
        if n_target is None or n_target < r:
            raise ConstructionError(f"clique_lower needs at least {r} vertices")
        sizes = clique_part_sizes(r, n_target)
    nm = _Namer()
    S = [nm.add(i, s) for i, s in enumerate(sizes)]
    edges, preset = [], {}
    for i in range(r):
        for j in range(i + 1, r):
            if (i, j) in ((0, 1), (2, 3)):
                for x, y in zip(S[i], S[j]):
                    edges.append((x, y))
                    preset[(x, y)] = 0
            else:
                edges += [(x, y) for x in S[i] for y in S[j]]
    return _finish(nm.n, edges, preset, 1)


def k4_matching_coloring(vs) -> dict:
    """The 3-edge-coloring of K4 on ``vs`` whose color classes are its perfect matchings."""
    a, b, c, d = vs
    return {edge(a, b): 0, edge(c, d): 0, edge(a, c): 1, edge(b, d): 1, edge(a, d): 2, edge(b, c): 2}


def p4_extremal(n_target: int) -> ColoredGraph:
    """floor(n/4) disjoint K4s colored by perfect matchings, plus isolated vertices."""
    if n_target < 0:
        raise ConstructionError("n_target must be non-negative")
    colors = {}
    for i in range(n_target // 4):
        colors.update(k4_matching_coloring(range(4 * i, 4 * i + 4)))
    return ColoredGraph(n_target, tuple(colors), colors)


# ---------------------------------------------------------------------------
# specs


FAMILIES = {
    "path-lower": "PathLower",
    "odd-cycle-lower": "OddCycleLower",
    "even-cycle-lower": "EvenCycleLower",
    "c4-lower": "C4Lower",
    "disjoint-components": "DisjointComponents",
    "tree-lower": "TreeLower",
    "tree-leaf-blowup": "TreeLeafBlowup",
    "tree-star-case": "TreeStarCase",
    "tree-bare-path": "TreeBarePath",
    "clique-lower": "CliqueLower",
    "p4-extremal": "P4Extremal",
}

# the statement each family certifies
CLAIMS = {
    "path-lower": "ex(n,P_k,rainbow-P_k) = Omega(n^floor(k/2)) for k >= 5",
    "odd-cycle-lower": "ex(n,C_2k+1,rainbow-C_2k+1) = Omega(n^(2k-1)) for k >= 2",
    "even-cycle-lower": "ex(n,C_2k,rainbow-C_2k) = Omega(n^(k-1)) for k >= 2",
    "c4-lower": "ex(n,C_4,rainbow-C_4) = Omega(n^(3/2))",
    "disjoint-components": "ex(n,H,rainbow-H) = Omega(n^c) for H with c components, not a star or triangle",
    "tree-lower": "ex(n,T,rainbow-T) = Omega(n^ceil(t/4)) for trees that are neither stars nor double stars",
    "tree-leaf-blowup": "ex(n,T,rainbow-T) = Omega(n^ceil(t/4)): leaf blow-up case",
    "tree-star-case": "ex(n,T,rainbow-T) = Omega(n^ceil(t/4)): star-core case",
    "tree-bare-path": "ex(n,T,rainbow-T) = Omega(n^ceil(t/4)): bare-path case",
    "clique-lower": "ex(n,K_r,rainbow-K_r) = Omega(n^(r-2)) for r >= 4",
    "p4-extremal": "ex(n,P_4,rainbow-P_4) = 12 floor(n/4)",
}


@dataclass(frozen=True)
class ConstructionSpec:
    family: str
    k: Optional[int] = None
    r: Optional[int] = None
    pattern: Optional[str] = None  # pattern literal for the component/tree families
    n_target: Optional[int] = None
    b: Optional[int] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ConstructionError(f"unknown family {self.family!r}; choose from {sorted(FAMILIES)}")

    def _need(self, name):
        val = getattr(self, name)
        if val is None:
            raise ConstructionError(f"{self.family} needs --{name}")
        return val

    def target_pattern(self) -> Pattern:
        f = self.family
        if f == "path-lower":
            return pat.path(self._need("k"))
        if f == "odd-cycle-lower":
            return pat.cycle(2 * self._need("k") + 1)
        if f == "even-cycle-lower":
            return pat.cycle(2 * self._need("k"))
        if f == "c4-lower":
            return pat.cycle(4)
        if f == "clique-lower":
            return pat.clique(self._need("r"))
        if f == "p4-extremal":
            return pat.path(4)
        return pat.parse_pattern(self._need("pattern"))

    def build(self) -> ColoredGraph:
        f, n, b = self.family, self.n_target, self.b
        builders: dict[str, Callable[[], ColoredGraph]] = {
            "path-lower": lambda: path_lower(self._need("k"), n, b),
            "odd-cycle-lower": lambda: odd_cycle_lower(self._need("k"), n, b),
            "even-cycle-lower": lambda: even_cycle_lower(self._need("k"), n, b),
            "c4-lower": lambda: c4_lower(self._need("n_target")),
            "disjoint-components": lambda: disjoint_components(self.target_pattern(), n, b),
            "tree-lower": lambda: tree_lower(self.target_pattern(), n, b),
            "tree-leaf-blowup": lambda: tree_lower(self.target_pattern(), n, b, "A"),
            "tree-star-case": lambda: tree_lower(self.target_pattern(), n, b, "B"),
            "tree-bare-path": lambda: tree_lower(self.target_pattern(), n, b, "C"),
            "clique-lower": lambda: clique_lower(self._need("r"), n, b),
            "p4-extremal": lambda: p4_extremal(self._need("n_target")),
        }
        try:
            return builders[f]()
        except (ValueError, StopIteration) as exc:
            if isinstance(exc, ConstructionError):
                raise
            raise ConstructionError(str(exc)) from exc

    def provenance(self) -> dict:
        params = {k: v for k, v in (("k", self.k), ("r", self.r), ("pattern", self.pattern),
                                    ("n_target", self.n_target), ("b", self.b)) if v is not None}
        return {"family": FAMILIES[self.family], "claim": CLAIMS[self.family], "params": params}
