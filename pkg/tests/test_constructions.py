import networkx as nx
import pytest

import matrix
from rainbow_turan import cge
from rainbow_turan import constructions as C
from rainbow_turan.census import count_copies, enumerate_copies, find_rainbow_copy
from rainbow_turan.graph import edge, validate_proper
from rainbow_turan.patterns import clique, cycle, double_star, matching, path, spider, star

CASES = matrix.cases()


@pytest.mark.parametrize("label,build,h,b,bound", CASES, ids=[c[0] for c in CASES])
def test_proper_and_rainbow_free(label, build, h, b, bound):
    g = build()
    assert validate_proper(g) == []
    assert find_rainbow_copy(g, h) is None


@pytest.mark.parametrize("label,build,h,b,bound", [c for c in CASES if c[4] is not None],
                         ids=[c[0] for c in CASES if c[4] is not None])
def test_count_lower_bounds(label, build, h, b, bound):
    assert count_copies(build(), h) >= bound


def test_path_k5_small_target():
    g = C.path_lower(5, n_target=8)
    assert g.n == 8
    assert count_copies(g, path(5)) >= 4
    assert find_rainbow_copy(g, path(5)) is None


def test_path_rejects_short_paths_and_tiny_targets():
    with pytest.raises(C.ConstructionError):
        C.path_lower(4, b=2)
    with pytest.raises(C.ConstructionError):
        C.path_lower(5, n_target=4)


def test_path_copies_repeat_a_gadget_color():
    k, b = 6, 3
    g = C.path_lower(k, b=b)

    def visit(e):
        cols = [c for c in e.colors if c < b]
        assert len(cols) != len(set(cols))

    assert enumerate_copies(g, path(k), visit).visited == count_copies(g, path(k))


def test_path_measured_counts():
    # exact counts recorded for reference; only the lower bound is claimed
    assert [count_copies(C.path_lower(6, b=b), path(6)) for b in (1, 2, 3)] == [1, 22, 87]


def test_odd_cycle_example():
    g = C.odd_cycle_lower(2, b=2)
    assert g.n == 10
    assert count_copies(g, cycle(5)) >= 8


@pytest.mark.parametrize("b", [1, 2, 3])
def test_odd_cycle_minus_matching_is_bipartite(b):
    g = C.odd_cycle_lower(2, b=b)
    for mt in C.odd_cycle_matchings(2, b):
        assert all(g.color(*e) == 0 for e in mt)
        assert nx.is_bipartite(g.without_edges(mt).to_networkx())


def test_odd_cycle_rejects_triangle():
    with pytest.raises(C.ConstructionError):
        C.odd_cycle_lower(1, b=2)


def test_even_cycle_copies_use_both_shared_edges():
    g = C.even_cycle_lower(3, b=3)
    e1, e2 = C.even_cycle_shared_edges(3, 3)
    assert g.color(*e1) == g.color(*e2) == 0

    def visit(e):
        assert e1 in e.edges and e2 in e.edges

    assert enumerate_copies(g, cycle(6), visit).visited >= 4


def test_even_cycle_too_small():
    with pytest.raises(C.ConstructionError):
        C.even_cycle_lower(3, n_target=5)


def test_even_cycle_k2_is_c4_lower():
    assert C.even_cycle_lower(2, n_target=14) == C.c4_lower(14)


@pytest.mark.parametrize("q", [2, 3, 5])
def test_polarity_graph_has_no_c4(q):
    layer = C.polarity_graph(q)
    assert layer.n == q * q + q + 1
    assert count_copies(layer, cycle(4)) == 0


@pytest.mark.parametrize("n", [10, 14, 26])
def test_c4_count_at_least_layer_edges(n):
    g = C.c4_lower(n)
    layer = C.c4_free_layer(n // 2)
    assert count_copies(g, cycle(4)) >= layer.m


def test_disjoint_m2_example():
    g = C.disjoint_components(matching(2), b=3)
    assert g.m == 6 and g.n == 12 and set(g.colors.values()) == {0}
    assert count_copies(g, matching(2)) == 15
    assert find_rainbow_copy(g, matching(2)) is None


@pytest.mark.parametrize("h", [star(3), clique(3), path(3)])
def test_disjoint_rejects_stars_and_triangles(h):
    with pytest.raises(C.ConstructionError):
        C.disjoint_components(h, b=2)


@pytest.mark.parametrize("t,strategy", [
    (path(6), "C"), (path(7), "C"), (spider(2, 2, 2), "B"), (matrix.CATERPILLAR, "A"), (path(5), "P5"),
])
def test_tree_strategy_selection(t, strategy):
    assert C.tree_strategy(t) == strategy


@pytest.mark.parametrize("t", [star(4), double_star(2, 3), path(4), cycle(5)])
def test_tree_rejections(t):
    with pytest.raises(C.ConstructionError):
        C.tree_lower(t, b=2)


def test_bare_path_gadget_counts_grow():
    assert count_copies(C.tree_lower(path(6), b=3), path(6)) >= 3
    g2, g3 = C.bare_path_gadget(path(7), 2), C.bare_path_gadget(path(7), 3)
    assert g3.n > g2.n


def test_clique_every_k4_uses_both_matchings():
    g = C.clique_lower(4, b=3)
    sizes = [3, 3, 3, 3]
    S = [set(range(sum(sizes[:i]), sum(sizes[:i + 1]))) for i in range(4)]

    def visit(e):
        assert any(u in S[0] and v in S[1] for u, v in e.edges)
        assert any(u in S[2] and v in S[3] for u, v in e.edges)

    assert enumerate_copies(g, clique(4), visit).visited == 9


def test_clique_rejects_triangles():
    with pytest.raises(C.ConstructionError):
        C.clique_lower(3, n_target=30)


@pytest.mark.parametrize("n,expected", [(3, 0), (4, 12), (9, 24)])
def test_p4_extremal_counts(n, expected):
    g = C.p4_extremal(n)
    assert g.n == n and count_copies(g, path(4)) == expected
    assert find_rainbow_copy(g, path(4)) is None


@pytest.mark.parametrize("family,kw", [
    ("path-lower", dict(k=6, n_target=30)), ("odd-cycle-lower", dict(k=2, n_target=25)),
    ("even-cycle-lower", dict(k=3, n_target=20)), ("c4-lower", dict(n_target=30)),
    ("disjoint-components", dict(pattern="M3", n_target=18)), ("tree-lower", dict(pattern="P7", n_target=30)),
    ("clique-lower", dict(r=5, n_target=20)), ("p4-extremal", dict(n_target=13)),
])
def test_specs_are_deterministic_and_fit(family, kw):
    spec = C.ConstructionSpec(family, **kw)
    g1, g2 = spec.build(), spec.build()
    assert cge.dumps(g1) == cge.dumps(g2)
    assert g1.n <= kw["n_target"]
    assert validate_proper(g1) == []
    prov = spec.provenance()
    assert prov["family"] == C.FAMILIES[family] and prov["claim"]


def test_preset_colors_below_greedy_palette():
    b = 3
    g = C.path_lower(5, b=b)
    assert set(range(b + 1)) <= g.palette
    assert min(c for c in g.colors.values() if c > b) == b + 1


def test_spec_needs_params():
    with pytest.raises(C.ConstructionError):
        C.ConstructionSpec("path-lower", n_target=20).build()
    with pytest.raises(C.ConstructionError):
        C.ConstructionSpec("no-such-family")


def test_edge_helper_used_in_matchings():
    assert C.odd_cycle_matchings(2, 2)[0] == [edge(0, 2), edge(1, 3)]
