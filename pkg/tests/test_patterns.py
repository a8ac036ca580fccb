import math

import networkx as nx
import pytest
from hypothesis import given

from brute import patterns
from rainbow_turan.graph import validate_proper
from rainbow_turan.patterns import (
    MAX_AUT_VERTICES, Pattern, UnsupportedPatternError, automorphism_count, clique, cycle, double_star,
    is_double_star, is_star, is_tree, matching, minimum_edge_coloring, parse_pattern, path, spider, star,
)


@pytest.mark.parametrize("h,aut", [
    (path(4), 2), (cycle(6), 12), (clique(4), 24), (star(5), 120), (matching(3), 48), (double_star(2, 2), 8),
])
def test_automorphism_counts(h, aut):
    assert automorphism_count(h) == aut


@given(patterns(max_t=6))
def test_automorphisms_match_networkx(h):
    g = nx.Graph()
    g.add_nodes_from(range(h.t))
    g.add_edges_from(h.edges)
    gm = nx.algorithms.isomorphism.GraphMatcher(g, g)
    assert h.aut_count == sum(1 for _ in gm.isomorphisms_iter())


def test_large_pattern_rejected():
    with pytest.raises(UnsupportedPatternError):
        automorphism_count(path(MAX_AUT_VERTICES + 1))


@pytest.mark.parametrize("text,name,t,m", [
    ("P4", "P4", 4, 3), ("C5", "C5", 5, 5), ("S3", "S3", 4, 3), ("S2.3", "S2.3", 7, 6),
    ("M2", "M2", 4, 2), ("K4", "K4", 4, 6),
])
def test_parse_families(text, name, t, m):
    h = parse_pattern(text)
    assert (h.name, h.t, h.m) == (name, t, m)


def test_parse_edge_list():
    h = parse_pattern("0-1, 1-2")
    assert h.t == 3 and h.edges == ((0, 1), (1, 2))
    assert parse_pattern("0-1/4").t == 4


@pytest.mark.parametrize("bad", ["Q3", "P3.2", "0-", "", "C2"])
def test_parse_errors(bad):
    with pytest.raises(ValueError):
        parse_pattern(bad)


def test_tree_predicates():
    assert is_star(star(4)) and is_star(path(2)) and is_star(path(3))
    assert not is_star(path(4)) and is_double_star(path(4))
    assert is_double_star(double_star(2, 3))
    assert is_tree(spider(2, 2, 2)) and not is_double_star(spider(2, 2, 2))
    assert not is_tree(cycle(4)) and not is_tree(matching(2))


@given(patterns(max_t=6))
def test_minimum_edge_coloring_is_proper_and_tight(h):
    col = minimum_edge_coloring(h)
    assert validate_proper(h.as_graph().with_colors(col)) == []
    delta = max(h.degree(v) for v in range(h.t))
    assert len(set(col.values())) in (delta, delta + 1)


def test_minimum_edge_coloring_odd_cycle_needs_three():
    assert len(set(minimum_edge_coloring(cycle(5)).values())) == 3
    assert len(set(minimum_edge_coloring(cycle(6)).values())) == 2


def test_pattern_validation():
    with pytest.raises(ValueError):
        Pattern(3, ((0, 1), (1, 0)))
    with pytest.raises(ValueError):
        Pattern(2, ((0, 2),))


def test_star_aut_is_factorial():
    assert star(4).aut_count == math.factorial(4)
