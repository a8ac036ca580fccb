import random

import pytest
from hypothesis import given, settings, strategies as st

from rainbow_turan import constructions as C
from rainbow_turan.census import find_rainbow_copy
from rainbow_turan.graph import ColoredGraph, blow_up, edge, extend_coloring_greedy, validate_proper
from rainbow_turan.lemma import (
    AlternatingPath, LemmaInconsistency, LemmaInstance, NotFound, check_path, close_rainbow_odd_cycle,
    find_rainbow_alternating_path, random_instance,
)
from rainbow_turan.patterns import cycle


def test_two_anchors_one_middle():
    g = ColoredGraph(3, ((0, 2), (1, 2)), {(0, 2): 0, (1, 2): 1})
    inst = LemmaInstance(g, (0, 1))
    assert inst.required_common == 1 and inst.precondition_holds
    p = find_rainbow_alternating_path(inst)
    assert p.vertices == (0, 2, 1) and p.colors == (0, 1)


@settings(max_examples=100)
@given(st.integers(2, 4), st.integers(0, 2**32 - 1))
def test_random_instances_succeed(k, seed):
    inst = random_instance(k, random.Random(seed))
    assert validate_proper(inst.g) == []
    p = find_rainbow_alternating_path(inst)
    assert check_path(inst, p) == []
    assert not p.backtracked
    assert p.max_forbidden <= inst.forbidden_bound


def starved():
    # v1 = 0, v2 = 1, middle 2; A holds every color at v1
    g = ColoredGraph(3, ((0, 2), (1, 2)), {(0, 2): 0, (1, 2): 1})
    return LemmaInstance(g, (0, 1), forbidden_colors={0})


def test_precondition_violation_reported():
    with pytest.raises(NotFound) as info:
        find_rainbow_alternating_path(starved())
    assert info.value.stuck_index is None and not info.value.precondition_met
    assert info.value.deficits == [(0, 1, 3)]


def test_best_effort_reports_stuck_index():
    with pytest.raises(NotFound) as info:
        find_rainbow_alternating_path(starved(), best_effort=True)
    assert info.value.stuck_index == 0


def test_anchor_validation():
    g = ColoredGraph(3, ((0, 1),), {(0, 1): 0})
    with pytest.raises(ValueError):
        LemmaInstance(g, (0, 0))
    with pytest.raises(ValueError):
        LemmaInstance(g, (0, 7))


def test_u_may_contain_anchors():
    g = ColoredGraph(3, ((0, 2), (1, 2)), {(0, 2): 0, (1, 2): 1})
    inst = LemmaInstance(g, (0, 1), forbidden_vertices={0})
    p = find_rainbow_alternating_path(inst, best_effort=True)
    assert check_path(inst, p) == []


def c5_blowup(b):
    g = cycle(5).as_graph()
    for v in range(5):
        g = blow_up(g, v, b)
    return extend_coloring_greedy(g)


def test_closes_rainbow_c5_in_complete_blowup():
    g = c5_blowup(8)
    assert find_rainbow_copy(g, cycle(5)) is not None
    cyc = close_rainbow_odd_cycle(g, (0, 2, 4))
    assert len(cyc.vertices) == 5 and len(set(cyc.colors)) == 5
    ring = cyc.vertices + (cyc.vertices[0],)
    assert all(g.has_edge(a, b) for a, b in zip(ring, ring[1:]))


def test_triangle_closes():
    g = extend_coloring_greedy(ColoredGraph(3, ((0, 1), (1, 2), (0, 2))))
    cyc = close_rainbow_odd_cycle(g, (0, 1), best_effort=True)
    assert sorted(cyc.vertices) == [0, 1, 2] and len(set(cyc.colors)) == 3


def test_odd_cycle_construction_blocks_the_lemma():
    b = 3
    g = C.odd_cycle_lower(2, b=b)
    # anchors in V0, V2, V4; both routes through V1 and V3 meet color 0
    with pytest.raises(NotFound):
        close_rainbow_odd_cycle(g, (0, 2 * b, 4 * b), extra_colors={0}, best_effort=True)


def adversarial():
    """Anchors 0..3 where the third connector step sees 11 forbidden common neighbors.

    The first two steps pick u1 = 4 and u2 = 5 with colors 0..3 on the path.
    Blockers 6, 7, 8 reuse colors 0, 1, 2 at v3 and 9..12 reuse colors 0..3 at
    v4, so together with v1, v2, u1, u2 the pair (v3, v4) has 11 forbidden
    common neighbors, above |U| + 2|A| + 5k - 10 = 10.
    """
    col = {}
    fresh = iter(range(100, 10000))

    def add(u, v, c):
        col[edge(u, v)] = c

    v1, v2, v3, v4, u1, u2 = range(6)
    add(v1, u1, 0), add(u1, v2, 1), add(v2, u2, 2), add(u2, v3, 3)
    for x in (v1, v2, u1, u2):
        for a in (v3, v4):
            if edge(x, a) not in col:
                add(x, a, next(fresh))
    for x, c in zip((6, 7, 8), (0, 1, 2)):
        add(x, v3, c)
        add(x, v4, next(fresh))
    for y, c in zip((9, 10, 11, 12), (0, 1, 2, 3)):
        add(y, v4, c)
        add(y, v3, next(fresh))
    n = 13
    for a, b in ((v1, v2), (v2, v3)):
        have = sum(1 for x in range(n) if x not in (a, b) and edge(x, a) in col and edge(x, b) in col)
        for _ in range(11 - have):
            add(n, a, next(fresh))
            add(n, b, next(fresh))
            n += 1
    return LemmaInstance(ColoredGraph(n, tuple(col), col), (v1, v2, v3, v4))


def test_greedy_can_exceed_forbidden_bound():
    inst = adversarial()
    assert validate_proper(inst.g) == []
    assert inst.precondition_holds and inst.forbidden_bound == 10
    with pytest.raises(LemmaInconsistency, match="11 forbidden"):
        find_rainbow_alternating_path(inst)
    p = find_rainbow_alternating_path(inst, strict_bound=False)
    assert p.backtracked and p.forbidden_counts[-1] == 11
    assert check_path(inst, p) == []


def test_check_path_flags_problems():
    inst = LemmaInstance(ColoredGraph(3, ((0, 2), (1, 2)), {(0, 2): 0, (1, 2): 0}), (0, 1))
    assert "not rainbow" in check_path(inst, AlternatingPath((0, 2, 1), (0, 0), True))
