"""Exact-search oracle tests against naive enumeration."""

import pytest

from longcycles import (
    BudgetExhausted,
    Graph,
    OracleBudget,
    find_cycle_in_range,
    find_long_cycle_through,
    max_disjoint_long_cycles,
    min_long_cycle_transversal,
)

from helpers import (
    brute_max_disjoint,
    brute_min_transversal,
    complete_graph,
    cycle_graph,
    disjoint_union,
    long_cycles,
    random_graph,
)


def test_find_cycle_in_range_small_cases():
    g = cycle_graph(8)
    assert find_cycle_in_range(g, 3, None).length == 8
    assert find_cycle_in_range(g, 8, 8).length == 8
    assert find_cycle_in_range(g, 9, None) is None
    assert find_cycle_in_range(g, 3, 7) is None
    assert find_cycle_in_range(Graph(vertices=[0]), 3, None) is None


def test_find_cycle_in_range_respects_window():
    for seed in range(30):
        g = random_graph(10, 0.3, seed)
        lengths = sorted({c.length for c in long_cycles(g, 3)})
        for lo, hi in ((3, 4), (4, None), (5, 6), (3, None)):
            got = find_cycle_in_range(g, lo, hi)
            want = [x for x in lengths if x >= lo and (hi is None or x <= hi)]
            if want:
                assert got is not None
                assert lo <= got.length
                assert hi is None or got.length <= hi
                # the returned sequence must be a real cycle of g
                for u, v in got.edges():
                    assert g.has_edge(u, v)
            else:
                assert got is None


def test_find_cycle_is_deterministic():
    g = random_graph(12, 0.3, 7)
    a = find_cycle_in_range(g, 4, None)
    b = find_cycle_in_range(g.copy(), 4, None)
    assert a == b


def test_find_long_cycle_through_vertex():
    two = disjoint_union(cycle_graph(5), cycle_graph(9))
    assert find_long_cycle_through(two, 0, 5).length == 5
    assert find_long_cycle_through(two, 0, 6) is None
    c = find_long_cycle_through(two, 5, 6)
    assert c.length == 9 and 5 in c
    for seed in range(20):
        g = random_graph(9, 0.3, seed)
        for v in g.vertices():
            got = find_long_cycle_through(g, v, 4)
            want = [c for c in long_cycles(g, 4) if v in c]
            assert (got is not None) == bool(want)
            if got is not None:
                assert v in got and got.length >= 4


def test_max_disjoint_long_cycles_counts():
    assert max_disjoint_long_cycles(cycle_graph(6), 3) == 1
    assert max_disjoint_long_cycles(complete_graph(9), 3) == 3
    assert max_disjoint_long_cycles(complete_graph(9), 3, cap=2) == 2
    for seed in range(15):
        g = random_graph(10, 0.25, seed)
        for l in (3, 4, 5):
            assert max_disjoint_long_cycles(g, l) == brute_max_disjoint(g, l)


def test_min_long_cycle_transversal_exact():
    assert min_long_cycle_transversal(cycle_graph(5), 3) == frozenset({0})
    assert min_long_cycle_transversal(Graph(edges=[(0, 1)]), 3) == frozenset()
    for seed in range(15):
        g = random_graph(9, 0.3, seed)
        for l in (3, 5):
            got = min_long_cycle_transversal(g, l)
            want = brute_min_transversal(g, l)
            assert len(got) == len(want)
            # the returned set really is a transversal
            assert not long_cycles(g.without_vertices(got), l)


def test_budget_exhaustion_raises():
    g = complete_graph(12)
    with pytest.raises(BudgetExhausted):
        find_cycle_in_range(g, 12, 12, budget=OracleBudget(50))
    # generous budget succeeds
    assert find_cycle_in_range(g, 12, 12, budget=OracleBudget(10 ** 7)) is not None
