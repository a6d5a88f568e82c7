"""Container and primitive-algorithm tests for the graphs module."""

import random

import pytest

from longcycles import CycleSeq, Graph, Multigraph, Path
from longcycles.errors import InvalidInput, UnknownVertex
from longcycles.graphs import (
    ball,
    minimum_cycle,
    multigraph_union,
    shortest_path,
    suppress_degree_two,
)

from helpers import all_simple_cycles, cycle_graph, random_graph


def test_graph_vertex_and_edge_basics():
    g = Graph()
    g.add_vertex(3)
    g.add_vertex(3)
    g.add_edge(1, 2)
    assert g.vertices() == [1, 2, 3]
    assert g.edges() == [(1, 2)]
    assert g.has_edge(2, 1)
    assert g.degree(3) == 0
    assert g.neighbors(1) == [2]


def test_graph_rejects_bad_edges():
    g = Graph(edges=[(0, 1)])
    with pytest.raises(InvalidInput):
        g.add_edge(4, 4)
    with pytest.raises(InvalidInput):
        g.add_edge(0, 1)
    with pytest.raises(InvalidInput):
        g.add_edge(-1, 2)
    with pytest.raises(InvalidInput):
        g.add_edge(True, 2)
    with pytest.raises(UnknownVertex):
        g.neighbors(9)


def test_graph_removal_views():
    g = cycle_graph(5)
    assert g.without_vertices([0]).edges() == [(1, 2), (2, 3), (3, 4)]
    assert g.without_edges([(1, 0)]).m == 4
    # absent targets are ignored, unknown induced ids are not
    assert g.without_vertices([99]) == g
    assert g.without_edges([(0, 2)]) == g
    with pytest.raises(UnknownVertex):
        g.induced([0, 99])
    sub = g.induced([0, 1, 2])
    assert sub.edges() == [(0, 1), (1, 2)]


def test_components_and_forest():
    g = Graph(edges=[(0, 1), (2, 3), (3, 4)])
    g.add_vertex(9)
    assert g.components() == [(0, 1), (2, 3, 4), (9,)]
    assert g.is_forest()
    g.add_edge(4, 2)
    assert not g.is_forest()


def test_path_and_cycleseq_canonical_forms():
    p = Path([4, 2, 7])
    assert p.endpoints == (4, 7)
    assert p.reverse().vertices == (7, 2, 4)
    assert p.edges() == [(2, 4), (2, 7)]
    with pytest.raises(InvalidInput):
        Path([1, 2, 1])

    # same cycle written four ways collapses to one canonical tuple
    forms = [CycleSeq(seq) for seq in ([2, 5, 9, 4], [9, 4, 2, 5], [4, 9, 5, 2], [5, 2, 4, 9])]
    assert len({c.vertices for c in forms}) == 1
    assert forms[0].vertices[0] == 2
    assert forms[0].vertices[1] == min(forms[0].vertices[1], forms[0].vertices[-1])
    with pytest.raises(InvalidInput):
        CycleSeq([1, 2, 1])


def test_cycleseq_short_forms_encode_loop_and_parallel():
    assert CycleSeq([7]).edges() == [(7, 7)]
    assert CycleSeq([3, 1]).edges() == [(1, 3), (1, 3)]


def test_shortest_path_is_lex_smallest():
    # two geodesics 0-1-3 and 0-2-3; the lex-smaller one must win
    g = Graph(edges=[(0, 1), (0, 2), (1, 3), (2, 3)])
    assert shortest_path(g, 0, 3).vertices == (0, 1, 3)
    assert shortest_path(g, 0, 0).vertices == (0,)
    assert shortest_path(Graph(vertices=[0, 1]), 0, 1) is None


def test_shortest_path_random_agrees_with_bfs_distance():
    for seed in range(30):
        g = random_graph(10, 0.3, seed)
        rng = random.Random(seed)
        s, t = rng.sample(g.vertices(), 2)
        p = shortest_path(g, s, t)
        # naive BFS distance
        dist = {s: 0}
        frontier = [s]
        while frontier:
            nxt = []
            for v in frontier:
                for w in g.neighbors(v):
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        nxt.append(w)
            frontier = nxt
        if t not in dist:
            assert p is None
        else:
            assert p.length == dist[t]


def test_minimum_cycle_simple_graph():
    assert minimum_cycle(cycle_graph(7)).length == 7
    assert minimum_cycle(Graph(edges=[(0, 1), (1, 2)])) is None
    # triangle beats the enclosing square
    g = Graph(edges=[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    assert minimum_cycle(g).length == 3


def test_minimum_cycle_matches_enumeration():
    for seed in range(40):
        g = random_graph(9, 0.25, seed)
        cycles = all_simple_cycles(g)
        got = minimum_cycle(g)
        if not cycles:
            assert got is None
        else:
            assert got.length == min(c.length for c in cycles)
            assert got in cycles


def test_minimum_cycle_multigraph_prefers_loop_then_parallel():
    m = Multigraph(edges=[(0, 1), (0, 1), (2, 2)])
    assert minimum_cycle(m).vertices == (2,)
    m2 = Multigraph(edges=[(0, 1), (0, 1), (1, 2), (2, 0)])
    assert minimum_cycle(m2).vertices == (0, 1)
    m3 = Multigraph(edges=[(0, 1), (1, 2), (2, 0)])
    assert minimum_cycle(m3).length == 3


def test_multigraph_accounting():
    m = Multigraph(edges=[(1, 2), (2, 1), (3, 3)])
    assert m.multiplicity(1, 2) == 2
    assert m.degree(3) == 2  # loop counts twice
    assert m.loops() == [3]
    assert m.edge_count() == 3
    assert m.underlying_graph().edges() == [(1, 2)]
    u = multigraph_union(m, Multigraph(edges=[(1, 2), (4, 5)]))
    assert u.multiplicity(1, 2) == 3
    assert u.has_vertex(4)


def test_ball_growth():
    g = cycle_graph(10)
    assert ball(g, [0], 0) == frozenset({0})
    assert ball(g, [0], 2) == frozenset({8, 9, 0, 1, 2})
    assert ball(g, [0, 5], 1) == frozenset({9, 0, 1, 4, 5, 6})


def test_suppress_degree_two_theta():
    # theta graph: branch vertices 0 and 1, three paths of lengths 2, 3, 1
    m = Multigraph(edges=[(0, 2), (2, 1), (0, 3), (3, 4), (4, 1), (0, 1)])
    cubic, submap = suppress_degree_two(m)
    assert cubic.vertices() == [0, 1]
    assert cubic.multiplicity(0, 1) == 3
    assert submap[(0, 1)] == ((0, 1), (0, 2, 1), (0, 3, 4, 1))


def test_suppress_degree_two_loop_component():
    # a lone cycle has no branch vertices and must be reported as such
    from longcycles.errors import BareCycleComponent

    c5 = Multigraph(edges=[(i, (i + 1) % 5) for i in range(5)])
    with pytest.raises(BareCycleComponent):
        suppress_degree_two(c5)


def test_suppress_degree_two_subdivided_edge():
    # K4 with one edge subdivided twice contracts back to K4
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (4, 5), (5, 3)]
    cubic, submap = suppress_degree_two(Multigraph(edges=edges))
    assert cubic.vertices() == [0, 1, 2, 3]
    assert cubic.multiplicity(2, 3) == 1
    assert submap[(2, 3)] == ((2, 4, 5, 3),)


def test_suppress_degree_two_contracts_to_loop():
    # dumbbell: two cycles joined by a path contracts to two loops plus
    # a bridge between the two surviving branch vertices
    edges = (
        [(0, 1), (1, 2), (2, 0)]
        + [(2, 3)]
        + [(3, 4), (4, 5), (5, 3)]
    )
    m = Multigraph(edges=edges)
    for v in (0, 1, 4, 5):
        assert m.degree(v) == 2
    cubic, submap = suppress_degree_two(m)
    assert cubic.vertices() == [2, 3]
    assert cubic.multiplicity(2, 2) == 1
    assert cubic.multiplicity(2, 3) == 1
    assert submap[(2, 2)] == ((2, 0, 1, 2),)
