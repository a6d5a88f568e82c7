"""Generators, text formats, and certificate serialization."""

import pytest

from longcycles import CycleSeq, Packing, Transversal
from longcycles.errors import InvalidInput, ParseError
from longcycles.graphs import minimum_cycle
from longcycles.toolkit import (
    GenSpec,
    emit_certificate,
    emit_graph,
    generate,
    parse_certificate,
    parse_graph,
    random_cubic_multigraph,
    subdivided_host,
)

from helpers import all_simple_cycles


def test_generate_basic_shapes():
    k5 = generate(GenSpec("complete", (5,)))
    assert k5.n == 5 and k5.m == 10
    c9 = generate(GenSpec("cycle", (9,)))
    assert c9.n == 9 and all(c9.degree(v) == 2 for v in c9.vertices())
    th = generate(GenSpec("theta", (2, 3, 4)))
    assert th.degree(0) == 3 and th.degree(1) == 3
    assert th.m == 9
    lb = generate(GenSpec("lower_bound", (2, 4)))
    assert lb.n == 7  # complete graph on k*l - 1 vertices
    f8 = generate(GenSpec("figure_eight", (5, 7)))
    assert f8.degree(0) == 4
    assert sorted(c.length for c in all_simple_cycles(f8)) == [5, 7]


def test_generate_random_is_seeded():
    a = generate(GenSpec("random", (12, 0.3), seed=5))
    b = generate(GenSpec("random", (12, 0.3), seed=5))
    c = generate(GenSpec("random", (12, 0.3), seed=6))
    assert a == b
    assert a != c


def test_generate_random_cubic():
    g = generate(GenSpec("random_cubic", (20,), seed=3))
    assert g.n == 20
    assert all(g.degree(v) == 3 for v in g.vertices())
    assert g == generate(GenSpec("random_cubic", (20,), seed=3))


def test_generate_cages_have_their_girth():
    sizes = {5: (10, 15), 6: (14, 21), 7: (24, 36), 8: (30, 45)}
    for girth, (n, m) in sizes.items():
        g = generate(GenSpec("cage", (girth,)))
        assert (g.n, g.m) == (n, m)
        assert all(g.degree(v) == 3 for v in g.vertices())
        assert minimum_cycle(g).length == girth


def test_generate_rejects_bad_requests():
    with pytest.raises(InvalidInput):
        generate(GenSpec("nonsense", ()))
    with pytest.raises(InvalidInput):
        generate(GenSpec("cycle", (5, 6)))
    with pytest.raises(InvalidInput):
        generate(GenSpec("cycle", (2,)))
    with pytest.raises(InvalidInput):
        generate(GenSpec("theta", (1, 1, 5)))
    with pytest.raises(InvalidInput):
        generate(GenSpec("random", (10, 1.5), seed=1))
    with pytest.raises(InvalidInput):
        generate(GenSpec("cage", (9,)))
    with pytest.raises(InvalidInput):
        generate(GenSpec("random_cubic", (7,), seed=1))


def test_genspec_names():
    assert GenSpec("cage", (5,)).name() == "cage(5)"
    assert GenSpec("random", (10, 0.2), seed=4).name() == "random(10,0.2)@4"
    assert GenSpec("theta", (2, 3, 4)).name() == "theta(2,3,4)"


def test_random_cubic_multigraph_degrees():
    m = random_cubic_multigraph(10, 7)
    assert all(m.degree(v) == 3 for v in m.vertices())
    assert m == random_cubic_multigraph(10, 7)
    with pytest.raises(InvalidInput):
        random_cubic_multigraph(9, 0)


def test_subdivided_host_scales_girth():
    m = random_cubic_multigraph(10, 7)
    g = subdivided_host(m, 7)
    assert g.n == 10 + 15 * 6
    assert g.m == 15 * 7
    short = minimum_cycle(g)
    assert short is not None and short.length % 7 == 0
    # loops need 3 segments, parallels 2; a too-small split is refused
    from longcycles import Multigraph

    loopy = Multigraph(edges=[(0, 0), (0, 1), (1, 1)])
    with pytest.raises(InvalidInput):
        subdivided_host(loopy, 2)
    ok = subdivided_host(loopy, 3)
    assert all(ok.degree(v) in (2, 3) for v in ok.vertices())
    assert minimum_cycle(ok).length == 3


def test_parse_graph_round_trip():
    text = "0 1\n1 2  # a comment\n\n# full comment line\n2 0\n"
    g = parse_graph(text)
    assert g.edges() == [(0, 1), (0, 2), (1, 2)]
    assert parse_graph(emit_graph(g)) == g


def test_parse_graph_errors():
    with pytest.raises(ParseError):
        parse_graph("0 1 2\n")
    with pytest.raises(ParseError):
        parse_graph("a b\n")
    with pytest.raises(InvalidInput):
        parse_graph("3 3\n")  # loop
    with pytest.raises(InvalidInput):
        parse_graph("0 1\n1 0\n")  # duplicate


def test_certificate_golden_bytes():
    t = Transversal(frozenset({5, 0}), 160.0)
    assert (
        emit_certificate(t, 2, 5)
        == '{"bound":160,"k":2,"l":5,"type":"transversal","vertices":[0,5]}\n'
    )
    p = Packing((CycleSeq([3, 4, 5]), CycleSeq([0, 1, 2])))
    assert (
        emit_certificate(p, 2, 3)
        == '{"cycles":[[0,1,2],[3,4,5]],"k":2,"l":3,"type":"packing"}\n'
    )


def test_certificate_round_trip_is_exact():
    for result, k, l in (
        (Transversal(frozenset({2, 7, 9}), 136.0), 2, 3),
        (Packing((CycleSeq([0, 1, 2]), CycleSeq([5, 6, 7, 8]))), 2, 3),
        (Transversal(frozenset(), 0.0), 1, 3),
    ):
        text = emit_certificate(result, k, l)
        back, k2, l2 = parse_certificate(text)
        assert (back, k2, l2) == (result, k, l)
        assert emit_certificate(back, k2, l2) == text


def test_parse_certificate_errors():
    with pytest.raises(ParseError):
        parse_certificate("not json")
    with pytest.raises(ParseError):
        parse_certificate("[1,2]")
    with pytest.raises(ParseError):
        parse_certificate('{"type":"packing","k":2}')
    with pytest.raises(ParseError):
        parse_certificate('{"type":"packing","k":2,"l":3,"cycles":[["a"]]}')
    with pytest.raises(ParseError):
        parse_certificate('{"type":"mystery","k":2,"l":3}')
    with pytest.raises(ParseError):
        parse_certificate(
            '{"type":"transversal","k":2,"l":3,"bound":"x","vertices":[]}'
        )
