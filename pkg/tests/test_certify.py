"""Certificate checking, including rejection of every defect class."""

import pytest

from longcycles import (
    CycleSeq,
    Packing,
    Transversal,
    check_certificate,
    check_packing,
    check_transversal,
)
from longcycles.certify import Verdict
from longcycles.errors import InvalidInput

from helpers import complete_graph, cycle_graph, disjoint_union


def test_verdict_from_reasons():
    assert Verdict.from_reasons([]) == Verdict(True, ())
    v = Verdict.from_reasons(["bad"])
    assert not v.valid and v.reasons == ("bad",)


def test_packing_accepts_valid_and_extra_cycles():
    g = disjoint_union(cycle_graph(5), cycle_graph(5), cycle_graph(5))
    cycles = [
        CycleSeq(range(0, 5)),
        CycleSeq(range(5, 10)),
        CycleSeq(range(10, 15)),
    ]
    assert check_packing(g, cycles, 3, 5).valid
    # more cycles than asked for is still a proof of k
    assert check_packing(g, cycles, 2, 5).valid


def test_packing_rejects_defects():
    g = disjoint_union(cycle_graph(5), cycle_graph(5))
    good = [CycleSeq(range(0, 5)), CycleSeq(range(5, 10))]

    v = check_packing(g, good[:1], 2, 5)
    assert not v.valid and "needs 2" in v.reasons[0]

    v = check_packing(g, [good[0], CycleSeq([5, 6, 7, 8, 99])], 2, 5)
    assert not v.valid and "not in the graph" in v.reasons[0]

    v = check_packing(g, [good[0], CycleSeq([5, 6, 7, 9])], 2, 5)
    assert not v.valid and "edge" in v.reasons[0]

    v = check_packing(complete_graph(5), [CycleSeq([0, 1, 2])], 1, 5)
    assert not v.valid and "below 5" in v.reasons[0]

    v = check_packing(g, [good[0], CycleSeq([0, 1, 2, 3, 4])], 2, 3)
    assert not v.valid and "share vertices" in v.reasons[0]

    v = check_packing(g, [good[0], CycleSeq([6, 7])], 2, 3)
    assert not v.valid and "fewer than 3" in v.reasons[0]


def test_transversal_checks():
    g = complete_graph(5)
    assert check_transversal(g, frozenset({0, 1, 2}), 2, 3).valid

    v = check_transversal(g, frozenset({0, 9}), 2, 3)
    assert not v.valid and "not in the graph" in v.reasons[0]

    # leaving a triangle behind is caught by the exact search
    v = check_transversal(g, frozenset({0}), 2, 3)
    assert not v.valid
    assert any("cycle" in r for r in v.reasons)

    # empty set is fine when no long cycle exists
    assert check_transversal(cycle_graph(5), frozenset(), 2, 6).valid


def test_transversal_size_against_derived_bound():
    # a huge valid hitting set: every vertex of a big empty-ish graph;
    # build enough disjoint triangles that the set must exceed f(3, 2)
    parts = [cycle_graph(3) for _ in range(50)]
    g = disjoint_union(*parts)
    everything = frozenset(g.vertices())
    v = check_transversal(g, everything, 2, 3)
    assert not v.valid
    assert any("136" in r for r in v.reasons)


def test_check_certificate_ignores_recorded_bound():
    g = complete_graph(5)
    # recorded bound is nonsense but the set itself is fine: still valid
    assert check_certificate(g, Transversal(frozenset({0, 1, 2}), 1e9), 2, 3).valid
    # recorded bound claims room but the set misses a triangle: invalid
    assert not check_certificate(g, Transversal(frozenset({0}), 1e9), 2, 3).valid


def test_check_certificate_dispatch():
    g = disjoint_union(cycle_graph(5), cycle_graph(5))
    p = Packing((CycleSeq(range(0, 5)), CycleSeq(range(5, 10))))
    assert check_certificate(g, p, 2, 5).valid
    with pytest.raises(InvalidInput):
        check_certificate(g, "not a certificate", 2, 5)
