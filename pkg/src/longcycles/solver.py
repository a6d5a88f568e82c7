"""End-to-end solver: k disjoint long cycles or a bounded transversal.

Given a graph, a target count k and a length threshold l, solve returns
either a Packing of k vertex-disjoint cycles of length at least l, or a
Transversal of at most transversal_bound(l, k) vertices meeting every such
cycle.  The route follows the constructive duality: medium-length cycles
are peeled off by induction on k; otherwise a skeleton is grown, and its
branch structure either yields a packing outright or is cut into a forest,
leaving a small transversal.

Every branch re-checks the facts it relies on and raises
InternalContradiction instead of returning an unsound certificate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .bounds import cubic_packing_threshold, transversal_bound
from .errors import InternalContradiction, InvalidInput
from .forest_cut import CutSet, forest_cut, transversal_part
from .graphs import CycleSeq, Graph
from .oracle import OracleBudget, find_cycle_in_range, find_long_cycle_through
from .packing import cycles_in_cubic
from .skeleton import Skeleton, build_skeleton, restrict_incident_edges

__all__ = [
    "Packing",
    "Transversal",
    "Result",
    "SolveTrace",
    "TraceLevel",
    "solve",
    "exceptional_vertices",
    "assemble_transversal",
    "transversal_bound",
    "cubic_packing_threshold",
]


@dataclass(frozen=True)
class Packing:
    """k pairwise disjoint cycles, each of length at least l."""

    cycles: tuple[CycleSeq, ...]


@dataclass(frozen=True)
class Transversal:
    """A vertex set meeting every cycle of length at least l, with the
    bound its size was promised to respect."""

    vertices: frozenset[int]
    bound: float


Result = Union[Packing, Transversal]


@dataclass(frozen=True)
class TraceLevel:
    """One recursion level: which branch fired and the sizes it saw."""

    k: int
    branch: str
    detail: str
    h_vertices: int | None = None
    degree_three: int | None = None
    cut_elements: int | None = None
    exceptional: int | None = None
    bound: float = 0.0

    def line(self) -> str:
        parts = [f"k={self.k}", f"branch={self.branch}", f"detail={self.detail}"]
        if self.h_vertices is not None:
            parts.append(f"h={self.h_vertices}")
        if self.degree_three is not None:
            parts.append(f"v3={self.degree_three}")
        if self.cut_elements is not None:
            parts.append(f"cut={self.cut_elements}")
        if self.exceptional is not None:
            parts.append(f"z={self.exceptional}")
        parts.append(f"bound={self.bound:g}")
        return " ".join(parts)


@dataclass
class SolveTrace:
    """Recursion log, one level per induction step, outermost first."""

    levels: list[TraceLevel] = field(default_factory=list)

    def text(self) -> str:
        return "\n".join(level.line() for level in self.levels) + "\n"


def _packing(cycles, l: int) -> Packing:
    ordered = tuple(sorted(cycles, key=lambda c: c.vertices))
    seen: set[int] = set()
    for c in ordered:
        if c.length < l:
            raise InternalContradiction(
                f"packed cycle of length {c.length}, below {l}"
            )
        overlap = seen & set(c.vertices)
        if overlap:
            raise InternalContradiction(
                f"packed cycles overlap at {sorted(overlap)}"
            )
        seen |= set(c.vertices)
    return Packing(ordered)


def _transversal(vertices, l: int, k: int) -> Transversal:
    bound = transversal_bound(l, k)
    if len(vertices) > bound:
        raise InternalContradiction(
            f"transversal of size {len(vertices)} exceeds bound {bound}"
        )
    return Transversal(frozenset(vertices), bound)


def exceptional_vertices(
    restricted: Graph,
    skel: Skeleton,
    budget: OracleBudget | None = None,
) -> tuple[frozenset[int], dict[int, CycleSeq]]:
    """Degree-2 skeleton vertices that some long cycle meets alone.

    For each such vertex z the witness is a cycle of length >= l touching
    the skeleton exactly at z.  Witnesses are pairwise disjoint; overlap
    would contradict the absence of long H-paths and raises
    InternalContradiction.  Degree-3 vertices cannot qualify because the
    restricted graph leaves them with skeleton edges only, which is checked.
    """
    hverts = skel.graph.vertex_set()
    for v in sorted(skel.degree_three):
        stray = [w for w in restricted.neighbors(v) if w not in hverts]
        if stray:
            raise InternalContradiction(
                f"degree-3 vertex {v} kept non-skeleton neighbours {stray}"
            )
    witnesses: dict[int, CycleSeq] = {}
    l = skel.l
    for z in sorted(skel.degree_two):
        local = restricted.without_vertices(hverts - {z})
        cycle = find_long_cycle_through(local, z, l, budget)
        if cycle is not None:
            witnesses[z] = cycle
    claimed: set[int] = set()
    for z in sorted(witnesses):
        overlap = claimed & set(witnesses[z].vertices)
        if overlap:
            raise InternalContradiction(
                f"witness cycles of exceptional vertices overlap at {sorted(overlap)}"
            )
        claimed |= set(witnesses[z].vertices)
    return frozenset(witnesses), witnesses


def assemble_transversal(
    skel: Skeleton, cut: CutSet, exceptional: frozenset[int], k: int
) -> frozenset[int]:
    """Degree-3 set, cut cover, and exceptional vertices, bound-checked.

    The size must stay under (5/2) * cubic_packing_threshold(k) + 2k, which
    in turn never exceeds transversal_bound(l, k).
    """
    out = set(skel.degree_three) | set(transversal_part(skel, cut)) | set(exceptional)
    ceiling = 2.5 * cubic_packing_threshold(k) + 2 * k
    if len(out) >= ceiling:
        raise InternalContradiction(
            f"transversal of size {len(out)} reached its ceiling {ceiling}"
        )
    return frozenset(out)


def solve(
    g: Graph,
    k: int,
    l: int,
    budget: OracleBudget | None = None,
    trace: SolveTrace | None = None,
) -> Result:
    """Either k disjoint cycles of length >= l or a transversal of them.

    The transversal case never exceeds transversal_bound(l, k) vertices.
    Worst-case exponential through the exact searches; intended for graphs
    of desk size, with the budget as a hard brake.  Pass a SolveTrace to
    collect one log line per recursion level.
    """
    if not isinstance(g, Graph):
        raise InvalidInput("solve expects a Graph")
    if k < 1:
        raise InvalidInput(f"k must be at least 1, got {k}")
    if l < 3:
        raise InvalidInput(f"l must be at least 3, got {l}")

    def log(level: TraceLevel) -> None:
        if trace is not None:
            trace.levels.append(level)

    bound = transversal_bound(l, k)

    if k == 1:
        cycle = find_cycle_in_range(g, l, None, budget)
        if cycle is not None:
            log(TraceLevel(1, "base", "long-cycle", bound=bound))
            return _packing([cycle], l)
        log(TraceLevel(1, "base", "no-long-cycle", bound=bound))
        return _transversal(frozenset(), l, 1)

    medium = find_cycle_in_range(g, l, 6 * l, budget)
    if medium is not None:
        log(TraceLevel(k, "reduce", f"cycle-of-{medium.length}", bound=bound))
        rest = solve(g.without_vertices(medium.vertices), k - 1, l, budget, trace)
        if isinstance(rest, Packing):
            return _packing(list(rest.cycles) + [medium], l)
        return _transversal(rest.vertices | set(medium.vertices), l, k)

    skel = build_skeleton(g, l, budget)
    h_n = skel.graph.n
    v3 = len(skel.degree_three)
    if len(skel.bare_cycles) >= k:
        log(TraceLevel(k, "packing", "bare-cycles", h_n, v3, bound=bound))
        return _packing(skel.bare_cycles[:k], l)
    if v3 >= cubic_packing_threshold(k):
        log(TraceLevel(k, "packing", "cubic", h_n, v3, bound=bound))
        return _packing(cycles_in_cubic(skel, k, True, budget), l)

    restricted = restrict_incident_edges(g, skel)
    cut = forest_cut(restricted, skel, k, budget)
    exceptional, witnesses = exceptional_vertices(restricted, skel, budget)
    if len(exceptional) >= k:
        log(
            TraceLevel(
                k, "forest-cut", "exceptional-packing", h_n, v3,
                cut.size, len(exceptional), bound,
            )
        )
        return _packing([witnesses[z] for z in sorted(exceptional)[:k]], l)
    log(
        TraceLevel(
            k, "forest-cut", "transversal", h_n, v3,
            cut.size, len(exceptional), bound,
        )
    )
    return _transversal(assemble_transversal(skel, cut, exceptional, k), l, k)
