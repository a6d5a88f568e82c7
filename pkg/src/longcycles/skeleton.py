"""Skeleton construction: a maximal subgraph with degrees in {2, 3} and no
short cycle, grown by two augmentation moves until neither applies.

The two moves are: adopt a long cycle disjoint from the current skeleton, or
adopt an addable H-path (a path between two degree-2 skeleton vertices whose
interior avoids the skeleton).  A path is addable when it creates no cycle
shorter than l, that is when its length plus the skeleton distance of its
endpoints reaches l, or when its endpoints sit in different components.

At the fixed point, every H-path between degree-2 vertices has length below
l minus the skeleton distance of its endpoints, and every long cycle of the
host meets the skeleton.  Those consequences are what the projection and
forest-cut stages rely on.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Union

from .errors import InternalContradiction, InvalidInput
from .graphs import (
    CycleSeq,
    Graph,
    Multigraph,
    Path,
    minimum_cycle,
    suppress_degree_two,
)
from .oracle import OracleBudget, _Counter, find_cycle_in_range

__all__ = [
    "Skeleton",
    "DisjointCycleAugmentation",
    "PathAugmentation",
    "Augmentation",
    "build_skeleton",
    "find_augmentation",
    "assemble_skeleton",
    "restrict_incident_edges",
    "decompose",
]


@dataclass(frozen=True)
class DisjointCycleAugmentation:
    """A long cycle sharing no vertex with the skeleton; adopted whole."""

    cycle: CycleSeq


@dataclass(frozen=True)
class PathAugmentation:
    """An addable H-path; endpoints gain degree 3, interior joins with degree 2."""

    path: Path


Augmentation = Union[DisjointCycleAugmentation, PathAugmentation]


@dataclass(frozen=True)
class Skeleton:
    """A fixed skeleton of a host graph, decomposed for later stages.

    bare_cycles are the components without degree-3 vertices.  The remaining
    components contract (by suppressing degree-2 vertices) to a 3-regular
    multigraph whose vertex set is exactly the degree-3 set; subdivision_map
    sends each surviving multigraph edge key to the tuple of original vertex
    sequences it stands for, one per parallel instance.
    """

    host: Graph
    graph: Graph
    l: int
    degree_two: frozenset[int]
    degree_three: frozenset[int]
    bare_cycles: tuple[CycleSeq, ...]
    cubic: Multigraph = field(repr=False)
    subdivision_map: dict = field(repr=False)


def _component_cycle(h: Graph, comp: tuple[int, ...]) -> CycleSeq:
    """The unique cycle of a connected all-degree-2 component."""
    start = comp[0]
    seq = [start]
    prev = None
    cur = start
    while True:
        a, b = h.neighbors(cur)
        nxt = a if a != prev else b
        if nxt == start:
            break
        seq.append(nxt)
        prev, cur = cur, nxt
    if len(seq) != len(comp):
        raise InternalContradiction(
            f"degree-2 component {comp} did not close into one cycle"
        )
    return CycleSeq(seq)


def assemble_skeleton(g: Graph, h: Graph, l: int) -> Skeleton:
    """Package a subgraph as a Skeleton, checking its structural invariants.

    Checks that h is a subgraph of g, all degrees are 2 or 3, and no cycle
    of h is shorter than l.  Does not check maximality; build_skeleton is
    the fixed-point constructor.
    """
    for v in h.vertices():
        if not g.has_vertex(v):
            raise InvalidInput(f"skeleton vertex {v} not in host")
        if h.degree(v) not in (2, 3):
            raise InvalidInput(
                f"skeleton vertex {v} has degree {h.degree(v)}, expected 2 or 3"
            )
    for u, v in h.edges():
        if not g.has_edge(u, v):
            raise InvalidInput(f"skeleton edge {{{u},{v}}} not in host")
    mc = minimum_cycle(h)
    if mc is not None and mc.length < l:
        raise InvalidInput(
            f"skeleton has a cycle of length {mc.length}, below {l}"
        )
    d2 = frozenset(v for v in h.vertices() if h.degree(v) == 2)
    d3 = h.vertex_set() - d2
    bare = []
    branched: set[int] = set()
    for comp in h.components():
        if any(v in d3 for v in comp):
            branched.update(comp)
        else:
            bare.append(_component_cycle(h, comp))
    if branched:
        mg = Multigraph(vertices=branched)
        for u, v in h.edges():
            if u in branched:
                mg.add_edge(u, v)
        cubic, submap = suppress_degree_two(mg)
    else:
        cubic, submap = Multigraph(), {}
    return Skeleton(
        host=g,
        graph=h,
        l=l,
        degree_two=d2,
        degree_three=frozenset(d3),
        bare_cycles=tuple(sorted(bare, key=lambda c: c.vertices)),
        cubic=cubic,
        subdivision_map=submap,
    )


# -- H-path search helpers ------------------------------------------------


def _aux_neighbors(g: Graph, ext: set[int], s: int, t: int, direct_ok: bool, x: int):
    """Neighbors of x in the implicit graph exterior + {s, t}.

    Endpoints connect only into the exterior, plus each other when the host
    has a direct edge that is not a skeleton edge.
    """
    adj = g._adj
    if x == s or x == t:
        other = t if x == s else s
        for w in adj[x]:
            if w in ext:
                yield w
        if direct_ok and other in adj[x]:
            yield other
    else:
        for w in adj[x]:
            if w in ext or w == s or w == t:
                yield w


def _shortest_hpath(g: Graph, ext: set[int], s: int, t: int, direct_ok: bool) -> Path | None:
    """Lexicographically smallest shortest H-path from s to t, or None."""
    dist = {t: 0}
    queue = deque([t])
    while queue:
        u = queue.popleft()
        if u == s:
            continue
        for w in _aux_neighbors(g, ext, s, t, direct_ok, u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    if s not in dist:
        return None
    seq = [s]
    cur = s
    remaining = dist[s]
    while cur != t:
        cur = min(
            w
            for w in _aux_neighbors(g, ext, s, t, direct_ok, cur)
            if dist.get(w) == remaining - 1
        )
        seq.append(cur)
        remaining -= 1
    return Path(seq)


def _hpath_at_least(
    g: Graph,
    ext: set[int],
    s: int,
    t: int,
    need: int,
    direct_ok: bool,
    counter: _Counter,
) -> Path | None:
    """Shortest H-path from s to t of length >= need; exhaustive search.

    Used only when the BFS-shortest path is too short to be addable, which
    makes a long detour through the exterior the remaining hope.
    """
    adj = g._adj
    best: Path | None = None
    path = [s]
    on_path = {s}

    def room_for(candidate: int) -> bool:
        # Upper bound on a completed length through candidate, pruning
        # branches that cannot reach the threshold.
        seen = {candidate}
        queue = deque([candidate])
        touches_t = t in adj[candidate]
        while queue:
            u = queue.popleft()
            counter.tick()
            for w in adj[u]:
                if w in ext and w not in on_path and w not in seen:
                    seen.add(w)
                    queue.append(w)
                    if t in adj[w]:
                        touches_t = True
        return touches_t and len(path) + len(seen) + 1 >= need

    def extend(head: int) -> None:
        nonlocal best
        counter.tick()
        if best is not None and best.length == need:
            return
        can_close = g.has_edge(head, t) and (head != s or direct_ok)
        if can_close:
            length = len(path)
            if length >= need and (best is None or length < best.length):
                best = Path(path + [t])
        for w in sorted(adj[head]):
            if w not in ext or w in on_path:
                continue
            if best is not None and len(path) + 1 >= best.length:
                break
            if best is None and not room_for(w):
                continue
            path.append(w)
            on_path.add(w)
            extend(w)
            path.pop()
            on_path.remove(w)

    extend(s)
    return best


def _find_augmentation_graph(
    g: Graph, h: Graph, l: int, budget: OracleBudget | None
) -> Augmentation | None:
    hverts = h.vertex_set()
    exterior_graph = g.without_vertices(hverts)
    cyc = find_cycle_in_range(exterior_graph, max(l, 3), None, budget)
    if cyc is not None:
        return DisjointCycleAugmentation(cyc)
    if not hverts:
        return None
    ext = set(exterior_graph._adj)
    d2 = sorted(v for v in hverts if h.degree(v) == 2)
    counter = _Counter(budget)
    best: tuple[int, tuple[int, ...], Path] | None = None
    for s in d2:
        adj_s = g._adj[s]
        # Arrival lengths of candidate H-paths from s: chords first, then
        # one sweep through the exterior covers every other endpoint.
        arrival: dict[int, int] = {}
        for t in adj_s:
            if t in hverts and t > s and not h.has_edge(s, t):
                arrival[t] = 1
        starts = sorted(w for w in adj_s if w in ext)
        if not arrival and not starts:
            continue
        if starts:
            dist_ext = {w: 1 for w in starts}
            queue = deque(starts)
            while queue:
                u = queue.popleft()
                du = dist_ext[u]
                for w in g._adj[u]:
                    if w in ext:
                        if w not in dist_ext:
                            dist_ext[w] = du + 1
                            queue.append(w)
                    elif w != s and (w not in arrival or du + 1 < arrival[w]):
                        arrival[w] = du + 1
        dist_h = {s: 0}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in h._adj[u]:
                if w not in dist_h:
                    dist_h[w] = dist_h[u] + 1
                    queue.append(w)
        for t in sorted(arrival):
            if t <= s or h.degree(t) != 2:
                continue
            direct_ok = g.has_edge(s, t) and not h.has_edge(s, t)
            d = dist_h.get(t)
            if d is None or arrival[t] + d >= l:
                # shortest is addable; rebuild it only if it can still win
                if best is not None and arrival[t] > best[0]:
                    continue
                candidate = _shortest_hpath(g, ext, s, t, direct_ok)
            else:
                if best is not None and best[0] < l - d:
                    continue
                candidate = _hpath_at_least(
                    g, ext, s, t, l - d, direct_ok, counter
                )
            if candidate is None:
                continue
            key = (candidate.length, candidate.vertices)
            if best is None or key < (best[0], best[1]):
                best = (candidate.length, candidate.vertices, candidate)
    if best is None:
        return None
    return PathAugmentation(best[2])


def find_augmentation(
    g: Graph, skel: Skeleton | Graph, l: int, budget: OracleBudget | None = None
) -> Augmentation | None:
    """One applicable augmentation move, or None at the fixed point.

    Prefers a disjoint long cycle; otherwise returns the shortest addable
    H-path, ties broken lexicographically on the vertex sequence.
    """
    h = skel.graph if isinstance(skel, Skeleton) else skel
    return _find_augmentation_graph(g, h, l, budget)


def build_skeleton(g: Graph, l: int, budget: OracleBudget | None = None) -> Skeleton:
    """Grow a skeleton to the augmentation fixed point.

    Intended for hosts with no cycle of length in [l, 6l]; under that
    precondition every cycle of the result is longer than 6l, which later
    stages assert.
    """
    if l < 3:
        raise InvalidInput(f"l must be at least 3, got {l}")
    h = Graph()
    while True:
        move = _find_augmentation_graph(g, h, l, budget)
        if move is None:
            break
        if isinstance(move, DisjointCycleAugmentation):
            vs = move.cycle.vertices
            for v in vs:
                h.add_vertex(v)
            for i in range(len(vs)):
                h.add_edge(vs[i], vs[(i + 1) % len(vs)])
        else:
            vs = move.path.vertices
            for v in vs:
                h.add_vertex(v)
            for i in range(len(vs) - 1):
                h.add_edge(vs[i], vs[i + 1])
    return assemble_skeleton(g, h, l)


def restrict_incident_edges(g: Graph, skel: Skeleton) -> Graph:
    """Drop every non-skeleton edge touching a degree-3 skeleton vertex.

    In the result, degree-3 vertices have exactly their three skeleton
    edges, so every proper H-path ends in the degree-2 set.  A transversal
    of the result extends to one of g by adding the degree-3 set, which the
    final assembly does.
    """
    drop = []
    for v in sorted(skel.degree_three):
        for w in g.neighbors(v):
            if not skel.graph.has_edge(v, w):
                drop.append((v, w))
    return g.without_edges(drop)


def decompose(
    skel: Skeleton,
) -> tuple[tuple[CycleSeq, ...], Multigraph, dict]:
    """The skeleton's bare cycles, contracted 3-regular multigraph, and
    subdivision map, as computed at assembly time."""
    return skel.bare_cycles, skel.cubic, skel.subdivision_map
