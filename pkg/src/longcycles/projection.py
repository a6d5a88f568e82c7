"""Projection of paths and cycles onto a skeleton.

An H-path is a path meeting the skeleton exactly in its endpoints; skeleton
edges count as trivial H-paths.  Because the skeleton has no cycle of length
2l or below, two skeleton vertices joined by an H-path are joined inside the
skeleton by a unique path of length at most l, the projection.  A cycle
touching the skeleton at two or more vertices splits into H-paths, and its
projection is the multigraph union of their projections.

Two facts drive the solver: a cycle whose projection vertex set induces a
tree in the skeleton is short, and a cycle whose projection has an edge of
odd multiplicity is long.
"""

from __future__ import annotations

from collections import deque

from .errors import InvalidInput, NoProjection, NotEnoughContact
from .graphs import CycleSeq, Graph, Multigraph, Path, shortest_path
from .oracle import _Counter
from .skeleton import Skeleton

__all__ = [
    "path_projection",
    "decompose_cycle",
    "cycle_projection",
    "is_even",
    "induces_tree",
    "enumerate_proper_hpaths",
    "connected_hpath_pairs",
    "is_pi_preserving",
]


def _projection_between(h: Graph, l: int, s: int, t: int) -> Path:
    p = shortest_path(h, s, t)
    if p is None or p.length > l:
        raise NoProjection(
            f"no skeleton path of length at most {l} between {s} and {t}"
        )
    return p


def path_projection(skel: Skeleton, path: Path) -> Path:
    """The unique short skeleton path joining the endpoints of an H-path."""
    h = skel.graph
    s, t = path.endpoints
    if not h.has_vertex(s) or not h.has_vertex(t):
        raise InvalidInput(f"H-path endpoints {s}, {t} must be skeleton vertices")
    for v in path.vertices[1:-1]:
        if h.has_vertex(v):
            raise InvalidInput(f"H-path interior vertex {v} lies on the skeleton")
    if path.length == 1 and h.has_edge(s, t):
        return Path((s, t))
    return _projection_between(h, skel.l, s, t)


def decompose_cycle(skel: Skeleton, cycle: CycleSeq) -> tuple[Path, ...]:
    """Split a cycle into the H-paths between consecutive skeleton visits.

    Requires at least two skeleton vertices on the cycle; a cycle meeting
    the skeleton once or not at all has no decomposition and raises
    NotEnoughContact.
    """
    h = skel.graph
    vs = cycle.vertices
    marks = [i for i, v in enumerate(vs) if h.has_vertex(v)]
    if len(marks) < 2:
        raise NotEnoughContact(
            f"cycle meets the skeleton in {len(marks)} vertices, need at least 2"
        )
    segments = []
    for j, start in enumerate(marks):
        stop = marks[(j + 1) % len(marks)]
        seq = [vs[start]]
        i = start
        while i != stop:
            i = (i + 1) % len(vs)
            seq.append(vs[i])
        segments.append(Path(seq))
    return tuple(segments)


def cycle_projection(skel: Skeleton, cycle: CycleSeq) -> Multigraph:
    """Multigraph union of the projections of the cycle's H-paths."""
    out = Multigraph()
    for seg in decompose_cycle(skel, cycle):
        proj = path_projection(skel, seg)
        for u, v in proj.edges():
            out.add_edge(u, v)
    return out


def is_even(m: Multigraph) -> bool:
    """Whether every edge multiplicity is even."""
    return all(mult % 2 == 0 for _, _, mult in m.edge_items())


def induces_tree(skel: Skeleton, m: Multigraph) -> bool:
    """Whether the skeleton subgraph induced on the projection's vertices is
    a tree."""
    verts = m.vertices()
    if not verts:
        return True
    sub = skel.graph.induced(verts)
    return len(sub.components()) == 1 and sub.is_forest()


# -- proper H-path enumeration --------------------------------------------


def enumerate_proper_hpaths(
    g: Graph, h: Graph, counter: _Counter | None = None
) -> list[Path]:
    """All proper H-paths of g relative to the skeleton graph h.

    A proper H-path runs between two skeleton vertices with every interior
    vertex off the skeleton; a non-skeleton edge between two skeleton
    vertices counts with length 1.  Each path is reported once, oriented
    from its smaller endpoint.  Exhaustive, so worst-case exponential in
    the exterior size; the counter caps the work.
    """
    if counter is None:
        counter = _Counter(None)
    hset = h.vertex_set()
    adj = g._adj
    out: list[Path] = []
    for s in sorted(hset & set(adj)):
        path = [s]
        on_path = {s}

        def extend(head: int) -> None:
            counter.tick()
            for w in sorted(adj[head]):
                if w in hset:
                    if w > s and (len(path) >= 2 or not h.has_edge(s, w)):
                        out.append(Path(path + [w]))
                    continue
                if w in on_path:
                    continue
                path.append(w)
                on_path.add(w)
                extend(w)
                path.pop()
                on_path.remove(w)

        extend(s)
    return out


def connected_hpath_pairs(g: Graph, skel: Skeleton) -> set[tuple[int, int]]:
    """Endpoint pairs (s, t), s < t, joined by at least one proper H-path.

    Found without path enumeration: two skeleton vertices are joined exactly
    when they touch a common component of g minus the skeleton, or share a
    non-skeleton edge.
    """
    h = skel.graph
    hset = h.vertex_set()
    pairs: set[tuple[int, int]] = set()
    exterior = [v for v in g.vertices() if v not in hset]
    seen: set[int] = set()
    for root in exterior:
        if root in seen:
            continue
        comp = {root}
        attach: set[int] = set()
        queue = deque([root])
        seen.add(root)
        while queue:
            u = queue.popleft()
            for w in g._adj[u]:
                if w in hset:
                    attach.add(w)
                elif w not in seen:
                    seen.add(w)
                    comp.add(w)
                    queue.append(w)
        for s in attach:
            for t in attach:
                if s < t:
                    pairs.add((s, t))
    for u, v in g.edges():
        if u in hset and v in hset and not h.has_edge(u, v):
            pairs.add((min(u, v), max(u, v)))
    return pairs


def is_pi_preserving(g: Graph, skel: Skeleton, cut) -> bool:
    """Whether every H-path surviving the cut projects inside the cut graph.

    The cut is anything exposing vertex_elements and edge_elements.  Only
    endpoint pairs matter, as the projection of an H-path depends on its
    endpoints alone; trivial H-paths project to themselves and cannot
    violate preservation.
    """
    xv = set(cut.vertex_elements)
    xe = set(cut.edge_elements)
    g2 = g.without_vertices(xv).without_edges(xe)
    for s, t in sorted(connected_hpath_pairs(g2, skel)):
        proj = _projection_between(skel.graph, skel.l, s, t)
        if any(v in xv for v in proj.vertices):
            return False
        if any(e in xe for e in proj.edges()):
            return False
    return True
