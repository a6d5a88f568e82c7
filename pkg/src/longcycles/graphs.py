"""Graph primitives: simple graphs, multigraphs, paths and cycles.

Vertex ids are arbitrary nonnegative integers and keep their meaning across
deletions: removing vertices or edges produces a new graph over the same id
space, so subgraphs, projections and certificates always point back at the
ids of the original instance.  Every tie-break in this module is
lexicographic on vertex ids, which is what keeps the rest of the package
deterministic.

Multigraph conventions: a loop contributes 2 to the degree of its vertex and
counts as a cycle of length 1; a pair of parallel edges counts as a cycle of
length 2; union adds multiplicities.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator

from .errors import BareCycleComponent, InvalidInput, UnknownVertex

__all__ = [
    "Graph",
    "Multigraph",
    "Path",
    "CycleSeq",
    "shortest_path",
    "minimum_cycle",
    "multigraph_union",
    "suppress_degree_two",
    "ball",
]


def _check_vertex_id(v) -> int:
    if isinstance(v, bool) or not isinstance(v, int) or v < 0:
        raise InvalidInput(f"vertex ids must be nonnegative integers, got {v!r}")
    return v


class Graph:
    """Undirected simple graph.  No loops, no parallel edges."""

    __slots__ = ("_adj",)

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable = ()):
        self._adj: dict[int, set[int]] = {}
        for v in vertices:
            self.add_vertex(v)
        for u, v in edges:
            self.add_edge(u, v)

    # -- construction -----------------------------------------------------

    def add_vertex(self, v: int) -> None:
        _check_vertex_id(v)
        self._adj.setdefault(v, set())

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise InvalidInput(f"loop at {u} not allowed in a simple graph")
        self.add_vertex(u)
        self.add_vertex(v)
        if v in self._adj[u]:
            raise InvalidInput(f"duplicate edge {{{u},{v}}}")
        self._adj[u].add(v)
        self._adj[v].add(u)

    # -- queries ----------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self._adj.values()) // 2

    def vertices(self) -> list[int]:
        return sorted(self._adj)

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self._adj)

    def has_vertex(self, v: int) -> bool:
        return v in self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def neighbors(self, v: int) -> list[int]:
        if v not in self._adj:
            raise UnknownVertex(f"vertex {v} not in graph")
        return sorted(self._adj[v])

    def degree(self, v: int) -> int:
        if v not in self._adj:
            raise UnknownVertex(f"vertex {v} not in graph")
        return len(self._adj[v])

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in self._adj:
            for v in self._adj[u]:
                if u < v:
                    out.append((u, v))
        out.sort()
        return out

    # -- copy-and-modify --------------------------------------------------

    def copy(self) -> "Graph":
        g = Graph()
        g._adj = {v: set(nbrs) for v, nbrs in self._adj.items()}
        return g

    def without_vertices(self, drop: Iterable[int]) -> "Graph":
        """New graph with the given vertices (and incident edges) removed.

        Ids absent from the graph are ignored, so repeated masking composes.
        """
        dropset = set(drop)
        g = Graph()
        g._adj = {
            v: {w for w in nbrs if w not in dropset}
            for v, nbrs in self._adj.items()
            if v not in dropset
        }
        return g

    def without_edges(self, drop: Iterable) -> "Graph":
        """New graph with the given edges removed; absent edges are ignored."""
        dropset = {(min(u, v), max(u, v)) for u, v in drop}
        g = self.copy()
        for u, v in dropset:
            if g.has_edge(u, v):
                g._adj[u].discard(v)
                g._adj[v].discard(u)
        return g

    def induced(self, keep: Iterable[int]) -> "Graph":
        keepset = set(keep)
        unknown = keepset - set(self._adj)
        if unknown:
            raise UnknownVertex(f"vertices {sorted(unknown)} not in graph")
        g = Graph()
        g._adj = {v: self._adj[v] & keepset for v in keepset}
        return g

    # -- structure --------------------------------------------------------

    def components(self) -> list[tuple[int, ...]]:
        """Connected components as sorted tuples, ordered by smallest member."""
        seen: set[int] = set()
        comps = []
        for start in sorted(self._adj):
            if start in seen:
                continue
            comp = {start}
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for w in self._adj[u]:
                    if w not in comp:
                        comp.add(w)
                        queue.append(w)
            seen |= comp
            comps.append(tuple(sorted(comp)))
        return comps

    def is_forest(self) -> bool:
        return self.m == self.n - len(self.components())

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class Multigraph:
    """Undirected multigraph with loops, stored as edge multiplicities."""

    __slots__ = ("_verts", "_mult")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable = ()):
        self._verts: set[int] = set()
        self._mult: dict[tuple[int, int], int] = {}
        for v in vertices:
            self.add_vertex(v)
        for item in edges:
            self.add_edge(*item)

    def add_vertex(self, v: int) -> None:
        _check_vertex_id(v)
        self._verts.add(v)

    def add_edge(self, u: int, v: int, count: int = 1) -> None:
        if count < 1:
            raise InvalidInput(f"edge multiplicity must be positive, got {count}")
        self.add_vertex(u)
        self.add_vertex(v)
        key = (min(u, v), max(u, v))
        self._mult[key] = self._mult.get(key, 0) + count

    @property
    def n(self) -> int:
        return len(self._verts)

    def vertices(self) -> list[int]:
        return sorted(self._verts)

    def has_vertex(self, v: int) -> bool:
        return v in self._verts

    def multiplicity(self, u: int, v: int) -> int:
        return self._mult.get((min(u, v), max(u, v)), 0)

    def degree(self, v: int) -> int:
        """Vertex degree; a loop contributes 2."""
        if v not in self._verts:
            raise UnknownVertex(f"vertex {v} not in multigraph")
        total = 0
        for (a, b), mult in self._mult.items():
            if a == v and b == v:
                total += 2 * mult
            elif a == v or b == v:
                total += mult
        return total

    def edge_items(self) -> list[tuple[int, int, int]]:
        """Sorted list of (u, v, multiplicity) with u <= v."""
        return sorted((u, v, m) for (u, v), m in self._mult.items())

    def edge_count(self) -> int:
        return sum(self._mult.values())

    def loops(self) -> list[int]:
        return sorted(v for (u, v), m in self._mult.items() if u == v)

    def copy(self) -> "Multigraph":
        g = Multigraph()
        g._verts = set(self._verts)
        g._mult = dict(self._mult)
        return g

    def without_vertices(self, drop: Iterable[int]) -> "Multigraph":
        dropset = set(drop)
        g = Multigraph()
        g._verts = self._verts - dropset
        g._mult = {
            (u, v): m
            for (u, v), m in self._mult.items()
            if u not in dropset and v not in dropset
        }
        return g

    def underlying_graph(self) -> Graph:
        """Simple graph on the same vertices; loops dropped, parallels merged."""
        g = Graph(vertices=self._verts)
        for (u, v), _ in self._mult.items():
            if u != v:
                g._adj[u].add(v)
                g._adj[v].add(u)
        return g

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Multigraph)
            and self._verts == other._verts
            and self._mult == other._mult
        )

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, edges={self.edge_count()})"


class Path:
    """A simple path given by its vertex sequence.  Length is edge count."""

    __slots__ = ("vertices",)

    def __init__(self, vertices: Iterable[int]):
        vs = tuple(_check_vertex_id(v) for v in vertices)
        if not vs:
            raise InvalidInput("a path needs at least one vertex")
        if len(set(vs)) != len(vs):
            raise InvalidInput(f"repeated vertex in path {vs}")
        self.vertices = vs

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def endpoints(self) -> tuple[int, int]:
        return (self.vertices[0], self.vertices[-1])

    def reverse(self) -> "Path":
        return Path(reversed(self.vertices))

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [
            (min(vs[i], vs[i + 1]), max(vs[i], vs[i + 1]))
            for i in range(len(vs) - 1)
        ]

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __eq__(self, other) -> bool:
        return isinstance(other, Path) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(("Path", self.vertices))

    def __repr__(self) -> str:
        return f"Path({list(self.vertices)})"


class CycleSeq:
    """A cycle as a canonical cyclic vertex sequence.

    Canonical form: rotated so the smallest id comes first, then oriented so
    the second entry is the smaller of the two neighbors of the start.  Length
    equals the number of vertices; lengths 1 and 2 encode a loop and a pair of
    parallel edges, which only make sense against a multigraph host.
    """

    __slots__ = ("vertices",)

    def __init__(self, vertices: Iterable[int]):
        vs = tuple(_check_vertex_id(v) for v in vertices)
        if not vs:
            raise InvalidInput("a cycle needs at least one vertex")
        if len(set(vs)) != len(vs):
            raise InvalidInput(f"repeated vertex in cycle {vs}")
        start = vs.index(min(vs))
        rot = vs[start:] + vs[:start]
        if len(rot) >= 3:
            rev = (rot[0],) + tuple(reversed(rot[1:]))
            rot = min(rot, rev)
        self.vertices = rot

    @property
    def length(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        """Edge multiset of the cycle, normalized endpoint order.

        A 1-cycle yields one loop entry (v, v); a 2-cycle yields the same
        pair twice, one entry per parallel edge.
        """
        vs = self.vertices
        if len(vs) == 1:
            return [(vs[0], vs[0])]
        if len(vs) == 2:
            pair = (vs[0], vs[1])
            return [pair, pair]
        out = []
        for i in range(len(vs)):
            a, b = vs[i], vs[(i + 1) % len(vs)]
            out.append((min(a, b), max(a, b)))
        return out

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __contains__(self, v: int) -> bool:
        return v in self.vertices

    def __eq__(self, other) -> bool:
        return isinstance(other, CycleSeq) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(("CycleSeq", self.vertices))

    def __repr__(self) -> str:
        return f"CycleSeq({list(self.vertices)})"


# -- traversal ------------------------------------------------------------


def _bfs_distances(
    adj: dict[int, set[int]],
    sources: Iterable[int],
    banned_edge: tuple[int, int] | None = None,
    max_depth: int | None = None,
) -> dict[int, int]:
    """BFS layer numbers from a set of sources, optionally skipping one edge."""
    dist: dict[int, int] = {}
    queue: deque[int] = deque()
    for s in sources:
        if s not in dist:
            dist[s] = 0
            queue.append(s)
    while queue:
        u = queue.popleft()
        d = dist[u]
        if max_depth is not None and d >= max_depth:
            continue
        for w in adj[u]:
            if banned_edge is not None:
                a, b = banned_edge
                if (u == a and w == b) or (u == b and w == a):
                    continue
            if w not in dist:
                dist[w] = d + 1
                queue.append(w)
    return dist


def shortest_path(g: Graph, s: int, t: int) -> Path | None:
    """Minimum-length s-t path, lexicographically smallest among the minima.

    Returns None when t is unreachable from s.  The lexicographic choice is
    made greedily against distances to t, which yields the smallest vertex
    sequence over all shortest paths.
    """
    if not g.has_vertex(s):
        raise UnknownVertex(f"vertex {s} not in graph")
    if not g.has_vertex(t):
        raise UnknownVertex(f"vertex {t} not in graph")
    if s == t:
        return Path((s,))
    dist_t = _bfs_distances(g._adj, (t,))
    if s not in dist_t:
        return None
    seq = [s]
    cur = s
    remaining = dist_t[s]
    while cur != t:
        cur = min(w for w in g._adj[cur] if dist_t.get(w) == remaining - 1)
        seq.append(cur)
        remaining -= 1
    return Path(seq)


def _lex_shortest_avoiding(
    g: Graph, s: int, t: int, banned_edge: tuple[int, int]
) -> Path | None:
    """Lexicographically smallest shortest s-t path that avoids one edge."""
    dist_t = _bfs_distances(g._adj, (t,), banned_edge=banned_edge)
    if s not in dist_t:
        return None
    a, b = banned_edge
    seq = [s]
    cur = s
    remaining = dist_t[s]
    while cur != t:
        best = None
        for w in g._adj[cur]:
            if (cur == a and w == b) or (cur == b and w == a):
                continue
            if dist_t.get(w) == remaining - 1 and (best is None or w < best):
                best = w
        seq.append(best)
        cur = best
        remaining -= 1
    return Path(seq)


def minimum_cycle(g: Graph | Multigraph) -> CycleSeq | None:
    """A shortest cycle, or None if the graph is acyclic.

    Ties go to the lexicographically smallest canonical rotation.  For a
    multigraph, a loop is a cycle of length 1 and a parallel pair a cycle of
    length 2; those are checked before any simple cycle.
    """
    if isinstance(g, Multigraph):
        loops = g.loops()
        if loops:
            return CycleSeq((loops[0],))
        for u, v, mult in g.edge_items():
            if mult >= 2:
                return CycleSeq((u, v))
        g = g.underlying_graph()
    # Girth pass: for each edge, the shortest cycle through it has length
    # 1 + dist(u, v) in the graph without that edge.  The depth cap shrinks
    # as better cycles appear.
    best_len: int | None = None
    candidates: list[tuple[int, int]] = []
    for u, v in g.edges():
        cap = None if best_len is None else best_len - 1
        dist = _bfs_distances(g._adj, (u,), banned_edge=(u, v), max_depth=cap)
        d = dist.get(v)
        if d is None:
            continue
        length = d + 1
        if best_len is None or length < best_len:
            best_len = length
            candidates = [(u, v)]
        elif length == best_len:
            candidates.append((u, v))
    if best_len is None:
        return None
    best_cycle: CycleSeq | None = None
    for u, v in candidates:
        path = _lex_shortest_avoiding(g, u, v, (u, v))
        if path is None or path.length != best_len - 1:
            continue
        cyc = CycleSeq(path.vertices)
        if best_cycle is None or cyc.vertices < best_cycle.vertices:
            best_cycle = cyc
    return best_cycle


def multigraph_union(a: Multigraph, b: Multigraph) -> Multigraph:
    """Union of two multigraphs over the same id space; multiplicities add."""
    out = a.copy()
    for v in b.vertices():
        out.add_vertex(v)
    for u, v, mult in b.edge_items():
        out.add_edge(u, v, mult)
    return out


def ball(g: Graph, sources: Iterable[int], radius: int) -> frozenset[int]:
    """All vertices within the given distance of the source set."""
    src = list(sources)
    for s in src:
        if not g.has_vertex(s):
            raise UnknownVertex(f"vertex {s} not in graph")
    if radius < 0:
        raise InvalidInput(f"radius must be nonnegative, got {radius}")
    dist = _bfs_distances(g._adj, src, max_depth=radius)
    return frozenset(dist)


# -- degree-2 suppression -------------------------------------------------


def suppress_degree_two(
    m: Multigraph,
) -> tuple[Multigraph, dict[tuple[int, int], tuple[tuple[int, ...], ...]]]:
    """Contract all degree-2 vertices of a {2,3}-degree multigraph.

    Returns the resulting 3-regular multigraph together with a subdivision
    map: for each surviving edge key (u, v) with u <= v, the tuple of
    original vertex sequences (one per parallel edge instance, sorted) whose
    contraction produced it.  Loops are keyed (v, v).

    Raises BareCycleComponent if some component has no degree-3 vertex, and
    InvalidInput if any degree is outside {2, 3}.
    """
    for v in m.vertices():
        if m.degree(v) not in (2, 3):
            raise InvalidInput(
                f"vertex {v} has degree {m.degree(v)}, expected 2 or 3"
            )
    # Edge instances carry their subdivided path, oriented from .u to .v.
    instances: list[list] = []  # [u, v, path, alive]
    incident: dict[int, set[int]] = {v: set() for v in m.vertices()}

    def new_instance(u: int, v: int, path: tuple[int, ...]) -> None:
        idx = len(instances)
        instances.append([u, v, path, True])
        incident[u].add(idx)
        incident[v].add(idx)

    for u, v, mult in m.edge_items():
        for _ in range(mult):
            new_instance(u, v, (u, v))

    alive = set(m.vertices())

    def degree(v: int) -> int:
        total = 0
        for idx in incident[v]:
            total += 2 if instances[idx][0] == instances[idx][1] else 1
        return total

    # Suppression never changes any other vertex's degree, so one sorted
    # sweep over the initial degree-2 set visits every vertex that must go.
    for v in sorted(v for v in alive if degree(v) == 2):
        ids = sorted(incident[v])
        if len(ids) == 1:
            # A lone loop: the component had no degree-3 vertex.
            raise BareCycleComponent(
                f"component of vertex {v} is a bare cycle"
            )
        i1, i2 = ids
        u1, v1, p1, _ = instances[i1]
        u2, v2, p2, _ = instances[i2]
        seq1 = p1 if v1 == v else tuple(reversed(p1))  # ends at v
        seq2 = p2 if u2 == v else tuple(reversed(p2))  # starts at v
        a, b = seq1[0], seq2[-1]
        merged = seq1 + seq2[1:]
        for idx in (i1, i2):
            iu, iv, _, _ = instances[idx]
            incident[iu].discard(idx)
            incident[iv].discard(idx)
            instances[idx][3] = False
        new_instance(a, b, merged)
        alive.remove(v)

    cubic = Multigraph(vertices=alive)
    grouped: dict[tuple[int, int], list[tuple[int, ...]]] = {}
    for u, v, path, ok in instances:
        if not ok:
            continue
        key = (min(u, v), max(u, v))
        if u == v:
            oriented = min(path, tuple(reversed(path)))
        elif u <= v:
            oriented = path
        else:
            oriented = tuple(reversed(path))
        cubic.add_edge(*key)
        grouped.setdefault(key, []).append(oriented)
    submap = {key: tuple(sorted(paths)) for key, paths in grouped.items()}
    for v in cubic.vertices():
        if cubic.degree(v) != 3:
            raise InvalidInput(f"suppression left vertex {v} with degree {cubic.degree(v)}")
    return cubic, submap
