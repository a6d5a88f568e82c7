"""Construction of a projection-preserving cut turning the skeleton into a
forest.

The cut X holds skeleton vertices and edges.  It stays projection
preserving (every surviving H-path projects inside the cut skeleton) and
valid (at most one element per strand of degree-2 vertices), which caps the
strand part of its size by 3|V3|/2 + k.  While the cut skeleton still has a
cycle, the loop picks a minimum one, inspects the radius-l ball around it,
attaches the H-paths whose projections cross the middle arc of the cycle,
and extracts the single vertex separating the two cycle ends in that local
graph.  That vertex, or one of its cycle edges chosen by where the crossing
H-paths attach, joins the cut.

Every structural fact promised along the way is checked; a failed check
raises InternalContradiction rather than returning a wrong cut.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import InternalContradiction
from .graphs import Graph, _bfs_distances, ball, minimum_cycle
from .oracle import OracleBudget, _Counter
from .projection import enumerate_proper_hpaths, is_pi_preserving, path_projection
from .skeleton import Skeleton

__all__ = [
    "CutSet",
    "empty_cut",
    "apply_cut",
    "cut_strand_count",
    "is_valid_cut",
    "transversal_part",
    "forest_cut",
]

_BIG = 10**9


@dataclass(frozen=True)
class CutSet:
    """A set of skeleton vertices and edges; edges stored as (min, max)."""

    vertex_elements: frozenset[int]
    edge_elements: frozenset[tuple[int, int]]

    @property
    def size(self) -> int:
        return len(self.vertex_elements) + len(self.edge_elements)

    def with_vertex(self, v: int) -> "CutSet":
        return CutSet(self.vertex_elements | {v}, self.edge_elements)

    def with_edge(self, u: int, v: int) -> "CutSet":
        e = (min(u, v), max(u, v))
        return CutSet(self.vertex_elements, self.edge_elements | {e})


def empty_cut() -> CutSet:
    return CutSet(frozenset(), frozenset())


def apply_cut(g: Graph, cut: CutSet) -> Graph:
    """g minus the cut's vertices and edges."""
    return g.without_vertices(cut.vertex_elements).without_edges(cut.edge_elements)


def _strand_ids(skel: Skeleton) -> dict[int, int]:
    """Map each degree-2 vertex to the index of its strand, a component of
    the skeleton induced on the degree-2 set."""
    strands = skel.graph.induced(skel.degree_two).components()
    out: dict[int, int] = {}
    for i, comp in enumerate(strands):
        for v in comp:
            out[v] = i
    return out


def _element_strands(skel: Skeleton, cut: CutSet) -> list[int]:
    """Strand index of every cut element that counts against the strand
    budget; elements touching degree-3 vertices are free and omitted."""
    sid = _strand_ids(skel)
    out = []
    for v in cut.vertex_elements:
        if v in sid:
            out.append(sid[v])
    for u, v in cut.edge_elements:
        if u in sid and v in sid:
            out.append(sid[u])
    return out


def cut_strand_count(skel: Skeleton, cut: CutSet) -> int:
    """Number of cut elements lying on degree-2 strands."""
    return len(_element_strands(skel, cut))


def is_valid_cut(skel: Skeleton, cut: CutSet) -> bool:
    """Whether no degree-2 strand carries more than one cut element."""
    ids = _element_strands(skel, cut)
    return len(ids) == len(set(ids))


def transversal_part(skel: Skeleton, cut: CutSet) -> frozenset[int]:
    """Vertices covering the strand elements of the cut: its degree-2
    vertices plus the smaller endpoint of each all-degree-2 edge.

    Elements touching degree-3 vertices are covered by the degree-3 set,
    which the final transversal always contains.
    """
    d2 = skel.degree_two
    out = {v for v in cut.vertex_elements if v in d2}
    for u, v in cut.edge_elements:
        if u in d2 and v in d2:
            out.add(min(u, v))
    return frozenset(out)


# -- local structure around a minimum cycle --------------------------------


def _nearest_map(hc: Graph, cycle_vs: tuple[int, ...]) -> dict[int, int]:
    """Unique nearest cycle vertex for every vertex of the ball graph."""
    dists = {c: _bfs_distances(hc._adj, (c,)) for c in cycle_vs}
    out: dict[int, int] = {}
    for v in hc.vertices():
        best = _BIG
        hits: list[int] = []
        for c in cycle_vs:
            d = dists[c].get(v, _BIG)
            if d < best:
                best = d
                hits = [c]
            elif d == best and d < _BIG:
                hits.append(c)
        if not hits:
            raise InternalContradiction(
                f"ball vertex {v} cannot reach the cycle inside the ball"
            )
        if len(hits) > 1:
            raise InternalContradiction(
                f"vertex {v} has several nearest cycle vertices {sorted(hits)}"
            )
        out[v] = hits[0]
    return out


def _check_ball_structure(
    hc: Graph, order: tuple[int, ...], nearest: dict[int, int]
) -> None:
    """The ball graph must be the cycle with disjoint trees hanging off it."""
    m = len(order)
    cycle_edges = set()
    for i in range(m):
        u, v = order[i], order[(i + 1) % m]
        cycle_edges.add((min(u, v), max(u, v)))
    for u, v in hc.edges():
        if (u, v) in cycle_edges:
            continue
        if nearest[u] != nearest[v]:
            raise InternalContradiction(
                f"edge {{{u},{v}}} joins the territories of different cycle "
                f"vertices {nearest[u]} and {nearest[v]}"
            )
    preimages: dict[int, list[int]] = {c: [] for c in order}
    for v, c in nearest.items():
        preimages[c].append(v)
    for c, pre in preimages.items():
        sub = hc.induced(pre)
        if len(sub.components()) != 1 or not sub.is_forest():
            raise InternalContradiction(
                f"vertices nearest to cycle vertex {c} do not induce a tree"
            )


# -- Menger machinery ------------------------------------------------------


def _max_ab_flow(g: Graph, banned: tuple[int, int], a_set, b_set, cap: int) -> int:
    """Vertex-disjoint A-B path count in g minus one edge, clipped at cap.

    Vertex-splitting max flow with unit vertex capacities; endpoints count
    too, so this is the quantity Menger ties to the minimum vertex cut.
    """
    arcs: dict[tuple, dict[tuple, int]] = {}

    def add_arc(x, y, c):
        arcs.setdefault(x, {})[y] = arcs.setdefault(x, {}).get(y, 0) + c
        arcs.setdefault(y, {}).setdefault(x, 0)

    for v in g.vertices():
        add_arc((v, 0), (v, 1), 1)
    for u, v in g.edges():
        if (u, v) == banned:
            continue
        add_arc((u, 1), (v, 0), _BIG)
        add_arc((v, 1), (u, 0), _BIG)
    for a in sorted(a_set):
        add_arc("S", (a, 0), 1)
    for b in sorted(b_set):
        add_arc((b, 1), "T", 1)
    flow = 0
    while flow < cap:
        parent: dict[tuple, tuple] = {"S": "S"}
        queue = deque(["S"])
        while queue and "T" not in parent:
            x = queue.popleft()
            for y, c in arcs.get(x, {}).items():
                if c > 0 and y not in parent:
                    parent[y] = x
                    queue.append(y)
        if "T" not in parent:
            break
        y = "T"
        while y != "S":
            x = parent[y]
            arcs[x][y] -= 1
            arcs[y][x] += 1
            y = x
        flow += 1
    return flow


def _separates(g: Graph, banned: tuple[int, int], v: int, a_set, b_set) -> bool:
    a_live = sorted(a_set - {v})
    b_live = b_set - {v}
    if not a_live or not b_live:
        return True
    seen = set(a_live)
    queue = deque(a_live)
    while queue:
        u = queue.popleft()
        for w in g._adj[u]:
            if w == v or w in seen:
                continue
            e = (min(u, w), max(u, w))
            if e == banned:
                continue
            seen.add(w)
            queue.append(w)
    return not (seen & b_live)


def _single_ab_cut(g: Graph, banned: tuple[int, int], a_set, b_set) -> int:
    for v in g.vertices():
        if _separates(g, banned, v, a_set, b_set):
            return v
    raise InternalContradiction(
        "flow said one path yet no single separating vertex exists"
    )


# -- the main loop ---------------------------------------------------------


def _grow_once(
    g: Graph, skel: Skeleton, cut: CutSet, counter: _Counter
) -> CutSet | None:
    """One growth step; None once the cut skeleton is a forest."""
    l = skel.l
    h_minus = apply_cut(skel.graph, cut)
    if h_minus.is_forest():
        return None
    cyc = minimum_cycle(h_minus)
    assert cyc is not None
    if cyc.length <= 6 * l:
        raise InternalContradiction(
            f"cut skeleton has a cycle of length {cyc.length}, at most {6 * l}"
        )
    order = cyc.vertices
    m = len(order)
    ball_set = ball(h_minus, order, l)
    hc = h_minus.induced(ball_set)
    nearest = _nearest_map(hc, order)
    _check_ball_structure(hc, order, nearest)

    estar = (min(order[0], order[-1]), max(order[0], order[-1]))
    tree_after = hc.without_edges([estar])
    if len(tree_after.components()) != 1 or not tree_after.is_forest():
        raise InternalContradiction("ball graph minus one cycle edge is not a tree")

    a_set = frozenset(order[: l + 1])
    b_set = frozenset(order[-(l + 1) :])
    d_set = frozenset(order[l : m - l])
    assert not (a_set & b_set)

    g2 = apply_cut(g, cut)
    paths = []
    for p in enumerate_proper_hpaths(g2, skel.graph, counter):
        proj = path_projection(skel, p)
        if d_set & set(proj.vertices):
            paths.append((p, proj))

    gc = Graph()
    for v in hc.vertices():
        gc.add_vertex(v)
    for u, v in hc.edges():
        gc.add_edge(u, v)
    for p, _ in paths:
        for v in p.vertices:
            gc.add_vertex(v)
        for u, v in p.edges():
            if not gc.has_edge(u, v):
                gc.add_edge(u, v)

    flow = _max_ab_flow(gc, estar, a_set, b_set, cap=2)
    if flow == 0:
        raise InternalContradiction("cycle ends are disconnected in the local graph")
    if flow >= 2:
        raise InternalContradiction(
            "two disjoint paths join the cycle ends in the local graph"
        )
    x = _single_ab_cut(gc, estar, a_set, b_set)
    if x not in d_set:
        raise InternalContradiction(
            f"separating vertex {x} misses the middle arc of the cycle"
        )

    deg = tree_after.degree(x)
    if deg == 2:
        grown = cut.with_vertex(x)
    elif deg == 3:
        i = order.index(x)
        before, after = order[i - 1], order[(i + 1) % m]
        comps = tree_after.without_vertices([x]).components()
        if len(comps) != 3:
            raise InternalContradiction(
                f"removing {x} from the local tree leaves {len(comps)} pieces"
            )
        comp_of = {v: idx for idx, comp in enumerate(comps) for v in comp}
        t_before, t_after = comp_of[before], comp_of[after]
        (t_mid,) = set(range(3)) - {t_before, t_after}
        saw_before_side = False
        saw_after_side = False
        for p, proj in paths:
            if x not in proj.vertices:
                continue
            s, t = p.endpoints
            pair = {comp_of[s], comp_of[t]}
            if pair == {t_before, t_mid}:
                saw_before_side = True
            elif pair == {t_mid, t_after}:
                saw_after_side = True
            else:
                raise InternalContradiction(
                    f"H-path {p.vertices} crosses {x} between incompatible "
                    f"branches of the local tree"
                )
        if saw_before_side and saw_after_side:
            raise InternalContradiction(
                f"H-paths cross {x} towards both of its cycle neighbours"
            )
        if saw_after_side:
            grown = cut.with_edge(x, before)
        else:
            grown = cut.with_edge(x, after)
    else:
        raise InternalContradiction(
            f"separating vertex {x} has degree {deg} in the local tree"
        )
    return grown


def forest_cut(
    g: Graph, skel: Skeleton, k: int, budget: OracleBudget | None = None
) -> CutSet:
    """Grow a projection-preserving cut until the skeleton minus it is a
    forest.

    g must be the host with non-skeleton edges at degree-3 vertices already
    removed.  The result is valid and its strand part has size at most
    3|V3|/2 + k, both rechecked on every step.
    """
    counter = _Counter(budget)
    cut = empty_cut()
    limit = skel.graph.n + skel.graph.m + 1
    for _ in range(limit):
        grown = _grow_once(g, skel, cut, counter)
        if grown is None:
            return cut
        cut = grown
        if not is_pi_preserving(g, skel, cut):
            raise InternalContradiction(
                "cut stopped preserving projections after growing"
            )
        if not is_valid_cut(skel, cut):
            raise InternalContradiction("cut claimed two elements on one strand")
        if 2 * cut_strand_count(skel, cut) > 3 * len(skel.degree_three) + 2 * k:
            raise InternalContradiction("cut outgrew its strand budget")
    raise InternalContradiction("cut growth failed to terminate")
