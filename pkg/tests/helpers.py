"""Shared test fixtures: naive reference algorithms and small builders.

The reference routines here are deliberately independent of the package
internals; they enumerate rather than search, so the tests can hold the
fast code against exhaustively computed truth on desk-scale graphs.
"""

from __future__ import annotations

import itertools
import random

from longcycles import CycleSeq, Graph


def cycle_graph(n: int, start: int = 0) -> Graph:
    ids = list(range(start, start + n))
    return Graph(edges=[(ids[i], ids[(i + 1) % n]) for i in range(n)])


def path_graph(n: int, start: int = 0) -> Graph:
    ids = list(range(start, start + n))
    return Graph(vertices=ids, edges=[(ids[i], ids[i + 1]) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    g = Graph(vertices=range(n))
    for u in range(n):
        for v in range(u + 1, n):
            g.add_edge(u, v)
    return g


def disjoint_union(*graphs: Graph) -> Graph:
    """Union after shifting each graph's ids past the previous maximum."""
    out = Graph()
    shift = 0
    for g in graphs:
        vs = g.vertices()
        for v in vs:
            out.add_vertex(v + shift)
        for u, v in g.edges():
            out.add_edge(u + shift, v + shift)
        shift += (max(vs) + 1) if vs else 0
    return out


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    g = Graph(vertices=range(n))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                g.add_edge(u, v)
    return g


def all_simple_cycles(g: Graph) -> set[CycleSeq]:
    """Every simple cycle of g, found by rooted path enumeration."""
    adj = {v: sorted(g.neighbors(v)) for v in g.vertices()}
    found: set[CycleSeq] = set()

    def extend(root: int, path: list[int], used: set[int]) -> None:
        tip = path[-1]
        for w in adj[tip]:
            if w == root and len(path) >= 3:
                found.add(CycleSeq(path))
            elif w > root and w not in used:
                path.append(w)
                used.add(w)
                extend(root, path, used)
                used.remove(w)
                path.pop()

    for root in sorted(adj):
        extend(root, [root], {root})
    return found


def long_cycles(g: Graph, l: int) -> set[CycleSeq]:
    return {c for c in all_simple_cycles(g) if c.length >= l}


def brute_min_transversal(g: Graph, l: int) -> frozenset[int]:
    """Smallest vertex set meeting every cycle of length >= l, by direct
    enumeration over subsets in ascending size."""
    targets = long_cycles(g, l)
    if not targets:
        return frozenset()
    sets = [set(c.vertices) for c in targets]
    universe = sorted(set().union(*sets))
    for size in range(len(universe) + 1):
        for combo in itertools.combinations(universe, size):
            chosen = set(combo)
            if all(chosen & s for s in sets):
                return frozenset(chosen)
    raise AssertionError("unhittable cycle set")


def brute_max_disjoint(g: Graph, l: int, cap: int | None = None) -> int:
    """Maximum number of vertex-disjoint cycles of length >= l."""
    targets = [set(c.vertices) for c in long_cycles(g, l)]

    def grow(chosen: int, used: set[int], start: int) -> int:
        if cap is not None and chosen >= cap:
            return chosen
        best = chosen
        for i in range(start, len(targets)):
            if not (targets[i] & used):
                best = max(best, grow(chosen + 1, used | targets[i], i + 1))
                if cap is not None and best >= cap:
                    return best
        return best

    return grow(0, set(), 0)


def is_disjoint_family(cycles) -> bool:
    seen: set[int] = set()
    for c in cycles:
        vs = set(c.vertices)
        if vs & seen:
            return False
        seen |= vs
    return True
