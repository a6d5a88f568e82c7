"""Exact cycle detection and brute-force optima for desk-scale graphs.

Every search here is exhaustive and therefore worst-case exponential.  That
is intentional: these functions are the ground truth that the constructive
solver and the test suite are measured against.  They are meant for graphs
of a few dozen vertices; the subset-enumeration optima should stay at or
below roughly 14 vertices.  A node budget turns runaway searches into a
clean BudgetExhausted error instead of a hang.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from .errors import BudgetExhausted, InvalidInput, UnknownVertex
from .graphs import CycleSeq, Graph

__all__ = [
    "OracleBudget",
    "find_cycle_in_range",
    "find_long_cycle_through",
    "max_disjoint_long_cycles",
    "min_long_cycle_transversal",
]


@dataclass(frozen=True)
class OracleBudget:
    """Cap on the number of search-tree nodes an oracle call may expand."""

    max_nodes_expanded: int = 5_000_000

    def __post_init__(self):
        if self.max_nodes_expanded <= 0:
            raise InvalidInput("budget must be positive")


class _Counter:
    __slots__ = ("used", "cap")

    def __init__(self, budget: OracleBudget | None):
        self.used = 0
        self.cap = (budget or OracleBudget()).max_nodes_expanded

    def tick(self, amount: int = 1) -> None:
        self.used += amount
        if self.used > self.cap:
            raise BudgetExhausted(
                f"oracle budget of {self.cap} node expansions exhausted"
            )


def _reachable(
    adj: dict[int, set[int]],
    start: int,
    allowed,
    counter: _Counter,
) -> set[int]:
    """Vertices reachable from start moving only through allowed(v) vertices."""
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        counter.tick()
        for w in adj[u]:
            if w not in seen and allowed(w):
                seen.add(w)
                queue.append(w)
    return seen


def _close_feasible(
    adj: dict[int, set[int]],
    root: int,
    candidate: int,
    on_path: set[int],
    path_len: int,
    lo: int,
    counter: _Counter,
) -> bool:
    """Can a path through candidate still close into a cycle of length >= lo?

    Checks that the root stays reachable from the candidate outside the
    current path and that enough fresh vertices remain to reach length lo.
    """
    reach = _reachable(
        adj,
        candidate,
        lambda w: w >= root and (w == root or w not in on_path),
        counter,
    )
    if root not in reach:
        return False
    fresh = len(reach - on_path) - 1  # candidate itself already counted
    return path_len + 1 + fresh >= lo


def _cycle_from_root(
    g: Graph, root: int, lo: int, hi: int | None, counter: _Counter
) -> CycleSeq | None:
    """DFS for a cycle through root whose smallest vertex is root."""
    adj = g._adj
    path = [root]
    on_path = {root}

    def extend(head: int) -> CycleSeq | None:
        counter.tick()
        for w in sorted(adj[head]):
            if w < root:
                continue
            if w == root:
                length = len(path)
                if length >= max(lo, 3) and (hi is None or length <= hi):
                    return CycleSeq(path)
                continue
            if w in on_path:
                continue
            if hi is not None and len(path) >= hi:
                continue
            if not _close_feasible(adj, root, w, on_path, len(path), lo, counter):
                continue
            path.append(w)
            on_path.add(w)
            found = extend(w)
            if found is not None:
                return found
            path.pop()
            on_path.remove(w)
        return None

    return extend(root)


def find_cycle_in_range(
    g: Graph, lo: int, hi: int | None, budget: OracleBudget | None = None
) -> CycleSeq | None:
    """A cycle whose length lies in [lo, hi], or None if there is none.

    hi=None means unbounded above.  Deterministic: roots are tried in
    ascending id order and each cycle is searched from its smallest vertex,
    so reruns return the identical witness.
    """
    if lo < 3:
        raise InvalidInput(f"cycle length bound must be at least 3, got {lo}")
    if hi is not None and hi < lo:
        raise InvalidInput(f"empty length range [{lo}, {hi}]")
    counter = _Counter(budget)
    for root in g.vertices():
        found = _cycle_from_root(g, root, lo, hi, counter)
        if found is not None:
            return found
    return None


def find_long_cycle_through(
    g: Graph, v: int, l: int, budget: OracleBudget | None = None
) -> CycleSeq | None:
    """A cycle of length >= l through the given vertex, or None."""
    if not g.has_vertex(v):
        raise UnknownVertex(f"vertex {v} not in graph")
    lo = max(l, 3)
    counter = _Counter(budget)
    adj = g._adj
    path = [v]
    on_path = {v}

    def feasible(candidate: int) -> bool:
        reach = _reachable(
            adj,
            candidate,
            lambda w: w == v or w not in on_path,
            counter,
        )
        if v not in reach:
            return False
        return len(path) + 1 + (len(reach - on_path) - 1) >= lo

    def extend(head: int) -> CycleSeq | None:
        counter.tick()
        for w in sorted(adj[head]):
            if w == v:
                if len(path) >= lo:
                    return CycleSeq(path)
                continue
            if w in on_path:
                continue
            if not feasible(w):
                continue
            path.append(w)
            on_path.add(w)
            found = extend(w)
            if found is not None:
                return found
            path.pop()
            on_path.remove(w)
        return None

    return extend(v)


def _cycles_through_min(
    adj: dict[int, set[int]],
    live: frozenset[int],
    root: int,
    lo: int,
    counter: _Counter,
) -> list[tuple[int, ...]]:
    """All simple cycles of length >= lo through root inside live vertices.

    Each cycle is reported once (second vertex smaller than last).
    """
    out: list[tuple[int, ...]] = []
    path = [root]
    on_path = {root}

    def extend(head: int) -> None:
        counter.tick()
        for w in sorted(adj[head]):
            if w not in live or w < root:
                continue
            if w == root:
                if len(path) >= max(lo, 3) and path[1] < path[-1]:
                    out.append(tuple(path))
                continue
            if w in on_path:
                continue
            path.append(w)
            on_path.add(w)
            extend(w)
            path.pop()
            on_path.remove(w)

    extend(root)
    return out


def max_disjoint_long_cycles(
    g: Graph,
    l: int,
    cap: int | None = None,
    budget: OracleBudget | None = None,
) -> int:
    """Exact maximum number of vertex-disjoint cycles of length >= l.

    Branch-and-memoize over live vertex sets; exponential, keep n small.
    The result is clipped at cap when one is given.
    """
    lo = max(l, 3)
    ceiling = g.n // lo
    if cap is None:
        cap = ceiling
    if cap <= 0 or ceiling == 0:
        return 0
    counter = _Counter(budget)
    adj = g._adj
    memo: dict[frozenset[int], int] = {}

    def best(live: frozenset[int]) -> int:
        if len(live) < lo:
            return 0
        cached = memo.get(live)
        if cached is not None:
            return cached
        upper = len(live) // lo
        root = min(live)
        result = best(live - {root})
        if result < upper and result < cap:
            for cyc in _cycles_through_min(adj, live, root, lo, counter):
                result = max(result, 1 + best(live - set(cyc)))
                if result >= upper or result >= cap:
                    break
        memo[live] = result
        return result

    return min(best(frozenset(g._adj)), cap)


def min_long_cycle_transversal(
    g: Graph, l: int, budget: OracleBudget | None = None
) -> frozenset[int]:
    """Exact minimum vertex set meeting every cycle of length >= l.

    Subsets are tried by increasing size, lexicographically within a size,
    so the returned witness is deterministic.  Exponential in n.
    """
    verts = g.vertices()
    for size in range(len(verts) + 1):
        for combo in itertools.combinations(verts, size):
            rest = g.without_vertices(combo)
            if find_cycle_in_range(rest, max(l, 3), None, budget) is None:
                return frozenset(combo)
    raise InvalidInput("unreachable: removing all vertices leaves no cycle")
