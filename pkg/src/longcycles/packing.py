"""Extraction of many disjoint cycles from a skeleton with a large cubic
core.

The skeleton's branch structure is a 3-regular multigraph whose edges stand
for subdivided paths.  Working on that structure, the greedy repeatedly
removes a minimum cycle (a loop counts 1, a parallel pair 2), deletes its
branch vertices, and restores the structure by dropping low-degree vertices
and contracting degree-2 ones.  On enough branch vertices this yields the
requested number of cycles; each is lifted back to a cycle of the skeleton
through the stored subdivision paths, so all results are automatically at
least girth-long.

An exhaustive fallback searches the remaining subdivided graph directly
when the greedy stalls; PackingNotFound reports a genuine failure of both.
"""

from __future__ import annotations

from .errors import InternalContradiction, PackingNotFound
from .graphs import CycleSeq, Graph, Multigraph, minimum_cycle
from .oracle import OracleBudget, _Counter, _cycles_through_min
from .skeleton import Skeleton

__all__ = ["cycles_in_cubic", "exhaustive_disjoint_cycles"]


class _Branchwork:
    """Mutable multigraph of edge instances, each carrying its subdivided
    path oriented from its u end to its v end."""

    def __init__(self, skel: Skeleton):
        self.instances: list[list] = []  # [u, v, path, alive]
        self.incident: dict[int, set[int]] = {
            v: set() for v in skel.cubic.vertices()
        }
        self.nodes: set[int] = set(skel.cubic.vertices())
        for (u, v), paths in sorted(skel.subdivision_map.items()):
            for path in paths:
                self._new(u, v, path)

    def _new(self, u: int, v: int, path: tuple[int, ...]) -> None:
        idx = len(self.instances)
        self.instances.append([u, v, path, True])
        self.incident[u].add(idx)
        if v != u:
            self.incident[v].add(idx)

    def _kill(self, idx: int) -> None:
        u, v, _, _ = self.instances[idx]
        self.incident[u].discard(idx)
        self.incident[v].discard(idx)
        self.instances[idx][3] = False

    def degree(self, v: int) -> int:
        total = 0
        for idx in self.incident[v]:
            total += 2 if self.instances[idx][0] == self.instances[idx][1] else 1
        return total

    def delete_node(self, v: int) -> None:
        for idx in sorted(self.incident[v]):
            self._kill(idx)
        self.nodes.discard(v)

    def oriented_path(self, idx: int, start: int) -> tuple[int, ...]:
        u, v, path, _ = self.instances[idx]
        if start == u:
            return path
        if start == v:
            return tuple(reversed(path))
        raise InternalContradiction(f"instance {idx} does not touch {start}")

    def between(self, a: int, b: int) -> list[int]:
        """Instance ids joining a and b, smallest subdivided path first."""
        ids = [
            idx
            for idx in self.incident[a]
            if {self.instances[idx][0], self.instances[idx][1]} == {a, b}
            or (a == b and self.instances[idx][0] == self.instances[idx][1] == a)
        ]
        return sorted(ids, key=lambda i: self.instances[i][2])

    def cleanup(self) -> None:
        """Drop degree-0 and degree-1 vertices, contract degree-2 ones.

        A vertex whose whole degree is one loop stays: it is a ready-made
        cycle that a later round will harvest.
        """
        changed = True
        while changed:
            changed = False
            for v in sorted(self.nodes):
                d = self.degree(v)
                if d <= 1:
                    self.delete_node(v)
                    changed = True
                    break
                if d == 2:
                    ids = sorted(self.incident[v])
                    if len(ids) == 1:
                        continue  # lone loop
                    i1, i2 = ids
                    seq1 = tuple(reversed(self.oriented_path(i1, v)))
                    seq2 = self.oriented_path(i2, v)
                    merged = seq1 + seq2[1:]
                    self._kill(i1)
                    self._kill(i2)
                    self._new(merged[0], merged[-1], merged)
                    self.nodes.discard(v)
                    changed = True
                    break

    def as_multigraph(self) -> Multigraph:
        mg = Multigraph(vertices=self.nodes)
        for u, v, _, ok in self.instances:
            if ok:
                mg.add_edge(u, v)
        return mg

    def live_graph(self) -> Graph:
        """Simple graph formed by the surviving subdivided paths."""
        g = Graph(vertices=self.nodes)
        for u, v, path, ok in self.instances:
            if not ok:
                continue
            for i in range(len(path) - 1):
                if not g.has_edge(path[i], path[i + 1]):
                    g.add_edge(path[i], path[i + 1])
        return g

    def lift(self, node_cycle: CycleSeq) -> CycleSeq:
        """Expand a cycle over branch vertices into a skeleton cycle."""
        vs = node_cycle.vertices
        if len(vs) == 1:
            ids = self.between(vs[0], vs[0])
            if not ids:
                raise InternalContradiction(f"no loop instance at {vs[0]}")
            return CycleSeq(self.instances[ids[0]][2][:-1])
        if len(vs) == 2:
            a, b = vs
            ids = self.between(a, b)
            if len(ids) < 2:
                raise InternalContradiction(f"no parallel pair between {a} and {b}")
            first = self.oriented_path(ids[0], a)
            second = self.oriented_path(ids[1], b)
            return CycleSeq(first[:-1] + second[:-1])
        seq: tuple[int, ...] = ()
        for i, a in enumerate(vs):
            b = vs[(i + 1) % len(vs)]
            ids = self.between(a, b)
            if not ids:
                raise InternalContradiction(f"no instance between {a} and {b}")
            seq += self.oriented_path(ids[0], a)[:-1]
        return CycleSeq(seq)


def _assert_disjoint(cycles: list[CycleSeq]) -> None:
    seen: set[int] = set()
    for c in cycles:
        vs = set(c.vertices)
        if vs & seen:
            raise InternalContradiction(
                f"extracted cycles overlap at {sorted(vs & seen)}"
            )
        seen |= vs


def exhaustive_disjoint_cycles(
    g: Graph, k: int, budget: OracleBudget | None = None
) -> list[CycleSeq] | None:
    """k vertex-disjoint cycles of g found by exhaustive branching, or None.

    Worst-case exponential; meant for small graphs and as a last resort.
    """
    counter = _Counter(budget)
    adj = g._adj
    failed: set[tuple[frozenset[int], int]] = set()

    def search(live: frozenset[int], need: int) -> list[CycleSeq] | None:
        if need == 0:
            return []
        if len(live) < 3 * need or (live, need) in failed:
            return None
        root = min(live)
        for raw in sorted(_cycles_through_min(adj, live, root, 3, counter)):
            rest = search(live - set(raw), need - 1)
            if rest is not None:
                return [CycleSeq(raw)] + rest
        rest = search(live - {root}, need)
        if rest is not None:
            return rest
        failed.add((live, need))
        return None

    return search(frozenset(g._adj), k)


def cycles_in_cubic(
    skel: Skeleton,
    k: int,
    allow_fallback: bool = True,
    budget: OracleBudget | None = None,
) -> list[CycleSeq]:
    """k disjoint skeleton cycles obtained from the cubic branch structure.

    Greedy minimum-cycle extraction first; optionally an exhaustive search
    over whatever the greedy left behind plus everything it extracted.
    Raises PackingNotFound when k cycles cannot be produced.
    """
    if k < 1:
        return []
    work = _Branchwork(skel)
    found: list[CycleSeq] = []
    while len(found) < k:
        work.cleanup()
        mg = work.as_multigraph()
        node_cycle = minimum_cycle(mg)
        if node_cycle is None:
            break
        lifted = work.lift(node_cycle)
        if lifted.length < skel.l:
            raise InternalContradiction(
                f"lifted cycle of length {lifted.length} under girth {skel.l}"
            )
        found.append(lifted)
        for v in node_cycle.vertices:
            work.delete_node(v)
    if len(found) >= k:
        _assert_disjoint(found)
        return found[:k]
    if allow_fallback:
        full = Graph(vertices=skel.cubic.vertices())
        for _, paths in sorted(skel.subdivision_map.items()):
            for path in paths:
                for i in range(len(path) - 1):
                    if not full.has_edge(path[i], path[i + 1]):
                        full.add_edge(path[i], path[i + 1])
        result = exhaustive_disjoint_cycles(full, k, budget)
        if result is not None:
            _assert_disjoint(result)
            return result
    raise PackingNotFound(
        f"could not extract {k} disjoint cycles from the cubic structure"
    )
