"""Independent certificate validation.

Checks lean only on the graph primitives and the exact cycle searches,
never on solver internals, so a certificate stands or falls on its own.
The length bound is re-derived from (l, k) rather than read from the
certificate.  All failures are collected as human-readable reasons; an
empty reason list means valid.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import transversal_bound
from .errors import InvalidInput
from .graphs import CycleSeq, Graph
from .oracle import OracleBudget, find_cycle_in_range
from .solver import Packing, Result, Transversal

__all__ = ["Verdict", "check_packing", "check_transversal", "check_certificate"]


@dataclass(frozen=True)
class Verdict:
    """Outcome of a certificate check; valid exactly when nothing failed."""

    valid: bool
    reasons: tuple[str, ...]

    @staticmethod
    def from_reasons(reasons) -> "Verdict":
        rs = tuple(reasons)
        return Verdict(not rs, rs)


def _cycle_problems(g: Graph, cycle: CycleSeq, l: int) -> list[str]:
    vs = cycle.vertices
    out = []
    if len(vs) < 3:
        out.append(f"cycle {list(vs)} has fewer than 3 vertices")
        return out
    for v in vs:
        if not g.has_vertex(v):
            out.append(f"cycle vertex {v} is not in the graph")
            return out
    for i in range(len(vs)):
        u, v = vs[i], vs[(i + 1) % len(vs)]
        if not g.has_edge(u, v):
            out.append(f"cycle edge {{{u},{v}}} is not in the graph")
    if cycle.length < l:
        out.append(f"cycle {list(vs)} has length {cycle.length}, below {l}")
    return out


def check_packing(g: Graph, cycles, k: int, l: int) -> Verdict:
    """Valid when at least k of the given cycles exist in g, are pairwise
    vertex-disjoint, and each has length at least l."""
    reasons: list[str] = []
    cycles = list(cycles)
    if len(cycles) < k:
        reasons.append(f"packing has {len(cycles)} cycles, needs {k}")
    used: set[int] = set()
    for cycle in cycles:
        reasons.extend(_cycle_problems(g, cycle, l))
        overlap = used & set(cycle.vertices)
        if overlap:
            reasons.append(f"cycles share vertices {sorted(overlap)}")
        used |= set(cycle.vertices)
    return Verdict.from_reasons(reasons)


def check_transversal(
    g: Graph,
    vertices,
    k: int,
    l: int,
    budget: OracleBudget | None = None,
) -> Verdict:
    """Valid when the set is small enough and its removal leaves no cycle
    of length at least l; the size bound is recomputed from (l, k)."""
    reasons: list[str] = []
    vset = set(vertices)
    for v in sorted(vset):
        if not g.has_vertex(v):
            reasons.append(f"transversal vertex {v} is not in the graph")
    bound = transversal_bound(l, k)
    if len(vset) > bound:
        reasons.append(
            f"transversal has {len(vset)} vertices, over the bound {bound:g}"
        )
    survivor = find_cycle_in_range(
        g.without_vertices(vset), max(l, 3), None, budget
    )
    if survivor is not None:
        reasons.append(
            f"cycle {list(survivor.vertices)} of length {survivor.length} survives"
        )
    return Verdict.from_reasons(reasons)


def check_certificate(
    g: Graph,
    result: Result,
    k: int,
    l: int,
    budget: OracleBudget | None = None,
) -> Verdict:
    """Dispatch on the certificate kind."""
    if isinstance(result, Packing):
        return check_packing(g, result.cycles, k, l)
    if isinstance(result, Transversal):
        return check_transversal(g, result.vertices, k, l, budget)
    raise InvalidInput(f"not a certificate: {result!r}")
