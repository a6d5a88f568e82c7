"""Instance generators, graph parsing, and certificate serialization.

Generators cover the classic families the solver is exercised on,
including the tight lower-bound instances (complete graphs one vertex
short of k disjoint long cycles) and small high-girth cubic graphs from
embedded adjacency data.  Everything is deterministic for a fixed seed.

The graph file format is a plain edge list: one "u v" pair per line,
whitespace separated, with '#' starting a comment.  Certificates travel
as canonical JSON with sorted keys and no spaces, so equal certificates
serialize byte-identically.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

from .errors import InternalContradiction, InvalidInput, ParseError
from .graphs import CycleSeq, Graph, Multigraph, minimum_cycle
from .solver import Packing, Result, Transversal

__all__ = [
    "GenSpec",
    "generate",
    "random_cubic_multigraph",
    "subdivided_host",
    "parse_graph",
    "emit_graph",
    "emit_certificate",
    "parse_certificate",
    "VARIANT_ARITY",
]

# Arity of the numeric parameters each generator variant takes, seed aside.
VARIANT_ARITY = {
    "complete": 1,
    "cycle": 1,
    "theta": 3,
    "random": 2,
    "random_cubic": 1,
    "cage": 1,
    "lower_bound": 2,
    "figure_eight": 2,
}


@dataclass(frozen=True)
class GenSpec:
    """A generator request: variant name, numeric parameters, and a seed
    for the random variants."""

    variant: str
    params: tuple
    seed: int = 0

    def name(self) -> str:
        inner = ",".join(str(p) for p in self.params)
        if self.variant in ("random", "random_cubic"):
            return f"{self.variant}({inner})@{self.seed}"
        return f"{self.variant}({inner})"


def _complete(n: int) -> Graph:
    if n < 1:
        raise InvalidInput(f"complete graph needs n >= 1, got {n}")
    g = Graph(vertices=range(n))
    for u in range(n):
        for v in range(u + 1, n):
            g.add_edge(u, v)
    return g


def _cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidInput(f"cycle needs n >= 3, got {n}")
    return Graph(edges=[(i, (i + 1) % n) for i in range(n)])


def _theta(a: int, b: int, c: int) -> Graph:
    """Two hub vertices joined by three internally disjoint paths of the
    given lengths."""
    if min(a, b, c) < 1:
        raise InvalidInput(f"theta path lengths must be positive, got {a},{b},{c}")
    if sorted((a, b, c))[1] == 1:
        raise InvalidInput("at most one theta path may be a single edge")
    g = Graph(vertices=(0, 1))
    nxt = 2
    for length in (a, b, c):
        prev = 0
        for _ in range(length - 1):
            g.add_edge(prev, nxt)
            prev = nxt
            nxt += 1
        g.add_edge(prev, 1)
    return g


def _random(n: int, p: float, seed: int) -> Graph:
    if n < 1:
        raise InvalidInput(f"random graph needs n >= 1, got {n}")
    if not 0 <= p <= 1:
        raise InvalidInput(f"edge probability must be in [0, 1], got {p}")
    rng = random.Random(seed)
    g = Graph(vertices=range(n))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                g.add_edge(u, v)
    return g


def _random_cubic(n: int, seed: int) -> Graph:
    """Simple 3-regular graph from the pairing model, resampling whenever
    the pairing produces a loop or a parallel edge."""
    if n < 4 or n % 2:
        raise InvalidInput(f"cubic graph needs even n >= 4, got {n}")
    rng = random.Random(seed)
    for _ in range(100000):
        stubs = [v for v in range(n) for _ in range(3)]
        rng.shuffle(stubs)
        g = Graph(vertices=range(n))
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v or g.has_edge(u, v):
                ok = False
                break
            g.add_edge(u, v)
        if ok:
            return g
    raise InvalidInput(f"no simple cubic pairing found for n={n}, seed={seed}")


def _petersen() -> Graph:
    g = Graph(vertices=range(10))
    for i in range(5):
        g.add_edge(i, (i + 1) % 5)
        g.add_edge(i, i + 5)
        g.add_edge(5 + i, 5 + (i + 2) % 5)
    return g


def _lcf(offsets: tuple[int, ...], repeats: int) -> Graph:
    n = len(offsets) * repeats
    g = Graph(edges=[(i, (i + 1) % n) for i in range(n)])
    for i in range(n):
        j = (i + offsets[i % len(offsets)]) % n
        if not g.has_edge(i, j):
            g.add_edge(i, j)
    return g


def _cage(girth: int) -> Graph:
    if girth == 5:
        g = _petersen()
    elif girth == 6:
        g = _lcf((5, -5), 7)
    elif girth == 7:
        g = _lcf((12, 7, -7), 8)
    elif girth == 8:
        g = _lcf((-13, -9, 7, -7, 9, 13), 5)
    else:
        raise InvalidInput(f"no cage table for girth {girth}")
    shortest = minimum_cycle(g)
    if shortest is None or shortest.length != girth:
        raise InternalContradiction(f"cage table for girth {girth} is wrong")
    return g


def _lower_bound(k: int, l: int) -> Graph:
    """Complete graph one vertex short of carrying k disjoint long cycles."""
    if k < 1 or l < 3:
        raise InvalidInput(f"lower_bound needs k >= 1 and l >= 3, got {k},{l}")
    return _complete(k * l - 1)


def _figure_eight(a: int, b: int) -> Graph:
    """Two cycles of lengths a and b sharing exactly the vertex 0."""
    if a < 3 or b < 3:
        raise InvalidInput(f"figure_eight needs cycle lengths >= 3, got {a},{b}")
    g = Graph(edges=[(i, (i + 1) % a) for i in range(a)])
    ring = [0] + list(range(a, a + b - 1))
    for i in range(b):
        g.add_edge(ring[i], ring[(i + 1) % b])
    return g


def generate(spec: GenSpec) -> Graph:
    """Build the requested instance; deterministic per (variant, params,
    seed)."""
    v = spec.variant
    p = spec.params
    if v not in VARIANT_ARITY:
        raise InvalidInput(f"unknown generator variant {v!r}")
    if len(p) != VARIANT_ARITY[v]:
        raise InvalidInput(
            f"variant {v} takes {VARIANT_ARITY[v]} parameters, got {len(p)}"
        )
    if v == "complete":
        return _complete(int(p[0]))
    if v == "cycle":
        return _cycle(int(p[0]))
    if v == "theta":
        return _theta(int(p[0]), int(p[1]), int(p[2]))
    if v == "random":
        return _random(int(p[0]), float(p[1]), spec.seed)
    if v == "random_cubic":
        return _random_cubic(int(p[0]), spec.seed)
    if v == "cage":
        return _cage(int(p[0]))
    if v == "lower_bound":
        return _lower_bound(int(p[0]), int(p[1]))
    return _figure_eight(int(p[0]), int(p[1]))


def random_cubic_multigraph(n: int, seed: int) -> Multigraph:
    """3-regular multigraph from the pairing model, loops and parallel
    edges kept.  A loop contributes 2 to its vertex's degree."""
    if n < 1 or n % 2:
        raise InvalidInput(f"cubic multigraph needs even n >= 2, got {n}")
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(3)]
    rng.shuffle(stubs)
    m = Multigraph(vertices=range(n))
    for i in range(0, len(stubs), 2):
        m.add_edge(stubs[i], stubs[i + 1])
    return m


def subdivided_host(m: Multigraph, segment: int) -> Graph:
    """Simple graph obtained by subdividing every edge instance of m into
    a path of the given number of edges.

    Branch vertices keep their ids; interior vertices take fresh ids in
    sorted edge order.  Loops need segment >= 3 and parallel edges
    segment >= 2 to stay simple.
    """
    if segment < 1:
        raise InvalidInput(f"segment count must be positive, got {segment}")
    for u, v, mult in m.edge_items():
        if u == v and segment < 3:
            raise InvalidInput("subdividing a loop needs at least 3 segments")
        if u != v and mult > 1 and segment < 2:
            raise InvalidInput("subdividing parallel edges needs at least 2 segments")
    g = Graph(vertices=m.vertices())
    nxt = max(m.vertices(), default=-1) + 1
    for u, v, mult in m.edge_items():
        for _ in range(mult):
            prev = u
            for _ in range(segment - 1):
                g.add_edge(prev, nxt)
                prev = nxt
                nxt += 1
            g.add_edge(prev, v)
    return g


# -- text formats ----------------------------------------------------------


def parse_graph(text: str) -> Graph:
    """Edge list text to Graph; loops and duplicate edges are rejected."""
    g = Graph()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {raw.strip()!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(
                f"line {lineno}: vertex ids must be integers, got {raw.strip()!r}"
            ) from None
        g.add_edge(u, v)
    return g


def emit_graph(g: Graph) -> str:
    """Graph to edge list text; inverse of parse_graph for graphs without
    isolated vertices."""
    return "".join(f"{u} {v}\n" for u, v in g.edges())


def _json_number(x: float):
    return int(x) if float(x).is_integer() else float(x)


def emit_certificate(result: Result, k: int, l: int) -> str:
    """Certificate to canonical JSON (sorted keys, no spaces, arrays in
    ascending canonical order), ending with a newline."""
    if isinstance(result, Packing):
        payload = {
            "type": "packing",
            "k": k,
            "l": l,
            "cycles": sorted(list(c.vertices) for c in result.cycles),
        }
    elif isinstance(result, Transversal):
        payload = {
            "type": "transversal",
            "k": k,
            "l": l,
            "bound": _json_number(result.bound),
            "vertices": sorted(result.vertices),
        }
    else:
        raise InvalidInput(f"not a certificate: {result!r}")
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def _require(obj: dict, key: str, kind) -> object:
    if key not in obj:
        raise ParseError(f"certificate is missing {key!r}")
    value = obj[key]
    if kind is int and (isinstance(value, bool) or not isinstance(value, int)):
        raise ParseError(f"certificate field {key!r} must be an integer")
    if kind is list and not isinstance(value, list):
        raise ParseError(f"certificate field {key!r} must be an array")
    return value


def parse_certificate(text: str) -> tuple[Result, int, int]:
    """JSON text to (certificate, k, l); ParseError on malformed input."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"certificate is not valid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise ParseError("certificate must be a JSON object")
    kind = obj.get("type")
    k = _require(obj, "k", int)
    l = _require(obj, "l", int)
    if kind == "packing":
        cycles = []
        for item in _require(obj, "cycles", list):
            if not isinstance(item, list) or not all(
                isinstance(x, int) and not isinstance(x, bool) for x in item
            ):
                raise ParseError(f"cycle {item!r} must be an array of integers")
            cycles.append(CycleSeq(item))
        return Packing(tuple(cycles)), k, l
    if kind == "transversal":
        bound = obj.get("bound")
        if isinstance(bound, bool) or not isinstance(bound, (int, float)):
            raise ParseError("certificate field 'bound' must be a number")
        vertices = _require(obj, "vertices", list)
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in vertices):
            raise ParseError("transversal vertices must be integers")
        return Transversal(frozenset(vertices), float(bound)), k, l
    raise ParseError(f"unknown certificate type {kind!r}")
