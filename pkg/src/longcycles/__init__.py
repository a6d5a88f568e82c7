"""Vertex-disjoint long cycles or a small transversal, with certificates.

Given a graph, a target count k, and a minimum length l, `solve` returns
either k vertex-disjoint cycles of length at least l or a vertex set
meeting every such cycle, whose size stays under an explicit function of
k and l alone.  `check_certificate` verifies either answer independently
of how it was produced.
"""

from .bounds import cubic_packing_threshold, transversal_bound
from .certify import Verdict, check_certificate, check_packing, check_transversal
from .errors import (
    BareCycleComponent,
    BudgetExhausted,
    InternalContradiction,
    InvalidInput,
    LongCycleError,
    NoProjection,
    NotEnoughContact,
    PackingNotFound,
    ParseError,
    UnknownVertex,
)
from .graphs import CycleSeq, Graph, Multigraph, Path
from .oracle import (
    OracleBudget,
    find_cycle_in_range,
    find_long_cycle_through,
    max_disjoint_long_cycles,
    min_long_cycle_transversal,
)
from .solver import Packing, Result, SolveTrace, Transversal, solve
from .toolkit import (
    GenSpec,
    emit_certificate,
    emit_graph,
    generate,
    parse_certificate,
    parse_graph,
)

__all__ = [
    "solve",
    "Packing",
    "Transversal",
    "Result",
    "SolveTrace",
    "check_certificate",
    "check_packing",
    "check_transversal",
    "Verdict",
    "Graph",
    "Multigraph",
    "Path",
    "CycleSeq",
    "transversal_bound",
    "cubic_packing_threshold",
    "OracleBudget",
    "find_cycle_in_range",
    "find_long_cycle_through",
    "max_disjoint_long_cycles",
    "min_long_cycle_transversal",
    "GenSpec",
    "generate",
    "parse_graph",
    "emit_graph",
    "emit_certificate",
    "parse_certificate",
    "LongCycleError",
    "InvalidInput",
    "UnknownVertex",
    "ParseError",
    "BudgetExhausted",
    "BareCycleComponent",
    "NoProjection",
    "NotEnoughContact",
    "InternalContradiction",
    "PackingNotFound",
]

__version__ = "0.1.0"
