"""Exception taxonomy shared by every module in the package."""


class LongCycleError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInput(LongCycleError):
    """Parameters or graph data outside the documented domain."""


class UnknownVertex(InvalidInput):
    """A vertex id that is not, or is no longer, present in the graph."""


class ParseError(InvalidInput):
    """Malformed textual input for a graph or a certificate."""


class BudgetExhausted(LongCycleError):
    """An exhaustive search hit its node budget before resolving."""


class BareCycleComponent(InvalidInput):
    """Degree-2 suppression met a component with no degree-3 vertex."""


class NoProjection(LongCycleError):
    """No path of length at most l exists between the given endpoints."""


class NotEnoughContact(LongCycleError):
    """A cycle meets the skeleton in fewer than two vertices."""


class InternalContradiction(LongCycleError):
    """A proof-level invariant failed.  Indicates a bug, never bad input."""


class PackingNotFound(InternalContradiction):
    """Cycle packing failed although its size precondition guaranteed one."""
