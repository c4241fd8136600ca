"""Exception types raised by the toolkit.

Every error derives from :class:`GraphError` (itself a ``ValueError``) so
callers that only care about "bad input" can catch one type.
"""


class GraphError(ValueError):
    pass


# -- graph construction and editing ------------------------------------------


class VertexOutOfRange(GraphError):
    pass


class LoopEdge(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class EdgePresent(GraphError):
    pass


class EdgeAbsent(GraphError):
    pass


class Graph6Error(GraphError):
    """Malformed graph6 text (bad header, length mismatch, nonzero padding)."""


# -- chordal structure -------------------------------------------------------


class NotChordal(GraphError):
    pass


class CompleteGraph(GraphError):
    pass


class DominatingVertex(GraphError):
    pass


class NotSimplicial(GraphError):
    pass


class EdgeNotIncident(GraphError):
    pass


class NotPermutation(GraphError):
    pass


class TargetNotBelow(GraphError):
    pass


class TooFewVertices(GraphError):
    pass


# -- extremal parameters and oracle ------------------------------------------


class InvalidParameters(GraphError):
    pass


class OrderTooLarge(GraphError):
    pass
