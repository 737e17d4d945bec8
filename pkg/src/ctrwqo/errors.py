"""Exception hierarchy.

Input problems subclass ``ValueError`` so callers can catch them generically;
``SearchExhausted`` is deliberately *not* a ``ValueError``: it means "unknown",
never "no".
"""


class GraphError(ValueError):
    """Base class for invalid graph input."""


class MalformedGraph6(GraphError):
    pass


class TooLarge(GraphError):
    pass


class NotAnEdge(GraphError):
    pass


class OutOfRange(GraphError):
    pass


class DisconnectedInput(GraphError):
    pass


class KeyMismatch(GraphError):
    pass


class NotACycle(GraphError):
    pass


class EmptySequence(GraphError):
    pass


class BlockWithoutRoot(GraphError):
    pass


class NotCliqueCactus(GraphError):
    pass


class ParamOutOfRange(GraphError):
    pass


class SearchExhausted(RuntimeError):
    """The node budget ran out before the search could decide."""

    def __init__(self, nodes: int):
        super().__init__(f"search budget exhausted after {nodes} nodes")
        self.nodes = nodes
