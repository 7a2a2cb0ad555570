"""Exception types shared across the package."""


class GraphError(ValueError):
    """Invalid graph construction or graph-spec string."""


class InvalidSequenceError(ValueError):
    """A source sequence that cannot be replayed legally."""


class InvalidMoveError(ValueError):
    """A game move that is illegal in the current state."""


class BudgetExceededError(RuntimeError):
    """A solve gave up because a vertex, node or time budget ran out.

    Deliberately not a ValueError: the input was well-formed, the
    instance is just too large for the configured budget.  Callers that
    want an answer anyway must raise the budget explicitly; nothing in
    this package ever silently degrades an exact answer to a bound.
    """

    def __init__(self, message: str, *, nodes: int | None = None):
        super().__init__(message)
        self.nodes = nodes
