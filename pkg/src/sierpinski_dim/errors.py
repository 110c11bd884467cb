"""Exception hierarchy shared by every module of the package."""


class GraphError(ValueError):
    """Base class for invalid-input errors raised by this package."""


class OutOfRange(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class NotATree(GraphError):
    pass


class IsAPath(GraphError):
    pass


class Disconnected(GraphError):
    pass


class InducedDisconnected(GraphError):
    pass


class EmptySetOnNontrivialGraph(GraphError):
    pass


class FunctionShapeMismatch(GraphError):
    pass


class WrongFactors(GraphError):
    pass


class HypothesisViolated(GraphError):
    """A closed formula was asked for outside the hypotheses it is proven under."""


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BudgetExceeded(RuntimeError):
    """A search ran out of budget before it could certify an exact answer.

    ``lower`` and ``upper`` bracket the true value. ``partial`` carries
    whatever report the search had assembled so far (may be ``None``).
    """

    def __init__(self, message: str, lower: int, upper: int, partial=None):
        super().__init__(message)
        self.lower = lower
        self.upper = upper
        self.partial = partial


class FunctionSpaceTooLarge(OverflowError):
    """|V(H)|^|V(G)| exceeds the configured function budget."""
