"""Custom exceptions for the oriented-matroid toolkit.

Every exception carries the CLI exit code it maps to:
0 pass, 1 violation, 2 input error, 3 resource limit, 4 hypothesis not met.
"""

EXIT_VIOLATION = 1
EXIT_INPUT_ERROR = 2
EXIT_RESOURCE_LIMIT = 3
EXIT_HYPOTHESIS_NOT_MET = 4


class OMException(Exception):
    """Base exception for all toolkit errors."""

    def __init__(self, message: str, exit_code: int = EXIT_INPUT_ERROR) -> None:
        self.message = message
        self.exit_code = exit_code
        super().__init__(self.message)


class InvalidInput(OMException):
    """Raised when input cannot be parsed or violates a precondition."""

    def __init__(self, message: str) -> None:
        super().__init__(message, exit_code=EXIT_INPUT_ERROR)


class GroundSetMismatch(InvalidInput):
    """Raised when two sign vectors live on different ground sets."""

    def __init__(self, message: str = "Sign vectors do not share a ground set") -> None:
        super().__init__(message)


class NotACovector(InvalidInput):
    """Raised when a sign vector is expected to be a covector of the lattice."""

    def __init__(self, message: str = "Sign vector is not a covector") -> None:
        super().__init__(message)


class NotATope(InvalidInput):
    """Raised when a sign vector is expected to be a tope of the lattice."""

    def __init__(self, message: str = "Sign vector is not a tope") -> None:
        super().__init__(message)


class VertexNotInGraph(InvalidInput):
    """Raised when a path query names a vertex the graph does not have."""

    def __init__(self, message: str = "Vertex not in graph") -> None:
        super().__init__(message)


class EmptyTuple(InvalidInput):
    """Raised when a crabbed hull is requested for no vectors at all."""

    def __init__(self, message: str = "Crabbed hull needs at least one vector") -> None:
        super().__init__(message)


class ResourceLimitExceeded(OMException):
    """Raised when a computation exceeds a configured budget."""

    def __init__(self, message: str) -> None:
        super().__init__(message, exit_code=EXIT_RESOURCE_LIMIT)


class SamplingBudgetExhausted(ResourceLimitExceeded):
    """Raised when rejection sampling gives up."""


class HypothesisNotMet(OMException):
    """Raised when an input fails the precondition of a theorem-level check."""

    def __init__(self, message: str) -> None:
        super().__init__(message, exit_code=EXIT_HYPOTHESIS_NOT_MET)


class NotGraded(HypothesisNotMet):
    """Raised when a rank is requested from a lattice that is not graded."""

    def __init__(self, message: str = "Lattice is not graded; rank undefined") -> None:
        super().__init__(message)


class EquivalenceViolated(OMException):
    """Raised when conditions that must agree by the theorem disagree."""

    def __init__(self, message: str) -> None:
        super().__init__(message, exit_code=EXIT_VIOLATION)
