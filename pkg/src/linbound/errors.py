"""Exception hierarchy shared by all modules.

The CLI maps each class to a fixed exit code.
"""


class LinboundError(Exception):
    """Base class for library errors."""


class DomainError(LinboundError, ValueError):
    """Arguments outside the mathematical domain of an operation."""


class InfeasibleError(DomainError):
    """No code with the requested parameters can be built."""


class DistanceTooSmallError(DomainError):
    """A code does not reach the minimum distance an analysis assumes."""


class CapExceededError(LinboundError):
    """An enumeration or word-size cap would be exceeded."""


class BudgetExceededError(LinboundError):
    """A backtracking search ran out of nodes."""

    def __init__(self, message, nodes_explored=0):
        super().__init__(message)
        self.nodes_explored = nodes_explored
