"""
Error hierarchy shared by every treebound module.

Validation of tree-decompositions never raises; it returns a
``ValidationReport``. Everything else that cannot produce an exact answer
raises one of the classes below, and the CLI maps each to an exit code.
"""
from __future__ import annotations


class TreeboundError(Exception):
    """Base class for all treebound errors."""


class InvalidParameterError(TreeboundError, ValueError):
    """An argument is out of its documented range (size, weight, vertex index)."""


class DomainError(TreeboundError):
    """A construction was asked for outside the hypotheses it is defined under."""


class PreconditionError(TreeboundError):
    """An input value (decomposition, homomorphism) fails the checks an operation requires."""


class BudgetExceededError(TreeboundError):
    """A size guard or time budget was exceeded; no approximate answer is returned."""

    def __init__(self, message: str, *, limit: float | None = None, actual: float | None = None) -> None:
        super().__init__(message)
        self.limit = limit
        self.actual = actual


class DependencyError(TreeboundError):
    """A required artifact (a verified Burling weighting) is not available."""


class MalformedInputError(TreeboundError):
    """A .gr / .td / family / weights text does not parse."""

    def __init__(self, message: str, *, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class SolverConsistencyError(TreeboundError):
    """Two exact routes to the same value disagree."""
