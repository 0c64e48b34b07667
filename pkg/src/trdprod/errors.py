"""Exception types shared across the package."""

from __future__ import annotations


class TrdError(Exception):
    """Base class for all package errors."""


class GraphInputError(TrdError, ValueError):
    """Malformed graph input: bad edge list, family parameter out of range, unparseable token."""


class Graph6ParseError(GraphInputError):
    """Invalid graph6 text; ``offset`` points at the offending byte."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class HypothesisError(TrdError, ValueError):
    """The structural hypothesis an operation requires does not hold (e.g. isolated vertices)."""


class PreconditionError(TrdError, ValueError):
    """A documented operation precondition failed (invalid labeling, wrong set role, ...)."""


class SizeLimitError(TrdError, ValueError):
    """Instance exceeds a configured exact-solver size limit."""


class SolverTimeout(TrdError, RuntimeError):
    """Search budget exhausted before optimality was proven.

    Carries the best certified bounds at the moment of interruption; callers
    must treat the result as unknown, never as an approximation.
    """

    def __init__(self, message: str, lower_bound: int | None = None,
                 upper_bound: int | None = None, nodes: int = 0):
        super().__init__(message)
        self.lower_bound = lower_bound
        self.upper_bound = upper_bound
        self.nodes = nodes


class ConsistencyError(TrdError, RuntimeError):
    """A certified object failed re-verification; this signals an internal bug."""
