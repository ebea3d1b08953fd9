"""Exception types shared across the package."""
from __future__ import annotations


class ShiftCritError(Exception):
    """Base class for package-specific errors."""


class InvalidParameterError(ShiftCritError, ValueError):
    """A numeric argument is outside its documented range."""


class InvalidVertexError(ShiftCritError, ValueError):
    """A vertex is malformed or not present in the graph at hand."""


class SequenceLengthError(ShiftCritError, ValueError):
    """A subset sequence is too short for the vertex set it must serve."""


class GoodnessError(ShiftCritError, ValueError):
    """A sequence violates the non-containment condition.

    Carries the lexicographically least violating pair (i, j), meaning
    entry i is a subset of entry j even though (i, j) is a constrained
    vertex.
    """

    def __init__(self, pair: tuple[int, int], message: str | None = None):
        self.pair = pair
        if message is None:
            i, j = pair
            message = f"entry {i} is contained in entry {j} but ({i},{j}) is constrained"
        super().__init__(message)


class ImproperColoringError(ShiftCritError, ValueError):
    """A coloring gives two adjacent vertices the same color.

    Carries one witnessing edge (u, w).
    """

    def __init__(self, edge, message: str | None = None):
        self.edge = edge
        if message is None:
            u, w = edge
            message = f"adjacent vertices {tuple(u)} and {tuple(w)} share a color"
        super().__init__(message)


class ConstructionError(ShiftCritError, RuntimeError):
    """Internal verification of a constructed certificate failed.

    This indicates a bug, not bad input: the constructions that raise it
    are proven to succeed for every valid argument.
    """
