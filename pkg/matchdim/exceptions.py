"""
Exception hierarchy.

Every error the library raises on purpose derives from MatchDimError so the
command-line layer can map it to an exit code without catching bare Exception.
"""
from typing import Optional, Tuple


class MatchDimError(Exception):
    """Base class for matchdim errors."""
    pass


class GraphError(MatchDimError, ValueError):
    """Invalid graph construction: loop, out-of-range vertex, bad parameter."""
    pass


class NotIndependentError(GraphError):
    """A vertex set expected to be independent spans an edge."""

    def __init__(self, edge: Tuple[int, int]):
        self.edge = edge
        super().__init__(f"vertex set is not independent: edge {{{edge[0]},{edge[1]}}} lies inside it")


class EmptyGraphError(MatchDimError):
    """A solver was handed the graph with no vertices."""
    pass


class OracleCapError(MatchDimError):
    """Graph is too large for exhaustive enumeration."""

    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        super().__init__(f"graph has {n} vertices, oracle cap is {cap}")


class InfeasibleTupleError(MatchDimError, ValueError):
    """(a, b, c, d) violates 1 <= a <= b <= c <= 2b, d >= max{a, 2(c-b)}."""

    def __init__(self, tuple_: Tuple[int, int, int, int], violated: str):
        self.tuple = tuple_
        self.violated = violated
        super().__init__(f"infeasible tuple {tuple_}: {violated} violated")


class PreconditionError(MatchDimError):
    """A verifier check was called on input outside its hypotheses."""
    pass


class DocumentError(MatchDimError, ValueError):
    """A graph file could not be parsed or does not describe a simple graph."""

    def __init__(self, message: str, source: Optional[str] = None):
        self.source = source
        prefix = f"{source}: " if source else ""
        super().__init__(f"{prefix}{message}")
