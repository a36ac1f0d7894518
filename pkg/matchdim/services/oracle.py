"""
Exhaustive oracle - recomputes a profile by brute force, sharing no code
with the branch-and-bound solvers.

- Every matching is enumerated by include/exclude recursion over the
  sorted edge list; each complete matching is tested for maximality and
  induced-ness directly from the definitions.
- dim(G) is the largest independent subset among all 2^n vertex subsets.

Only meant for small graphs; the vertex cap comes from settings
(MATCHDIM_ORACLE_CAP, default 12).
"""
from typing import List, Optional

import structlog

from matchdim.config import Settings, get_settings
from matchdim.exceptions import EmptyGraphError, OracleCapError
from matchdim.models.graph import Edge, Graph
from matchdim.models.invariants import InvariantProfile

logger = structlog.get_logger()


class ExhaustiveOracle:
    """Brute-force profile computation for graphs up to the configured cap."""

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or get_settings()

    @property
    def cap(self) -> int:
        return self.settings.oracle_cap

    def profile(self, g: Graph) -> InvariantProfile:
        if g.n == 0:
            raise EmptyGraphError("oracle profile is undefined for the graph with no vertices")
        if g.n > self.cap:
            raise OracleCapError(g.n, self.cap)

        edges = g.edge_list()
        stats = {"match": 0, "min_match": None, "ind_match": 0, "count": 0}
        self._enumerate(g, edges, 0, [], set(), stats)
        profile = InvariantProfile(
            ind_match=stats["ind_match"],
            min_match=stats["min_match"],
            match=stats["match"],
            dim=self._independence_number(g),
        )
        logger.debug("Oracle profile", n=g.n, matchings=stats["count"], profile=profile.as_tuple())
        return profile

    def _enumerate(self, g: Graph, edges: List[Edge], i: int, chosen: List[Edge], used: set, stats: dict) -> None:
        if i == len(edges):
            stats["count"] += 1
            size = len(chosen)
            stats["match"] = max(stats["match"], size)
            if self._is_maximal(edges, used):
                if stats["min_match"] is None or size < stats["min_match"]:
                    stats["min_match"] = size
            if size > stats["ind_match"] and self._is_induced(g, chosen):
                stats["ind_match"] = size
            return

        u, v = edges[i]
        if u not in used and v not in used:
            chosen.append((u, v))
            used.update((u, v))
            self._enumerate(g, edges, i + 1, chosen, used, stats)
            chosen.pop()
            used.difference_update((u, v))
        self._enumerate(g, edges, i + 1, chosen, used, stats)

    @staticmethod
    def _is_maximal(edges: List[Edge], used: set) -> bool:
        return all(u in used or v in used for u, v in edges)

    @staticmethod
    def _is_induced(g: Graph, chosen: List[Edge]) -> bool:
        for i, e in enumerate(chosen):
            for f in chosen[i + 1:]:
                for x in e:
                    for y in f:
                        if g.has_edge(x, y):
                            return False
        return True

    @staticmethod
    def _independence_number(g: Graph) -> int:
        edges = [(1 << u) | (1 << v) for u, v in g.edges]
        best = 0
        for subset in range(1 << g.n):
            size = bin(subset).count("1")
            if size <= best:
                continue
            if all(subset & e != e for e in edges):
                best = size
        return best


# ── Singleton ─────────────────────────────────────────────────────
_oracle: Optional[ExhaustiveOracle] = None


def get_oracle() -> ExhaustiveOracle:
    """Get the singleton oracle bound to the global settings."""
    global _oracle
    if _oracle is None:
        _oracle = ExhaustiveOracle()
    return _oracle


def oracle_profile(g: Graph, settings: Optional[Settings] = None) -> InvariantProfile:
    """Profile by exhaustive enumeration; raises OracleCapError above the cap."""
    oracle = ExhaustiveOracle(settings) if settings is not None else get_oracle()
    return oracle.profile(g)
