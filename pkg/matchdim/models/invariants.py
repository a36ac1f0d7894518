"""
Models for matchings and invariant profiles.
"""
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Tuple

from pydantic import BaseModel, ConfigDict, Field

from matchdim.models.graph import Edge, VertexSet, normalize_edge


@dataclass(frozen=True)
class Matching:
    """A set of edges (normalised to u < v). Disjointness is checked by the predicates."""
    edges: FrozenSet[Edge] = frozenset()

    @classmethod
    def of(cls, pairs: Iterable[Tuple[int, int]]) -> "Matching":
        return cls(frozenset(normalize_edge(u, v) for u, v in pairs))

    def __len__(self) -> int:
        return len(self.edges)

    def edge_list(self) -> List[Edge]:
        return sorted(self.edges)

    @property
    def vertices(self) -> VertexSet:
        """Vertices covered by the matching."""
        return frozenset(x for edge in self.edges for x in edge)


class InvariantProfile(BaseModel):
    """
    The quadruple (ind-match, min-match, match, dim) of a graph.

    Ordered the same way as the tuple (a, b, c, d) of the realisation
    theorem, which is also the JSON key order.
    """
    model_config = ConfigDict(frozen=True)

    ind_match: int = Field(..., ge=0, description="Maximum induced matching size (a)")
    min_match: int = Field(..., ge=0, description="Minimum maximal matching size (b)")
    match: int = Field(..., ge=0, description="Maximum matching size (c)")
    dim: int = Field(..., ge=0, description="Maximum independent set size (d)")

    @classmethod
    def from_tuple(cls, values: Tuple[int, int, int, int]) -> "InvariantProfile":
        a, b, c, d = values
        return cls(ind_match=a, min_match=b, match=c, dim=d)

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.ind_match, self.min_match, self.match, self.dim)

    def __add__(self, other: "InvariantProfile") -> "InvariantProfile":
        return InvariantProfile.from_tuple(
            tuple(x + y for x, y in zip(self.as_tuple(), other.as_tuple()))
        )


@dataclass(frozen=True)
class WitnessBundle:
    """Optimal objects certifying each coordinate of a profile."""
    induced: Matching
    minimum_maximal: Matching
    maximum: Matching
    independent: VertexSet

    def to_dict(self) -> dict:
        return {
            "induced_matching": [list(e) for e in self.induced.edge_list()],
            "minimum_maximal_matching": [list(e) for e in self.minimum_maximal.edge_list()],
            "maximum_matching": [list(e) for e in self.maximum.edge_list()],
            "independent_set": sorted(self.independent),
        }
