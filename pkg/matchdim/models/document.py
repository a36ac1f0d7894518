"""
On-disk graph document.
"""
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from matchdim.models.graph import Graph


class GraphDocument(BaseModel):
    """JSON form of a Graph: n, sorted edge pairs (u < v) and optional labels."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    n: int = Field(..., ge=0)
    edges: List[Tuple[int, int]] = Field(default_factory=list)
    labels: Optional[Dict[int, str]] = None

    @classmethod
    def from_graph(cls, g: Graph) -> "GraphDocument":
        return cls(n=g.n, edges=g.edge_list(), labels=g.labels_dict() if g.labels else None)

    def to_graph(self) -> Graph:
        """Build the Graph; raises GraphError on loops or out-of-range indices."""
        return Graph(n=self.n, edges=frozenset(self.edges), labels=self.labels)

    def canonical(self) -> dict:
        payload = {"n": self.n, "edges": sorted([min(u, v), max(u, v)] for u, v in self.edges)}
        if self.labels:
            payload["labels"] = {str(k): self.labels[k] for k in sorted(self.labels)}
        return payload
