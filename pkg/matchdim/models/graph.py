"""
Immutable finite simple graph value type.

Vertices are the dense integers 0..n-1. The symbolic names of the constructions
(v_3, x_1, y_2, ...) live in an optional label map; no algorithm reads them.
Adjacency is built once at construction both as sorted neighbour tuples and
as integer bitmasks, so solvers get O(deg) scans and cheap set algebra.
"""
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple

from matchdim.exceptions import GraphError

Edge = Tuple[int, int]
VertexSet = FrozenSet[int]


def normalize_edge(u: int, v: int) -> Edge:
    """Return the unordered pair {u, v} as (min, max)."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph on vertices 0..n-1."""
    n: int
    edges: FrozenSet[Edge] = frozenset()
    labels: Optional[Mapping[int, str]] = field(default=None, hash=False)

    _neighbors: Tuple[Tuple[int, ...], ...] = field(
        init=False, repr=False, compare=False, hash=False
    )
    _masks: Tuple[int, ...] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise GraphError(f"vertex count must be a non-negative integer, got {self.n!r}")

        normalized = set()
        for pair in self.edges:
            try:
                u, v = pair
            except (TypeError, ValueError):
                raise GraphError(f"edge {pair!r} is not a vertex pair")
            if u == v:
                raise GraphError(f"loop at vertex {u} rejected (graphs are simple)")
            for x in (u, v):
                if not 0 <= x < self.n:
                    raise GraphError(f"vertex {x} out of range [0, {self.n})")
            normalized.add(normalize_edge(u, v))
        object.__setattr__(self, "edges", frozenset(normalized))

        if self.labels is not None:
            labels = dict(self.labels)
            for v in labels:
                if not 0 <= v < self.n:
                    raise GraphError(f"label for vertex {v} out of range [0, {self.n})")
            object.__setattr__(self, "labels", labels or None)

        adjacency: List[List[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adjacency[u].append(v)
            adjacency[v].append(u)
        neighbors = tuple(tuple(sorted(adj)) for adj in adjacency)
        masks = tuple(sum(1 << w for w in adj) for adj in neighbors)
        object.__setattr__(self, "_neighbors", neighbors)
        object.__setattr__(self, "_masks", masks)

    # ── Accessors ──────────────────────────────────────────────────

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def masks(self) -> Tuple[int, ...]:
        """Neighbourhood of each vertex as a bitmask."""
        return self._masks

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range [0, {self.n})")

    def check_vertices(self, vs: Iterable[int]) -> VertexSet:
        members = frozenset(vs)
        for v in members:
            self.check_vertex(v)
        return members

    def neighbors(self, v: int) -> Tuple[int, ...]:
        self.check_vertex(v)
        return self._neighbors[v]

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return len(self._neighbors[v])

    def degrees(self) -> List[int]:
        return [len(adj) for adj in self._neighbors]

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges

    def edge_list(self) -> List[Edge]:
        """Edges as (u, v) with u < v, sorted lexicographically."""
        return sorted(self.edges)

    def label(self, v: int) -> str:
        self.check_vertex(v)
        if self.labels and v in self.labels:
            return self.labels[v]
        return str(v)

    def labels_dict(self) -> Dict[int, str]:
        return dict(self.labels) if self.labels else {}

    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    def is_edgeless(self) -> bool:
        return not self.edges

    def all_pairs(self) -> Iterable[Edge]:
        return combinations(range(self.n), 2)
