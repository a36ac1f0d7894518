"""
Graph Operations - generators and structural operators on Graph values.

This module handles:
- Generators: empty, explicit edge list, complete graph K_n, star K_{1,s}
- Induced subgraphs, vertex deletion, disjoint union
- The S-suspension G^S (one new vertex joined to every vertex outside S)
- Independence, connectivity and component queries

All functions are pure; Graph values are never mutated.
"""
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import structlog

from matchdim.exceptions import GraphError, NotIndependentError
from matchdim.models.graph import Edge, Graph, VertexSet

logger = structlog.get_logger()

SUSPENSION_LABEL = "susp"


# ── Generators ────────────────────────────────────────────────────

def empty_graph(n: int) -> Graph:
    """n isolated vertices."""
    return Graph(n=n)


def with_edges(
    n: int,
    pairs: Iterable[Tuple[int, int]],
    labels: Optional[Dict[int, str]] = None,
) -> Graph:
    """Graph on n vertices with exactly the given (de-duplicated) unordered pairs."""
    return Graph(n=n, edges=frozenset(tuple(p) for p in pairs), labels=labels)


def complete_graph(n: int) -> Graph:
    """The complete graph K_n, labelled x_1..x_n."""
    if n < 1:
        raise GraphError(f"complete graph needs n >= 1, got {n}")
    labels = {i: f"x_{i + 1}" for i in range(n)}
    return Graph(n=n, edges=frozenset(combinations(range(n), 2)), labels=labels)


def star_graph(s: int) -> Graph:
    """
    The star K_{1,s}.

    Leaves are 0..s-1 (labels x_1..x_s); the centre is the last index s
    (label x_v).
    """
    if s < 1:
        raise GraphError(f"star graph needs s >= 1, got {s}")
    labels = {i: f"x_{i + 1}" for i in range(s)}
    labels[s] = "x_v"
    return Graph(n=s + 1, edges=frozenset((i, s) for i in range(s)), labels=labels)


# ── Structural operators ──────────────────────────────────────────

def induced_subgraph(g: Graph, w: Iterable[int]) -> Graph:
    """
    The induced subgraph G_W.

    Vertices are re-indexed 0..|W|-1 in ascending original order; labels
    are carried over.
    """
    members = sorted(g.check_vertices(w))
    index = {old: new for new, old in enumerate(members)}
    edges = frozenset(
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    )
    labels = None
    if g.labels:
        labels = {index[v]: text for v, text in g.labels.items() if v in index}
    return Graph(n=len(members), edges=edges, labels=labels)


def delete_vertex(g: Graph, v: int) -> Graph:
    """G with vertex v removed (remaining vertices re-indexed in order)."""
    g.check_vertex(v)
    return induced_subgraph(g, complement_of(g, [v]))


def disjoint_union(gs: Sequence[Graph]) -> Graph:
    """
    Index-shifted disjoint union.

    Component i occupies a contiguous index block; its labels get the
    suffix "@i" so names stay unique.
    """
    if not gs:
        raise GraphError("disjoint union of an empty list")
    if len(gs) == 1:
        return gs[0]

    offset = 0
    edges: List[Edge] = []
    labels: Dict[int, str] = {}
    for component, g in enumerate(gs):
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        for v in g.vertices:
            labels[v + offset] = f"{g.label(v)}@{component}"
        offset += g.n
    return Graph(n=offset, edges=frozenset(edges), labels=labels)


def s_suspension(g: Graph, s: Iterable[int]) -> Graph:
    """
    The S-suspension G^S.

    Adds vertex w = n joined to every vertex not in S. S must be an
    independent set of G; the empty set gives the usual suspension.
    """
    members = g.check_vertices(s)
    violating = independence_violation(g, members)
    if violating is not None:
        raise NotIndependentError(violating)

    w = g.n
    edges = set(g.edges)
    edges.update((x, w) for x in g.vertices if x not in members)
    labels = g.labels_dict()
    labels[w] = SUSPENSION_LABEL
    return Graph(n=g.n + 1, edges=frozenset(edges), labels=labels)


# ── Queries ───────────────────────────────────────────────────────

def independence_violation(g: Graph, s: Iterable[int]) -> Optional[Edge]:
    """Smallest edge of G with both ends in S, or None if S is independent."""
    members = g.check_vertices(s)
    for u, v in g.edge_list():
        if u in members and v in members:
            return (u, v)
    return None


def is_independent_set(g: Graph, s: Iterable[int]) -> bool:
    """True iff no edge of G has both endpoints in S (the empty set qualifies)."""
    return independence_violation(g, s) is None


def complement_of(g: Graph, w: Iterable[int]) -> VertexSet:
    """V(G) minus W."""
    members = g.check_vertices(w)
    return frozenset(v for v in g.vertices if v not in members)


def isolated_vertices(g: Graph) -> List[int]:
    return [v for v in g.vertices if g.degree(v) == 0]


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def neighbors(g: Graph, v: int) -> VertexSet:
    return frozenset(g.neighbors(v))


def to_networkx(g: Graph) -> nx.Graph:
    """networkx view with nodes 0..n-1 inserted in order."""
    graph = nx.Graph()
    graph.add_nodes_from(g.vertices)
    graph.add_edges_from(g.edge_list())
    return graph


def connected(g: Graph) -> bool:
    """Connectivity; the graphs with 0 and 1 vertices count as connected."""
    if g.n <= 1:
        return True
    return nx.is_connected(to_networkx(g))


def connected_components(g: Graph) -> List[VertexSet]:
    """Components ordered by their smallest vertex."""
    components = [frozenset(c) for c in nx.connected_components(to_networkx(g))]
    return sorted(components, key=min)
