"""
Matching predicates and the three matching invariants.

- match(G): Edmonds' blossom algorithm via networkx (polynomial).
- min-match(G): branch and bound over maximal matchings. Some endpoint of
  any uncovered edge {u, v} must end up matched, so the search branches on
  the edges meeting u or v whose ends are both still free.
- ind-match(G): maximum independent set of the conflict graph, whose
  vertices are the edges of G (two edges conflict when they share a vertex
  or an edge of G joins them).

Edgeless graphs have match = min-match = ind-match = 0; the empty matching
is their only maximal matching.
"""
from typing import List, Optional, Sequence, Tuple

import networkx as nx
import structlog

from matchdim.exceptions import EmptyGraphError, GraphError
from matchdim.models.graph import Edge, Graph, VertexSet
from matchdim.models.invariants import Matching
from matchdim.services.graph_ops import to_networkx
from matchdim.services.independence import iter_bits, maximum_independent_set

logger = structlog.get_logger()


def _require_vertices(g: Graph, invariant: str) -> None:
    if g.n == 0:
        raise EmptyGraphError(f"{invariant} is undefined for the graph with no vertices")


# ── Predicates ────────────────────────────────────────────────────

def _check_edges(g: Graph, m: Matching) -> None:
    for u, v in m.edge_list():
        if not g.has_edge(u, v):
            raise GraphError(f"pair {{{u},{v}}} is not an edge of the graph")


def matched_vertices(m: Matching) -> VertexSet:
    return m.vertices


def _disjoint(m: Matching) -> bool:
    return len(m.vertices) == 2 * len(m)


def is_matching(g: Graph, m: Matching) -> bool:
    """True iff the edges of m are pairwise vertex-disjoint."""
    _check_edges(g, m)
    return _disjoint(m)


def _require_matching(g: Graph, m: Matching) -> None:
    if not is_matching(g, m):
        raise GraphError("edge set is not a matching (two edges share a vertex)")


def is_maximal_matching(g: Graph, m: Matching) -> bool:
    """True iff no edge of G is disjoint from every edge of m."""
    _require_matching(g, m)
    covered = m.vertices
    return all(u in covered or v in covered for u, v in g.edges)


def is_induced_matching(g: Graph, m: Matching) -> bool:
    """True iff no edge of G meets two distinct edges of m."""
    _require_matching(g, m)
    owner = {}
    for index, (u, v) in enumerate(m.edge_list()):
        owner[u] = index
        owner[v] = index
    for u, v in g.edges:
        if u in owner and v in owner and owner[u] != owner[v]:
            return False
    return True


def is_perfect_matching(g: Graph, m: Matching) -> bool:
    """True iff m covers every vertex."""
    _require_matching(g, m)
    return len(m.vertices) == g.n


# ── match(G) ──────────────────────────────────────────────────────

def _blossom_size(graph: nx.Graph) -> int:
    if graph.number_of_edges() == 0:
        return 0
    return len(nx.max_weight_matching(graph, maxcardinality=True))


def matching_number(g: Graph) -> int:
    """match(G)."""
    _require_vertices(g, "match")
    return _blossom_size(to_networkx(g))


def maximum_matching(g: Graph) -> Matching:
    """
    Lexicographically smallest maximum matching.

    Scans the sorted edges and keeps an edge when the blossom matching
    number of what remains still reaches the optimum.
    """
    _require_vertices(g, "match")
    graph = to_networkx(g)
    target = _blossom_size(graph)

    chosen: List[Edge] = []
    free = set(g.vertices)
    for u, v in g.edge_list():
        if len(chosen) == target:
            break
        if u not in free or v not in free:
            continue
        rest = graph.subgraph(free - {u, v})
        if len(chosen) + 1 + _blossom_size(rest) == target:
            chosen.append((u, v))
            free -= {u, v}
    return Matching(frozenset(chosen))


# ── min-match(G) ──────────────────────────────────────────────────

def _greedy_matching(free: int, masks: Sequence[int]) -> List[Edge]:
    """Greedy maximal matching of G[free], scanning vertices in order."""
    edges: List[Edge] = []
    for u in iter_bits(free):
        if not free >> u & 1:
            continue
        partners = masks[u] & free
        if partners:
            w = (partners & -partners).bit_length() - 1
            edges.append((u, w))
            free &= ~((1 << u) | (1 << w))
    return edges


class MinimumMaximalMatchingSearch:
    """
    Per-invocation search state for min-match.

    The free set F is the bitmask of uncovered vertices; what remains to
    choose is a maximal matching of G[F], whose size is at least half of
    any maximal matching of G[F] (the greedy one gives the bound).

    In witness mode ties are resolved towards the lexicographically
    smallest sorted edge list, so equal-size branches are not pruned.
    """

    def __init__(self, g: Graph, witness: bool = False):
        self.masks = g.masks
        self.witness = witness
        self.nodes = 0
        self.seen = {}
        initial = _greedy_matching((1 << g.n) - 1, self.masks)
        self.best_size = len(initial)
        self.best_edges: Tuple[Edge, ...] = tuple(sorted(initial))

    def run(self, n: int) -> Tuple[int, Tuple[Edge, ...]]:
        self._expand((1 << n) - 1, ())
        return self.best_size, self.best_edges

    def _branch_vertex(self, free: int) -> Optional[int]:
        best_vertex, best_degree = None, None
        for u in iter_bits(free):
            degree = bin(self.masks[u] & free).count("1")
            if degree and (best_degree is None or degree < best_degree):
                best_vertex, best_degree = u, degree
        return best_vertex

    def _record(self, chosen: Tuple[Edge, ...]) -> None:
        size = len(chosen)
        ordered = tuple(sorted(chosen))
        if size < self.best_size or (size == self.best_size and ordered < self.best_edges):
            self.best_size = size
            self.best_edges = ordered

    def _expand(self, free: int, chosen: Tuple[Edge, ...]) -> None:
        self.nodes += 1
        size = len(chosen)
        u = self._branch_vertex(free)
        if u is None:
            self._record(chosen)
            return

        if self.witness:
            if self.seen.get(free, size + 1) < size:
                return
        elif self.seen.get(free, size + 1) <= size:
            return
        self.seen[free] = size

        bound = size + (len(_greedy_matching(free, self.masks)) + 1) // 2
        if bound > self.best_size or (bound == self.best_size and not self.witness):
            return

        partners = self.masks[u] & free
        v = min(iter_bits(partners), key=lambda w: (bin(self.masks[w] & free).count("1"), w))
        branches = set()
        for p in (u, v):
            for q in iter_bits(self.masks[p] & free):
                branches.add((p, q) if p < q else (q, p))
        for p, q in sorted(branches):
            self._expand(free & ~((1 << p) | (1 << q)), chosen + ((p, q),))


def _solve_min_match(g: Graph, witness: bool) -> Tuple[int, Tuple[Edge, ...]]:
    _require_vertices(g, "min-match")
    if g.is_edgeless():
        return 0, ()
    search = MinimumMaximalMatchingSearch(g, witness=witness)
    size, edges = search.run(g.n)
    logger.debug("Minimum maximal matching search done", n=g.n, size=size, nodes=search.nodes)
    return size, edges


def min_matching_number(g: Graph) -> int:
    """min-match(G)."""
    size, _ = _solve_min_match(g, witness=False)
    return size


def minimum_maximal_matching(g: Graph) -> Matching:
    """Lexicographically smallest maximal matching of minimum size."""
    _, edges = _solve_min_match(g, witness=True)
    return Matching(frozenset(edges))


# ── ind-match(G) ──────────────────────────────────────────────────

def conflict_graph(g: Graph) -> Graph:
    """
    Graph on the sorted edges of G; two edges are adjacent when they share
    a vertex or some edge of G joins them. Vertex i is g.edge_list()[i].
    """
    edges = g.edge_list()
    reach = [g.masks[u] | g.masks[v] | (1 << u) | (1 << v) for u, v in edges]
    conflicts = []
    for i, (u, v) in enumerate(edges):
        for j in range(i + 1, len(edges)):
            p, q = edges[j]
            if reach[i] >> p & 1 or reach[i] >> q & 1:
                conflicts.append((i, j))
    labels = {i: f"{{{u},{v}}}" for i, (u, v) in enumerate(edges)}
    return Graph(n=len(edges), edges=frozenset(conflicts), labels=labels)


def maximum_induced_matching(g: Graph) -> Matching:
    """Lexicographically smallest maximum induced matching."""
    _require_vertices(g, "ind-match")
    if g.is_edgeless():
        return Matching()
    edges = g.edge_list()
    chosen = maximum_independent_set(conflict_graph(g))
    return Matching(frozenset(edges[i] for i in chosen))


def induced_matching_number(g: Graph) -> int:
    """ind-match(G)."""
    return len(maximum_induced_matching(g))
