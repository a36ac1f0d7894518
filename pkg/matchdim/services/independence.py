"""
Maximum independent set by branch and bound.

dim(G) = dim K[V(G)]/I(G) equals the largest size of an independent vertex
set, so the edge-ideal dimension is computed entirely on the graph side.

Search:
- Candidates and the partial solution are bitmasks over vertex indices.
- Branch on the lowest candidate v: include v (drop v and its neighbours),
  then exclude v. A candidate with no candidate neighbours is always
  included, since every optimum contains it.
- Bound: greedy clique cover of the candidates. An independent set meets
  each clique at most once, so the number of cliques caps what is left.

Leaves are visited in lexicographic order of their sorted vertex lists, so
the first optimum found is the lexicographically smallest one and is kept
as the witness.
"""
from typing import Sequence, Tuple

import structlog

from matchdim.exceptions import EmptyGraphError
from matchdim.models.graph import Graph, VertexSet

logger = structlog.get_logger()


def iter_bits(mask: int):
    """Indices of the set bits of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def clique_cover_bound(candidates: int, masks: Sequence[int]) -> int:
    """Number of cliques in a greedy clique partition of the candidate set."""
    count = 0
    while candidates:
        low = candidates & -candidates
        v = low.bit_length() - 1
        candidates ^= low
        extendable = candidates & masks[v]
        while extendable:
            w_bit = extendable & -extendable
            w = w_bit.bit_length() - 1
            candidates ^= w_bit
            extendable &= masks[w]
        count += 1
    return count


class IndependentSetSearch:
    """Per-invocation search state for one maximum independent set."""

    def __init__(self, masks: Sequence[int]):
        self.masks = masks
        self.best_size = -1
        self.best_mask = 0
        self.nodes = 0

    def run(self) -> Tuple[int, int]:
        self._expand((1 << len(self.masks)) - 1, 0, 0)
        return self.best_size, self.best_mask

    def _expand(self, candidates: int, chosen: int, size: int) -> None:
        self.nodes += 1
        if not candidates:
            if size > self.best_size:
                self.best_size = size
                self.best_mask = chosen
            return
        if size + clique_cover_bound(candidates, self.masks) <= self.best_size:
            return

        low = candidates & -candidates
        v = low.bit_length() - 1
        rest = candidates ^ low
        self._expand(rest & ~self.masks[v], chosen | low, size + 1)
        if rest & self.masks[v]:
            self._expand(rest, chosen, size)


def _solve(g: Graph) -> Tuple[int, int]:
    if g.n == 0:
        raise EmptyGraphError("dimension is undefined for the graph with no vertices")
    if g.is_edgeless():
        return g.n, (1 << g.n) - 1

    search = IndependentSetSearch(g.masks)
    size, mask = search.run()
    logger.debug("Independent set search done", n=g.n, size=size, nodes=search.nodes)
    return size, mask


def maximum_independent_set(g: Graph) -> VertexSet:
    """Lexicographically smallest maximum independent set."""
    _, mask = _solve(g)
    return frozenset(iter_bits(mask))


def dimension(g: Graph) -> int:
    """dim(G): the independence number."""
    size, _ = _solve(g)
    return size
