"""
Constructions - the seven graph families realising every feasible (a, b, c, d).

For 1 <= a <= b <= c <= 2b and d >= max{a, 2(c-b)} the dispatched builder
returns a connected simple graph with ind-match = a, min-match = b,
match = c and dim = d.

Index layout shared by every case:
- v_1..v_{2b} at indices 0..2b-1
- then the x-block (x_1..x_k, or the single apex x of cases 4 and 5)
- then the y-block (pendants y_1..y_m on v_1)

Cases 4-7 share a core on V_2b: the matching edges {v_{2i-1}, v_{2i}} for
i < a plus a clique on v_{2a-1}..v_{2b}, i.e. (a-1)K_2 + K_{2(b-a+1)}.
"""
from itertools import combinations
from typing import Dict, List, Optional, Set, Tuple

import structlog

from matchdim.exceptions import GraphError, InfeasibleTupleError
from matchdim.models.construction import (
    CaseTag,
    ConstructionCertificate,
    ConstructionParams,
    LabeledVertexBlocks,
    case_for,
    feasibility_violation,
)
from matchdim.models.graph import Edge, Graph, VertexSet
from matchdim.models.invariants import Matching, WitnessBundle
from matchdim.services.graph_ops import is_independent_set
from matchdim.services.matching import (
    is_induced_matching,
    is_matching,
    is_maximal_matching,
)

logger = structlog.get_logger()

Quadruple = Tuple[int, int, int, int]


def v(i: int) -> int:
    """Index of v_i (1-based name)."""
    return i - 1


class _LayoutBuilder:
    """Accumulates labelled vertices and edges for one construction."""

    def __init__(self, b: int):
        self.b = b
        self.labels: Dict[int, str] = {v(i): f"v_{i}" for i in range(1, 2 * b + 1)}
        self.edges: Set[Edge] = set()
        self.n = 2 * b

    def add_block(self, names: List[str]) -> List[int]:
        indices = list(range(self.n, self.n + len(names)))
        for index, name in zip(indices, names):
            self.labels[index] = name
        self.n += len(names)
        return indices

    def clique(self, indices) -> None:
        self.edges.update(combinations(indices, 2))

    def edge(self, p: int, q: int) -> None:
        self.edges.add((p, q))

    def paired_core(self, a: int) -> None:
        """(a-1) K_2 on v_1..v_{2a-2} plus a clique on v_{2a-1}..v_{2b}."""
        for i in range(1, a):
            self.edge(v(2 * i - 1), v(2 * i))
        self.clique(range(v(2 * a - 1), 2 * self.b))

    def pendants_on_v1(self, count: int) -> List[int]:
        ys = self.add_block([f"y_{k}" for k in range(1, count + 1)])
        for y in ys:
            self.edge(v(1), y)
        return ys

    def build(self) -> Graph:
        return Graph(n=self.n, edges=frozenset(self.edges), labels=self.labels)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise GraphError(f"construction parameters violated: {message}")


# ── Feasibility and dispatch ──────────────────────────────────────

def infeasibility_reason(a: int, b: int, c: int, d: int) -> Optional[str]:
    """The first violated inequality of condition (2), or None."""
    return feasibility_violation(a, b, c, d)


def feasible(a: int, b: int, c: int, d: int) -> bool:
    """1 <= a <= b <= c <= 2b and d >= max{a, 2(c-b)}; inputs must be positive."""
    if min(a, b, c, d) < 1:
        raise InfeasibleTupleError((a, b, c, d), "a, b, c, d ≥ 1")
    return feasibility_violation(a, b, c, d) is None


def resolve(a: int, b: int, c: int, d: int) -> ConstructionParams:
    """Validated parameters with their case tag; raises InfeasibleTupleError."""
    violated = feasibility_violation(a, b, c, d)
    if violated is not None:
        raise InfeasibleTupleError((a, b, c, d), violated)
    return ConstructionParams(a=a, b=b, c=c, d=d, case_tag=case_for(a, b, c, d))


def dispatch_case(a: int, b: int, c: int, d: int) -> CaseTag:
    return resolve(a, b, c, d).case_tag


def enumerate_feasible(max_b: int, d_slack: int) -> List[Quadruple]:
    """
    Every feasible tuple with b <= max_b and
    max{a, 2(c-b)} <= d <= max{a, 2(c-b)} + d_slack, in lexicographic order.
    """
    tuples = []
    for b in range(1, max_b + 1):
        for a in range(1, b + 1):
            for c in range(b, 2 * b + 1):
                low = max(a, 2 * (c - b))
                tuples.extend((a, b, c, d) for d in range(low, low + d_slack + 1))
    return sorted(tuples)


# ── Builders ──────────────────────────────────────────────────────

def build_case1(b: int, d: int) -> Graph:
    """K_{2b} on V_2b with pendants x_1..x_{d-1} on v_1."""
    _require(b >= 1 and d >= 1, f"case 1 needs b >= 1 and d >= 1, got b={b}, d={d}")
    layout = _LayoutBuilder(b)
    layout.clique(range(2 * b))
    for x in layout.add_block([f"x_{k}" for k in range(1, d)]):
        layout.edge(v(1), x)
    return layout.build()


def _case2_layout(b: int, c: int) -> _LayoutBuilder:
    k = c - b
    layout = _LayoutBuilder(b)
    layout.clique(range(2 * b))
    xs = layout.add_block([f"x_{m}" for m in range(1, 2 * k + 1)])
    for i in range(1, b + 1):
        for m in range(k):
            layout.edge(v(i), xs[m])
            layout.edge(v(b + i), xs[k + m])
    return layout


def build_case2(b: int, c: int) -> Graph:
    """
    K_{2b} with x_1..x_{c-b} joined to v_1..v_b and x_{c-b+1}..x_{2(c-b)}
    joined to v_{b+1}..v_{2b}.
    """
    _require(1 <= b < c <= 2 * b, f"case 2 needs 1 <= b < c <= 2b, got b={b}, c={c}")
    return _case2_layout(b, c).build()


def build_case3(b: int, c: int, d: int) -> Graph:
    """Case 2 plus pendants y_1..y_{d-2(c-b)} on v_1."""
    _require(1 <= b < c <= 2 * b, f"case 3 needs 1 <= b < c <= 2b, got b={b}, c={c}")
    _require(d > 2 * (c - b), f"case 3 needs d > 2(c-b), got d={d}")
    layout = _case2_layout(b, c)
    layout.pendants_on_v1(d - 2 * (c - b))
    return layout.build()


def build_case4(a: int, b: int) -> Graph:
    """
    The ∅-suspension of (a-1)K_2 + K_{2(b-a+1)}: the paired core on V_2b
    and an apex x adjacent to every v.
    """
    _require(1 < a <= b, f"case 4 needs 1 < a <= b, got a={a}, b={b}")
    layout = _LayoutBuilder(b)
    layout.paired_core(a)
    (x,) = layout.add_block(["x"])
    for i in range(1, 2 * b + 1):
        layout.edge(v(i), x)
    return layout.build()


def build_case5(a: int, b: int, d: int) -> Graph:
    """Paired core, apex x on v_1, v_3, ..., v_{2a-1}, pendants y_1..y_{d-a-1} on v_1."""
    _require(1 < a <= b, f"case 5 needs 1 < a <= b, got a={a}, b={b}")
    _require(d > a, f"case 5 needs d > a, got a={a}, d={d}")
    layout = _LayoutBuilder(b)
    layout.paired_core(a)
    (x,) = layout.add_block(["x"])
    for ell in range(1, a + 1):
        layout.edge(v(2 * ell - 1), x)
    layout.pendants_on_v1(d - a - 1)
    return layout.build()


def _joined_layout(a: int, b: int, c: int, pendants: int) -> _LayoutBuilder:
    """Paired core, every v joined to x_1..x_{2(c-b)}, pendants on v_1."""
    layout = _LayoutBuilder(b)
    layout.paired_core(a)
    xs = layout.add_block([f"x_{m}" for m in range(1, 2 * (c - b) + 1)])
    for i in range(1, 2 * b + 1):
        for x in xs:
            layout.edge(v(i), x)
    layout.pendants_on_v1(pendants)
    return layout


def build_case6(a: int, b: int, c: int, d: int) -> Graph:
    """Joined layout with d - 2(c-b) pendants."""
    _require(1 < a <= b < c <= 2 * b, f"case 6 needs 1 < a <= b < c <= 2b, got {(a, b, c)}")
    _require(2 * (c - b) >= a, f"case 6 needs 2(c-b) >= a, got {(a, b, c)}")
    _require(d >= 2 * (c - b), f"case 6 needs d >= 2(c-b), got d={d}")
    return _joined_layout(a, b, c, d - 2 * (c - b)).build()


def build_case7(a: int, b: int, c: int, d: int) -> Graph:
    """Joined layout with d - a pendants."""
    _require(1 < a <= b < c <= 2 * b, f"case 7 needs 1 < a <= b < c <= 2b, got {(a, b, c)}")
    _require(a > 2 * (c - b), f"case 7 needs a > 2(c-b), got {(a, b, c)}")
    _require(d >= a, f"case 7 needs d >= a, got a={a}, d={d}")
    return _joined_layout(a, b, c, d - a).build()


def _build(params: ConstructionParams) -> Graph:
    a, b, c, d = params.as_tuple()
    tag = params.case_tag
    if tag is CaseTag.C1:
        return build_case1(b, d)
    if tag is CaseTag.C2:
        return build_case2(b, c)
    if tag is CaseTag.C3:
        return build_case3(b, c, d)
    if tag is CaseTag.C4:
        return build_case4(a, b)
    if tag is CaseTag.C5:
        return build_case5(a, b, d)
    if tag is CaseTag.C6:
        return build_case6(a, b, c, d)
    return build_case7(a, b, c, d)


def construct(a: int, b: int, c: int, d: int) -> Graph:
    """The connected simple graph G_{a,b,c,d} of the dispatched case."""
    params = resolve(a, b, c, d)
    graph = _build(params)
    logger.debug(
        "Constructed graph",
        tuple=params.as_tuple(),
        case=params.case_tag.value,
        n=graph.n,
        edges=graph.edge_count,
    )
    return graph


# ── Layout facts ──────────────────────────────────────────────────

def expected_vertex_count(params: ConstructionParams) -> int:
    a, b, c, d = params.as_tuple()
    return {
        CaseTag.C1: 2 * b + d - 1,
        CaseTag.C2: 2 * c,
        CaseTag.C3: 2 * b + d,
        CaseTag.C4: 2 * b + 1,
        CaseTag.C5: 2 * b + d - a,
        CaseTag.C6: 2 * b + d,
        CaseTag.C7: 2 * b + 2 * (c - b) + d - a,
    }[params.case_tag]


def vertex_blocks(params: ConstructionParams) -> LabeledVertexBlocks:
    a, b, c, d = params.as_tuple()
    k = c - b
    x_size, y_size = {
        CaseTag.C1: (d - 1, 0),
        CaseTag.C2: (2 * k, 0),
        CaseTag.C3: (2 * k, d - 2 * k),
        CaseTag.C4: (1, 0),
        CaseTag.C5: (1, d - a - 1),
        CaseTag.C6: (2 * k, d - 2 * k),
        CaseTag.C7: (2 * k, d - a),
    }[params.case_tag]
    x_start = 2 * b
    y_start = x_start + x_size
    return LabeledVertexBlocks(
        v_block=list(range(2 * b)),
        x_block=list(range(x_start, y_start)),
        y_block=list(range(y_start, y_start + y_size)),
    )


# ── Witnesses ─────────────────────────────────────────────────────

def _pairs(count: int) -> List[Edge]:
    """{v_{2i-1}, v_{2i}} for i = 1..count."""
    return [(v(2 * i - 1), v(2 * i)) for i in range(1, count + 1)]


def _witness_edges(params: ConstructionParams, blocks: LabeledVertexBlocks) -> Tuple[List[Edge], List[Edge]]:
    a, b, c, d = params.as_tuple()
    k = c - b
    xs = blocks.x_block
    tag = params.case_tag

    if tag in (CaseTag.C1, CaseTag.C4, CaseTag.C5):
        return _pairs(b), _pairs(b)

    if tag in (CaseTag.C2, CaseTag.C3):
        maximal = [(v(i), v(b + i)) for i in range(1, b + 1)]
        maximum = [(v(i), xs[i - 1]) for i in range(1, k + 1)]
        maximum += [(v(b + i), xs[k + i - 1]) for i in range(1, k + 1)]
        maximum += [(v(k + j), v(c + j)) for j in range(1, 2 * b - c + 1)]
        return maximal, maximum

    maximal = _pairs(b)
    maximum = [(v(i), xs[i - 1]) for i in range(1, 2 * k + 1)]
    maximum += [(v(2 * k + 2 * j - 1), v(2 * k + 2 * j)) for j in range(1, 2 * b - c + 1)]
    return maximal, maximum


def witness_matchings(a: int, b: int, c: int, d: int) -> Tuple[Matching, Matching]:
    """
    The explicit witnesses: a maximal matching of size b and a matching of
    size c, both checked against the constructed graph.
    """
    params = resolve(a, b, c, d)
    graph = _build(params)
    maximal_edges, maximum_edges = _witness_edges(params, vertex_blocks(params))
    maximal = Matching.of(maximal_edges)
    maximum = Matching.of(maximum_edges)
    if not (is_maximal_matching(graph, maximal) and len(maximal) == b):
        raise RuntimeError(f"maximal matching witness broken for {params.as_tuple()}")
    if not (is_matching(graph, maximum) and len(maximum) == c):
        raise RuntimeError(f"maximum matching witness broken for {params.as_tuple()}")
    return maximal, maximum


def witness_induced_matching(a: int, b: int, c: int, d: int) -> Matching:
    """{v_{2i-1}, v_{2i}} for i = 1..a, an induced matching of size a."""
    params = resolve(a, b, c, d)
    graph = _build(params)
    induced = Matching.of(_pairs(a))
    if not is_induced_matching(graph, induced):
        raise RuntimeError(f"induced matching witness broken for {params.as_tuple()}")
    return induced


def _independent_members(params: ConstructionParams, blocks: LabeledVertexBlocks) -> List[int]:
    a, b, c, d = params.as_tuple()
    evens = [v(2 * i) for i in range(1, a)]
    tag = params.case_tag
    if tag is CaseTag.C1:
        return blocks.x_block + [v(2 * b)]
    if tag in (CaseTag.C2, CaseTag.C3, CaseTag.C6):
        return blocks.x_block + blocks.y_block
    if tag is CaseTag.C4:
        return [v(2 * i - 1) for i in range(1, a + 1)]
    if tag is CaseTag.C5:
        return evens + [v(2 * b)] + blocks.x_block + blocks.y_block
    return evens + [v(2 * b)] + blocks.y_block


def witness_independent_set(a: int, b: int, c: int, d: int) -> VertexSet:
    """An independent set of size d read off the case layout."""
    params = resolve(a, b, c, d)
    graph = _build(params)
    members = frozenset(_independent_members(params, vertex_blocks(params)))
    if len(members) != d or not is_independent_set(graph, members):
        raise RuntimeError(f"independent set witness broken for {params.as_tuple()}")
    return members


def certificate(a: int, b: int, c: int, d: int) -> ConstructionCertificate:
    """Graph, layout and all four witnesses for a feasible tuple."""
    params = resolve(a, b, c, d)
    maximal, maximum = witness_matchings(a, b, c, d)
    return ConstructionCertificate(
        params=params,
        graph=_build(params),
        blocks=vertex_blocks(params),
        witnesses=WitnessBundle(
            induced=witness_induced_matching(a, b, c, d),
            minimum_maximal=maximal,
            maximum=maximum,
            independent=witness_independent_set(a, b, c, d),
        ),
    )
