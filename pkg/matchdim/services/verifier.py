"""
Verifier - theorem sweep and property suites.

This module handles:
- Seeded random graphs and corpora (Python's random.Random, i.e. MT19937)
- Property checks of the structural lemmas on single graphs
- The construct-then-solve sweep over every feasible tuple up to a bound,
  optionally fanned out over worker processes
- Lemma suites over a seeded corpus, tallied per property

Every check_* function is pure. Checks return False on a violated property
and raise PreconditionError when the input is outside their hypotheses.
"""
import asyncio
import random
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

import structlog

from matchdim.config import Settings, get_settings
from matchdim.exceptions import GraphError, PreconditionError
from matchdim.log_setup import configure_logging, current_level
from matchdim.models.construction import feasibility_violation
from matchdim.models.graph import Graph, VertexSet
from matchdim.models.invariants import InvariantProfile
from matchdim.models.report import (
    LemmaSuiteResult,
    RandomGraphSpec,
    SweepSummary,
    VerificationReport,
)
from matchdim.services.constructions import (
    build_case4,
    certificate,
    construct,
    dispatch_case,
    enumerate_feasible,
    witness_matchings,
)
from matchdim.services.graph_ops import (
    complement_of,
    complete_graph,
    connected,
    delete_vertex,
    disjoint_union,
    induced_subgraph,
    is_independent_set,
    isolated_vertices,
    s_suspension,
    star_graph,
    with_edges,
)
from matchdim.services.independence import dimension, maximum_independent_set
from matchdim.services.invariants import invariant_profile
from matchdim.services.matching import (
    induced_matching_number,
    is_induced_matching,
    is_matching,
    is_maximal_matching,
    matching_number,
    min_matching_number,
    minimum_maximal_matching,
)

logger = structlog.get_logger()

Quadruple = Tuple[int, int, int, int]

SUSPENSION_MAX_N = 8
UNION_MAX_N = 7

LEMMA_SUITES = (
    "chain_and_bounds",
    "suspension",
    "pendant_reduction",
    "floor_bound",
    "monotonicity",
    "union_additivity",
    "dim_one_iff_complete",
    "converse",
    "min_matching_complement",
)


# ── Random graphs ─────────────────────────────────────────────────

def random_graph(spec: RandomGraphSpec) -> Graph:
    """
    Seeded G(n, p).

    Pairs i < j are visited in lexicographic order and kept when the next
    draw of random.Random(seed) is below p. With forbid_isolated, each
    vertex still isolated (in ascending order) is then joined to a vertex
    drawn uniformly from the others with the same generator.
    """
    if spec.forbid_isolated and spec.n < 2:
        raise GraphError(f"cannot avoid isolated vertices with n = {spec.n}")

    rng = random.Random(spec.seed)
    edges = set()
    for i in range(spec.n):
        for j in range(i + 1, spec.n):
            if rng.random() < spec.p:
                edges.add((i, j))

    if spec.forbid_isolated:
        touched = {x for edge in edges for x in edge}
        for v in range(spec.n):
            if v in touched:
                continue
            w = rng.choice([u for u in range(spec.n) if u != v])
            edges.add((min(v, w), max(v, w)))
            touched.update((v, w))

    return with_edges(spec.n, edges)


def random_corpus(
    size: int,
    seed: int,
    max_n: int,
    probabilities: Sequence[float],
    forbid_isolated: bool = False,
) -> List[Tuple[RandomGraphSpec, Graph]]:
    """
    `size` seeded graphs. A master generator on `seed` draws, per graph,
    n in [1, max_n] ([2, max_n] with forbid_isolated), p from
    `probabilities` and a 64-bit sub-seed.
    """
    master = random.Random(seed)
    low = 2 if forbid_isolated else 1
    corpus = []
    for _ in range(size):
        spec = RandomGraphSpec(
            n=master.randint(low, max_n),
            p=master.choice(list(probabilities)),
            seed=master.getrandbits(64),
            forbid_isolated=forbid_isolated,
        )
        corpus.append((spec, random_graph(spec)))
    return corpus


def sample_independent_set(g: Graph, rng: random.Random, target: int) -> VertexSet:
    """
    Grow an independent set greedily over a shuffled vertex order until it
    has `target` members or no vertex can be added.
    """
    order = list(g.vertices)
    rng.shuffle(order)
    chosen = set()
    for v in order:
        if len(chosen) >= target:
            break
        if not any(w in chosen for w in g.neighbors(v)):
            chosen.add(v)
    return frozenset(chosen)


# ── Property checks ───────────────────────────────────────────────

def _require_vertices(g: Graph) -> None:
    if g.n == 0:
        raise PreconditionError("check needs a graph with at least one vertex")


def check_chain_and_bounds(g: Graph) -> bool:
    """
    ind-match <= min-match <= match <= 2 min-match, and
    dim >= max{ind-match, 2(match - min-match)}.
    The chain is skipped on edgeless graphs.
    """
    _require_vertices(g)
    a, b, c, d = invariant_profile(g).as_tuple()
    bounds = d >= a and d >= 2 * (c - b)
    if g.is_edgeless():
        return bounds
    return a <= b <= c <= 2 * b and bounds


def check_suspension(g: Graph, s: Iterable[int]) -> bool:
    """ind-match(G^S) = ind-match(G); dim(G^S) = dim(G) + [|S| = dim(G)]."""
    _require_vertices(g)
    if isolated_vertices(g):
        raise PreconditionError("suspension property needs a graph without isolated vertices")
    members = g.check_vertices(s)
    suspended = s_suspension(g, members)

    d = dimension(g)
    expected_dim = d + 1 if len(members) == d else d
    return (
        induced_matching_number(suspended) == induced_matching_number(g)
        and dimension(suspended) == expected_dim
    )


def _matching_triple(g: Graph) -> Tuple[int, int, int]:
    return (matching_number(g), min_matching_number(g), induced_matching_number(g))


def check_pendant_reduction(g: Graph, i: int, j: int, k: int) -> bool:
    """Deleting one of two pendant twins on i keeps match, min-match and ind-match."""
    for x in (i, j, k):
        g.check_vertex(x)
    if j == k or not (g.has_edge(i, j) and g.has_edge(i, k)):
        raise PreconditionError(f"need distinct edges {{{i},{j}}} and {{{i},{k}}}")
    if g.degree(j) != 1 or g.degree(k) != 1:
        raise PreconditionError(f"vertices {j} and {k} must both be pendant")
    return _matching_triple(g) == _matching_triple(delete_vertex(g, k))


def check_monotonicity(g: Graph, w: Iterable[int]) -> bool:
    """match, min-match and ind-match of G[W] never exceed those of G."""
    _require_vertices(g)
    members = g.check_vertices(w)
    if not members:
        return True
    sub = _matching_triple(induced_subgraph(g, members))
    full = _matching_triple(g)
    return all(x <= y for x, y in zip(sub, full))


def check_match_floor_bound(g: Graph) -> bool:
    _require_vertices(g)
    return matching_number(g) <= g.n // 2


def check_union_additivity(gs: Sequence[Graph]) -> bool:
    """All four invariants of a disjoint union are the sums over its parts."""
    if not gs:
        raise PreconditionError("union additivity needs at least one graph")
    for g in gs:
        _require_vertices(g)
    total = invariant_profile(gs[0])
    for g in gs[1:]:
        total = total + invariant_profile(g)
    return invariant_profile(disjoint_union(gs)) == total


def check_dim_one_iff_complete(g: Graph) -> bool:
    _require_vertices(g)
    return (dimension(g) == 1) == g.is_complete()


def check_feasible_profile(g: Graph) -> bool:
    """The profile of a graph with an edge satisfies the feasibility condition."""
    _require_vertices(g)
    if g.is_edgeless():
        raise PreconditionError("feasibility is only claimed for graphs with at least one edge")
    return feasibility_violation(*invariant_profile(g).as_tuple()) is None


def check_min_matching_complement(g: Graph) -> bool:
    """
    Vertices left uncovered by a minimum maximal matching form an
    independent set of at least 2(match - min-match) vertices.
    """
    _require_vertices(g)
    m = minimum_maximal_matching(g)
    rest = complement_of(g, m.vertices)
    return is_independent_set(g, rest) and len(rest) >= 2 * (matching_number(g) - len(m))


def check_closed_forms(s: int) -> bool:
    """K_{1,s} has profile (1, 1, 1, s); K_{2s} has (1, s, s, 1)."""
    if s < 1:
        raise PreconditionError(f"closed forms need s >= 1, got {s}")
    return (
        invariant_profile(star_graph(s)).as_tuple() == (1, 1, 1, s)
        and invariant_profile(complete_graph(2 * s)).as_tuple() == (1, s, s, 1)
    )


def check_case4_structure(a: int, b: int) -> bool:
    """Case 4 is the suspension of (a-1) K_2 plus K_{2(b-a+1)}."""
    if not 1 < a <= b:
        raise PreconditionError(f"case 4 needs 1 < a <= b, got a={a}, b={b}")
    parts = [complete_graph(2) for _ in range(a - 1)] + [complete_graph(2 * (b - a + 1))]
    reference = s_suspension(disjoint_union(parts), ())
    built = build_case4(a, b)
    return (
        built.n == reference.n
        and built.edge_count == reference.edge_count
        and sorted(built.degrees()) == sorted(reference.degrees())
    )


def check_witnesses(a: int, b: int, c: int, d: int) -> bool:
    """Every certificate witness satisfies its predicate and has the solver's size."""
    cert = certificate(a, b, c, d)
    g = cert.graph
    w = cert.witnesses
    profile = invariant_profile(g)
    return (
        is_induced_matching(g, w.induced) and len(w.induced) == profile.ind_match
        and is_maximal_matching(g, w.minimum_maximal) and len(w.minimum_maximal) == profile.min_match
        and is_matching(g, w.maximum) and len(w.maximum) == profile.match
        and is_independent_set(g, w.independent) and len(w.independent) == profile.dim
    )


# ── Theorem sweep ─────────────────────────────────────────────────

def evaluate_tuple(values: Quadruple) -> VerificationReport:
    """Construct G_{a,b,c,d}, solve it exactly and compare."""
    started = time.perf_counter()
    a, b, c, d = values
    g = construct(a, b, c, d)
    computed = invariant_profile(g)
    maximal, maximum = witness_matchings(a, b, c, d)
    expected = InvariantProfile.from_tuple(values)
    is_connected = connected(g)
    return VerificationReport(
        tuple=values,
        case=dispatch_case(a, b, c, d).value,
        expected=expected,
        computed=computed,
        connected=is_connected,
        passed=computed == expected and is_connected,
        elapsed=time.perf_counter() - started,
        witness_sizes=(len(maximal), len(maximum)),
    )


async def sweep_theorem_async(max_b: int, d_slack: int, jobs: int) -> List[VerificationReport]:
    """Fan tuples out to a process pool, at most `jobs` in flight."""
    tuples = enumerate_feasible(max_b, d_slack)
    loop = asyncio.get_running_loop()
    semaphore = asyncio.Semaphore(jobs)

    with ProcessPoolExecutor(
        max_workers=jobs, initializer=configure_logging, initargs=(current_level(),)
    ) as pool:
        async def run_one(values: Quadruple) -> VerificationReport:
            async with semaphore:
                return await loop.run_in_executor(pool, evaluate_tuple, values)

        reports = await asyncio.gather(*(run_one(t) for t in tuples))

    return sorted(reports, key=lambda r: r.tuple)


def sweep_theorem(max_b: int, d_slack: int, jobs: Optional[int] = None) -> List[VerificationReport]:
    """
    Reports for every feasible tuple with b <= max_b and d at most d_slack
    above its lower bound, sorted by tuple whatever the job count.
    """
    if max_b < 1 or d_slack < 0:
        raise PreconditionError(f"sweep needs max_b >= 1 and d_slack >= 0, got {max_b}, {d_slack}")
    if jobs is None:
        jobs = get_settings().default_jobs
    if jobs < 1:
        raise PreconditionError(f"jobs must be >= 1, got {jobs}")

    logger.info("Sweep started", max_b=max_b, d_slack=d_slack, jobs=jobs)
    if jobs == 1:
        reports = [evaluate_tuple(t) for t in enumerate_feasible(max_b, d_slack)]
    else:
        reports = asyncio.run(sweep_theorem_async(max_b, d_slack, jobs))

    summary = summarize(reports)
    for report in reports:
        if not report.passed:
            logger.warning(
                "Tuple not realised",
                tuple=report.tuple,
                case=report.case,
                computed=report.computed.as_tuple(),
                connected=report.connected,
            )
    logger.info("Sweep finished", total=summary.total, failed=summary.failed)
    return reports


def summarize(reports: Sequence[VerificationReport]) -> SweepSummary:
    passed = sum(1 for r in reports if r.passed)
    return SweepSummary(total=len(reports), passed=passed, failed=len(reports) - passed)


# ── Lemma suites ──────────────────────────────────────────────────

def _tally(result: LemmaSuiteResult, check: Callable[..., bool], *args, describe: str = "") -> None:
    try:
        ok = check(*args)
    except PreconditionError:
        result.skipped += 1
        return
    result.checked += 1
    if not ok:
        result.failed += 1
        if result.first_failure is None:
            result.first_failure = describe
        logger.warning("Property violated", suite=result.suite, sample=describe)


def _describe(g: Graph) -> str:
    return f"n={g.n} edges={g.edge_list()}"


def _with_pendant_twins(g: Graph, rng: random.Random) -> Tuple[Graph, int, int, int]:
    """g plus two new pendant vertices on a random vertex."""
    i = rng.randrange(g.n)
    j, k = g.n, g.n + 1
    return with_edges(g.n + 2, set(g.edges) | {(i, j), (i, k)}), i, j, k


def run_lemma_suites(
    corpus_size: int,
    seed: int,
    settings: Optional[Settings] = None,
) -> List[LemmaSuiteResult]:
    """
    Run every property suite over corpora derived from `seed`.

    The master generator draws one sub-seed per corpus (general, suspension,
    union) and one for sampling choices, so a given (corpus_size, seed)
    always produces the same results.
    """
    if corpus_size < 1:
        raise PreconditionError(f"corpus size must be >= 1, got {corpus_size}")
    settings = settings or get_settings()
    master = random.Random(seed)
    general_seed, suspension_seed, union_seed, choice_seed = (master.getrandbits(64) for _ in range(4))
    rng = random.Random(choice_seed)
    probabilities = settings.corpus_edge_probabilities

    results = {name: LemmaSuiteResult(suite=name) for name in LEMMA_SUITES}
    general = random_corpus(corpus_size, general_seed, settings.corpus_max_n, probabilities)

    for _, g in general:
        label = _describe(g)
        _tally(results["chain_and_bounds"], check_chain_and_bounds, g, describe=label)
        _tally(results["floor_bound"], check_match_floor_bound, g, describe=label)
        _tally(results["dim_one_iff_complete"], check_dim_one_iff_complete, g, describe=label)
        _tally(results["converse"], check_feasible_profile, g, describe=label)
        _tally(results["min_matching_complement"], check_min_matching_complement, g, describe=label)

        w = [v for v in g.vertices if rng.random() < 0.5]
        _tally(results["monotonicity"], check_monotonicity, g, w, describe=f"{label} W={w}")

        augmented, i, j, k = _with_pendant_twins(g, rng)
        _tally(results["pendant_reduction"], check_pendant_reduction, augmented, i, j, k,
               describe=_describe(augmented))

    suspension_corpus = random_corpus(
        corpus_size, suspension_seed, min(SUSPENSION_MAX_N, settings.corpus_max_n),
        probabilities, forbid_isolated=True,
    )
    for index, (_, g) in enumerate(suspension_corpus):
        if index % 4 == 0:
            s = maximum_independent_set(g)
        else:
            s = sample_independent_set(g, rng, rng.randint(0, dimension(g)))
        _tally(results["suspension"], check_suspension, g, s, describe=f"{_describe(g)} S={sorted(s)}")

    union_corpus = random_corpus(2 * corpus_size, union_seed, UNION_MAX_N, probabilities)
    for index in range(corpus_size):
        left, right = union_corpus[2 * index][1], union_corpus[2 * index + 1][1]
        _tally(results["union_additivity"], check_union_additivity, [left, right],
               describe=f"{_describe(left)} + {_describe(right)}")

    ordered = [results[name] for name in LEMMA_SUITES]
    logger.info(
        "Lemma suites finished",
        corpus_size=corpus_size,
        seed=seed,
        failed=[r.suite for r in ordered if not r.passed],
    )
    return ordered
