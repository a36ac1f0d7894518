"""
Tests for the verifier: random graphs, property checks, sweep and lemma suites.
"""
import random
from itertools import combinations

import pytest

from matchdim.exceptions import GraphError, NotIndependentError, PreconditionError
from matchdim.models.graph import Graph
from matchdim.models.invariants import InvariantProfile
from matchdim.models.report import RandomGraphSpec, VerificationReport
from matchdim.services.graph_ops import (
    complete_graph,
    empty_graph,
    isolated_vertices,
    star_graph,
    with_edges,
)
from matchdim.services.independence import dimension, maximum_independent_set
from matchdim.services.verifier import (
    LEMMA_SUITES,
    check_case4_structure,
    check_chain_and_bounds,
    check_closed_forms,
    check_dim_one_iff_complete,
    check_feasible_profile,
    check_match_floor_bound,
    check_min_matching_complement,
    check_monotonicity,
    check_pendant_reduction,
    check_suspension,
    check_union_additivity,
    check_witnesses,
    evaluate_tuple,
    random_corpus,
    random_graph,
    run_lemma_suites,
    sample_independent_set,
    summarize,
    sweep_theorem,
    sweep_theorem_async,
)


@pytest.fixture(scope="module")
def full_sweep():
    return sweep_theorem(3, 2, jobs=1)


class TestRandomGraphs:
    """Tests for seeded random graphs."""

    def test_probability_zero_is_edgeless(self):
        """Verify p = 0 gives no edges."""
        g = random_graph(RandomGraphSpec(n=5, p=0.0, seed=7))
        assert g.n == 5
        assert g.is_edgeless()

    def test_probability_one_is_complete(self):
        """Verify p = 1 gives K_n."""
        assert random_graph(RandomGraphSpec(n=4, p=1.0, seed=0)) == with_edges(4, complete_graph(4).edges)

    def test_same_spec_same_graph(self):
        """Verify a spec always yields the same edges."""
        spec = RandomGraphSpec(n=9, p=0.5, seed=123456789)
        assert random_graph(spec).edges == random_graph(spec).edges

    def test_forbid_isolated(self):
        """Verify patched graphs have no isolated vertices."""
        for seed in range(20):
            g = random_graph(RandomGraphSpec(n=8, p=0.1, seed=seed, forbid_isolated=True))
            assert isolated_vertices(g) == []

    def test_forbid_isolated_needs_two_vertices(self):
        """Verify n < 2 cannot avoid isolated vertices."""
        with pytest.raises(GraphError):
            random_graph(RandomGraphSpec(n=1, p=0.5, seed=1, forbid_isolated=True))

    def test_corpus_is_deterministic(self, settings):
        """Verify corpora repeat for the same seed and respect max_n."""
        first = random_corpus(30, 5, 9, settings.corpus_edge_probabilities)
        second = random_corpus(30, 5, 9, settings.corpus_edge_probabilities)
        assert [s for s, _ in first] == [s for s, _ in second]
        assert [g for _, g in first] == [g for _, g in second]
        assert all(1 <= g.n <= 9 for _, g in first)
        assert {s.p for s, _ in first} <= set(settings.corpus_edge_probabilities)

    def test_sample_independent_set(self):
        """Verify samples are independent and stop at the target."""
        g = star_graph(6)
        rng = random.Random(3)
        for target in range(0, 7):
            s = sample_independent_set(g, rng, target)
            assert len(s) <= target
            assert not (6 in s and len(s) > 1)


class TestPropertyChecks:
    """Tests for single-graph property checks."""

    def test_chain_and_bounds(self):
        """Verify the chain on K_4, a star and an edgeless graph."""
        assert check_chain_and_bounds(complete_graph(4))
        assert check_chain_and_bounds(star_graph(6))
        assert check_chain_and_bounds(empty_graph(3))

    def test_suspension_first_branch(self, c3):
        """Verify (C_3, empty set): dim stays 1."""
        assert check_suspension(c3, set())

    def test_suspension_second_branch(self, k2):
        """Verify (K_2, {0}): |S| = dim so dim grows to 2."""
        assert check_suspension(k2, {0})
        assert dimension(with_edges(3, [(0, 1), (1, 2)])) == 2

    def test_suspension_preconditions(self, c3):
        """Verify isolated vertices and dependent sets are refused."""
        with pytest.raises(PreconditionError):
            check_suspension(with_edges(3, [(0, 1)]), set())
        with pytest.raises(NotIndependentError):
            check_suspension(c3, {0, 1})

    def test_pendant_reduction(self):
        """Verify twin leaves can be removed."""
        star = star_graph(3)
        assert check_pendant_reduction(star, 3, 0, 1)
        g = with_edges(5, [(0, 1), (1, 2), (2, 3), (2, 4)])
        assert check_pendant_reduction(g, 2, 3, 4)

    def test_pendant_reduction_preconditions(self, p4):
        """Verify non-pendant or non-adjacent choices are refused."""
        with pytest.raises(PreconditionError):
            check_pendant_reduction(p4, 1, 0, 2)
        with pytest.raises(PreconditionError):
            check_pendant_reduction(star_graph(3), 3, 0, 0)

    def test_union_additivity(self, k2):
        """Verify additivity on two small unions."""
        assert check_union_additivity([k2, k2])
        assert check_union_additivity([star_graph(3), complete_graph(4)])

    def test_dim_one_iff_complete(self):
        """Verify both directions on K_5 and K_5 minus an edge."""
        k5 = complete_graph(5)
        assert check_dim_one_iff_complete(k5)
        assert check_dim_one_iff_complete(Graph(n=5, edges=k5.edges - {(0, 1)}))

    def test_dim_one_iff_complete_exhaustive_k5(self):
        """Verify the equivalence on all 1024 edge subsets of K_5."""
        pairs = list(combinations(range(5), 2))
        for mask in range(1 << len(pairs)):
            edges = frozenset(p for i, p in enumerate(pairs) if mask >> i & 1)
            assert check_dim_one_iff_complete(Graph(n=5, edges=edges))

    def test_monotonicity(self, c5):
        """Verify induced subgraphs never exceed the whole graph."""
        assert check_monotonicity(c5, {0, 1, 2})
        assert check_monotonicity(c5, set())
        assert check_monotonicity(c5, range(5))

    def test_floor_bound_and_complement(self, c5, p4):
        """Verify match <= floor(n/2) and the uncovered-vertex bound."""
        assert check_match_floor_bound(c5)
        assert check_min_matching_complement(p4)
        assert check_min_matching_complement(complete_graph(6))

    def test_feasible_profile(self, p4):
        """Verify the converse on a path; edgeless graphs are outside it."""
        assert check_feasible_profile(p4)
        with pytest.raises(PreconditionError):
            check_feasible_profile(empty_graph(2))

    @pytest.mark.parametrize("s", range(1, 6))
    def test_closed_forms(self, s):
        """Verify the star and even clique closed forms."""
        assert check_closed_forms(s)

    @pytest.mark.parametrize("a, b", [(2, 2), (2, 3), (3, 3), (3, 4)])
    def test_case4_is_a_suspension(self, a, b):
        """Verify case 4 is the suspension of pairs plus a clique."""
        assert check_case4_structure(a, b)

    def test_case4_structure_precondition(self):
        """Verify a = 1 is outside case 4."""
        with pytest.raises(PreconditionError):
            check_case4_structure(1, 2)

    @pytest.mark.parametrize("values", [(1, 2, 2, 3), (1, 2, 3, 2), (2, 3, 3, 4), (3, 4, 5, 4)])
    def test_witnesses(self, values):
        """Verify certificate witnesses are optimal for the solver."""
        assert check_witnesses(*values)

    def test_checks_reject_empty_graph(self):
        """Verify n = 0 is outside every single-graph check."""
        with pytest.raises(PreconditionError):
            check_chain_and_bounds(empty_graph(0))


class TestCorpusProperties:
    """Acceptance suites over the frozen seeded corpora."""

    def test_suspension_corpus(self, settings):
        """Verify 200 suspension pairs with both branches exercised."""
        corpus = random_corpus(
            settings.suspension_corpus_size,
            settings.suspension_corpus_seed,
            8,
            settings.corpus_edge_probabilities,
            forbid_isolated=True,
        )
        rng = random.Random(settings.suspension_corpus_seed)
        branches = {"equal": 0, "below": 0}
        for index, (_, g) in enumerate(corpus):
            d = dimension(g)
            if index % 4 == 0:
                s = maximum_independent_set(g)
            else:
                s = sample_independent_set(g, rng, rng.randint(0, d))
            branches["equal" if len(s) == d else "below"] += 1
            assert check_suspension(g, s)
        assert branches["equal"] >= len(corpus) // 4
        assert branches["below"] > 0

    def test_pendant_corpus(self, settings):
        """Verify pendant twins and the floor bound on 100 augmented graphs."""
        corpus = random_corpus(
            settings.pendant_corpus_size,
            settings.pendant_corpus_seed,
            settings.corpus_max_n - 2,
            settings.corpus_edge_probabilities,
        )
        rng = random.Random(settings.pendant_corpus_seed)
        for _, g in corpus:
            i = rng.randrange(g.n)
            augmented = with_edges(g.n + 2, set(g.edges) | {(i, g.n), (i, g.n + 1)})
            assert check_pendant_reduction(augmented, i, g.n, g.n + 1)
            assert check_match_floor_bound(augmented)

    def test_union_corpus(self, settings):
        """Verify additivity on 100 seeded pairs."""
        corpus = random_corpus(
            2 * settings.union_corpus_size,
            settings.union_corpus_seed,
            7,
            settings.corpus_edge_probabilities,
        )
        for index in range(settings.union_corpus_size):
            assert check_union_additivity([corpus[2 * index][1], corpus[2 * index + 1][1]])


class TestSweep:
    """Tests for the construct-then-solve sweep."""

    def test_smallest_sweep(self):
        """Verify max_b = 1, d_slack = 0 covers K_2 and P_4."""
        reports = sweep_theorem(1, 0, jobs=1)
        assert [r.tuple for r in reports] == [(1, 1, 1, 1), (1, 1, 2, 2)]
        assert all(r.passed for r in reports)

    async def test_async_sweep_sorts_reports(self):
        """Verify the process-pool sweep returns the same sorted reports as the inline one."""
        reports = await sweep_theorem_async(2, 0, jobs=2)
        inline = sweep_theorem(2, 0, jobs=1)
        assert [r.to_line() for r in reports] == [r.to_line() for r in inline]
        assert all(r.passed for r in reports)

    def test_case_two_and_three_tuples(self):
        """Verify (1, 2, 3, 2) and (1, 2, 3, 3) are realised."""
        reports = {r.tuple: r for r in sweep_theorem(2, 1, jobs=1)}
        assert reports[(1, 2, 3, 2)].passed
        assert reports[(1, 2, 3, 3)].passed
        assert reports[(1, 2, 3, 3)].case == "C3"

    @pytest.mark.slow
    def test_full_sweep_passes(self, full_sweep):
        """Verify every feasible tuple with b <= 3 and slack 2 is realised."""
        summary = summarize(full_sweep)
        assert summary.total == len(full_sweep) > 0
        assert summary.failed == 0
        assert [r.tuple for r in full_sweep] == sorted(r.tuple for r in full_sweep)

    @pytest.mark.slow
    def test_parallel_sweep_is_identical(self, full_sweep):
        """Verify four workers produce the same reports as one."""
        parallel = sweep_theorem(3, 2, jobs=4)
        assert [r.to_line() for r in parallel] == [r.to_line() for r in full_sweep]

    def test_sweep_preconditions(self):
        """Verify bad bounds are refused."""
        with pytest.raises(PreconditionError):
            sweep_theorem(0, 0)
        with pytest.raises(PreconditionError):
            sweep_theorem(1, -1)

    @pytest.mark.parametrize("jobs", [0, -2])
    def test_sweep_rejects_non_positive_jobs(self, jobs):
        """Verify zero or negative worker counts are refused rather than defaulted."""
        with pytest.raises(PreconditionError):
            sweep_theorem(1, 0, jobs=jobs)

    def test_report_line_excludes_timing(self):
        """Verify elapsed only appears with timings requested."""
        report = evaluate_tuple((1, 1, 1, 1))
        assert "elapsed" not in report.to_line()
        assert "elapsed" in report.to_line(timings=True)
        assert report.to_line()["tuple"] == [1, 1, 1, 1]
        assert report.witness_sizes == (1, 1)

    def test_report_passed_must_be_consistent(self):
        """Verify a report cannot claim success on a mismatch."""
        profile = InvariantProfile.from_tuple((1, 1, 1, 1))
        with pytest.raises(ValueError):
            VerificationReport(
                tuple=(1, 1, 1, 1),
                case="C1",
                expected=profile,
                computed=InvariantProfile.from_tuple((1, 1, 1, 2)),
                connected=True,
                passed=True,
                witness_sizes=(1, 1),
            )


class TestLemmaSuites:
    """Tests for the lemma suite runner."""

    @pytest.mark.slow
    def test_all_suites_pass(self):
        """Verify the default-size corpus passes every suite."""
        results = run_lemma_suites(200, 42)
        assert [r.suite for r in results] == list(LEMMA_SUITES)
        assert all(r.passed for r in results), [r.to_line() for r in results if not r.passed]
        suspension = next(r for r in results if r.suite == "suspension")
        assert suspension.checked == 200

    def test_single_sample_repeatable(self):
        """Verify one-graph runs are repeatable."""
        first = [r.to_line() for r in run_lemma_suites(1, 0)]
        second = [r.to_line() for r in run_lemma_suites(1, 0)]
        assert first == second

    def test_edgeless_graphs_skip_converse(self, settings):
        """Verify the converse suite skips edgeless graphs instead of failing."""
        results = {r.suite: r for r in run_lemma_suites(40, 7, settings)}
        general = random_corpus(40, random.Random(7).getrandbits(64), settings.corpus_max_n,
                                settings.corpus_edge_probabilities)
        edgeless = sum(1 for _, g in general if g.is_edgeless())
        assert results["converse"].skipped == edgeless
        assert results["chain_and_bounds"].checked == 40

    def test_corpus_size_must_be_positive(self):
        """Verify an empty corpus is refused."""
        with pytest.raises(PreconditionError):
            run_lemma_suites(0, 1)
