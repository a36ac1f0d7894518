"""
Tests for the seven constructions and their witnesses.
"""
import pytest

from matchdim.exceptions import GraphError, InfeasibleTupleError
from matchdim.models.construction import CaseTag, ConstructionParams
from matchdim.services.constructions import (
    build_case1,
    build_case2,
    build_case3,
    build_case4,
    build_case5,
    build_case6,
    build_case7,
    certificate,
    construct,
    dispatch_case,
    enumerate_feasible,
    expected_vertex_count,
    feasible,
    infeasibility_reason,
    resolve,
    vertex_blocks,
    witness_independent_set,
    witness_induced_matching,
    witness_matchings,
)
from matchdim.services.graph_ops import connected, is_independent_set
from matchdim.services.invariants import invariant_profile
from matchdim.services.matching import is_induced_matching, is_matching, is_maximal_matching

EXAMPLE_TUPLES = [
    ((1, 2, 2, 3), CaseTag.C1),
    ((1, 2, 3, 2), CaseTag.C2),
    ((1, 3, 4, 5), CaseTag.C3),
    ((2, 3, 3, 2), CaseTag.C4),
    ((2, 3, 3, 4), CaseTag.C5),
    ((3, 4, 6, 5), CaseTag.C6),
    ((3, 4, 5, 4), CaseTag.C7),
]


class TestFeasibility:
    """Tests for the feasibility condition and dispatch."""

    def test_feasible_examples(self):
        """Verify feasible() on the minimal tuple and two infeasible ones."""
        assert feasible(1, 1, 1, 1)
        assert not feasible(1, 2, 3, 1)
        assert not feasible(2, 2, 5, 9)

    def test_feasible_rejects_non_positive(self):
        """Verify zero entries raise InfeasibleTupleError."""
        with pytest.raises(InfeasibleTupleError):
            feasible(0, 1, 1, 1)

    @pytest.mark.parametrize("values, violated", [
        ((1, 1, 1, 0), "a, b, c, d ≥ 1"),
        ((3, 2, 2, 3), "a ≤ b"),
        ((1, 3, 2, 2), "b ≤ c"),
        ((1, 2, 5, 6), "c ≤ 2b"),
        ((1, 2, 3, 1), "d ≥ max{a, 2(c−b)}"),
    ])
    def test_infeasibility_reason(self, values, violated):
        """Verify the first violated inequality is named."""
        assert infeasibility_reason(*values) == violated

    @pytest.mark.parametrize("values, tag", EXAMPLE_TUPLES)
    def test_dispatch_examples(self, values, tag):
        """Verify each example tuple dispatches to its case."""
        assert dispatch_case(*values) is tag

    def test_dispatch_rejects_infeasible(self):
        """Verify dispatch raises with the violated inequality."""
        with pytest.raises(InfeasibleTupleError) as exc:
            dispatch_case(1, 2, 3, 1)
        assert exc.value.violated == "d ≥ max{a, 2(c−b)}"
        assert exc.value.tuple == (1, 2, 3, 1)

    def test_params_validate_case(self):
        """Verify a mismatched case tag is rejected by the model."""
        with pytest.raises(ValueError):
            ConstructionParams(a=1, b=2, c=2, d=3, case_tag=CaseTag.C2)
        assert resolve(1, 2, 2, 3).case_tag is CaseTag.C1

    def test_enumerate_feasible_smallest(self):
        """Verify max_b = 1, d_slack = 0 yields only (1, 1, 1, 1) and (1, 1, 2, 2)."""
        assert enumerate_feasible(1, 0) == [(1, 1, 1, 1), (1, 1, 2, 2)]

    def test_enumerate_feasible_is_sorted_and_feasible(self):
        """Verify enumeration order and feasibility."""
        tuples = enumerate_feasible(3, 2)
        assert tuples == sorted(tuples)
        assert all(feasible(*t) for t in tuples)
        assert (1, 2, 3, 2) in tuples
        assert (1, 2, 3, 3) in tuples


class TestBuilders:
    """Tests for the per-case builders."""

    def test_case1(self):
        """Verify case 1 sizes and profile."""
        g = build_case1(2, 3)
        assert (g.n, g.edge_count) == (6, 8)
        assert invariant_profile(g).as_tuple() == (1, 2, 2, 3)
        assert build_case1(1, 1).edge_list() == [(0, 1)]

    def test_case2(self):
        """Verify case 2 sizes and profile."""
        g = build_case2(2, 3)
        assert (g.n, g.edge_count) == (6, 10)
        assert invariant_profile(g).as_tuple() == (1, 2, 3, 2)
        assert build_case2(3, 4).n == 8

    def test_case3(self):
        """Verify case 3 sizes and profile."""
        g = build_case3(3, 4, 5)
        assert g.n == 11
        assert invariant_profile(g).as_tuple() == (1, 3, 4, 5)
        small = build_case3(2, 3, 3)
        assert small.n == build_case2(2, 3).n + 1
        assert small.edge_count == build_case2(2, 3).edge_count + 1

    def test_case4(self):
        """Verify case 4 sizes and profile."""
        g = build_case4(2, 3)
        assert (g.n, g.edge_count) == (7, 13)
        assert invariant_profile(g).as_tuple() == (2, 3, 3, 2)
        assert build_case4(2, 2).n == 5

    def test_case5(self):
        """Verify case 5 sizes and profile."""
        g = build_case5(2, 3, 4)
        assert g.n == 8
        assert invariant_profile(g).as_tuple() == (2, 3, 3, 4)
        params = resolve(2, 2, 2, 3)
        assert vertex_blocks(params).y_block == []

    def test_case6(self):
        """Verify case 6 sizes and profile."""
        g = build_case6(3, 4, 6, 5)
        assert g.n == 13
        assert invariant_profile(g).as_tuple() == (3, 4, 6, 5)
        assert vertex_blocks(resolve(2, 2, 3, 2)).y_block == []

    def test_case7(self):
        """Verify case 7 sizes and profile."""
        g = build_case7(3, 4, 5, 4)
        assert g.n == 11
        assert invariant_profile(g).as_tuple() == (3, 4, 5, 4)
        assert vertex_blocks(resolve(3, 3, 4, 3)).y_block == []

    @pytest.mark.parametrize("builder, args", [
        (build_case1, (0, 1)),
        (build_case2, (2, 2)),
        (build_case3, (2, 3, 2)),
        (build_case4, (1, 2)),
        (build_case5, (2, 3, 2)),
        (build_case6, (3, 4, 5, 4)),
        (build_case7, (2, 4, 6, 4)),
    ])
    def test_builders_reject_out_of_case_parameters(self, builder, args):
        """Verify each builder refuses parameters outside its case."""
        with pytest.raises(GraphError):
            builder(*args)

    def test_labels(self):
        """Verify vertex names follow the block layout."""
        g = construct(2, 3, 3, 2)
        assert [g.label(v) for v in g.vertices] == ["v_1", "v_2", "v_3", "v_4", "v_5", "v_6", "x"]
        g = construct(1, 3, 4, 5)
        assert g.label(6) == "x_1"
        assert g.label(8) == "y_1"


class TestConstruct:
    """Tests for the dispatched construction."""

    @pytest.mark.parametrize("values, tag", EXAMPLE_TUPLES)
    def test_examples_realise_their_tuple(self, values, tag):
        """Verify each example graph is connected with the requested profile."""
        g = construct(*values)
        assert connected(g)
        assert invariant_profile(g).as_tuple() == values

    def test_construct_matches_builders(self):
        """Verify dispatch picks the right builder."""
        assert construct(1, 2, 2, 3) == build_case1(2, 3)
        assert construct(2, 3, 3, 2) == build_case4(2, 3)

    def test_star_like_case1(self):
        """Verify (1, 1, 1, 5) is K_2 with four pendants on v_1."""
        g = construct(1, 1, 1, 5)
        assert g.n == 6
        assert g.degree(0) == 5
        assert invariant_profile(g).as_tuple() == (1, 1, 1, 5)

    def test_construct_rejects_infeasible(self):
        """Verify infeasible tuples raise InfeasibleTupleError."""
        with pytest.raises(InfeasibleTupleError):
            construct(1, 2, 3, 1)

    @pytest.mark.parametrize("values", enumerate_feasible(3, 2))
    def test_vertex_count_formula(self, values):
        """Verify the per-case vertex count and block sizes."""
        params = resolve(*values)
        g = construct(*values)
        blocks = vertex_blocks(params)
        assert g.n == expected_vertex_count(params) == blocks.total
        assert blocks.v_block == list(range(2 * params.b))


class TestWitnessSets:
    """Tests for the explicit witnesses."""

    def test_case2_witness_matchings(self):
        """Verify the case 2 witnesses of (1, 2, 3, 2)."""
        maximal, maximum = witness_matchings(1, 2, 3, 2)
        assert maximal.edge_list() == [(0, 2), (1, 3)]
        assert len(maximum) == 3

    def test_equal_sizes_when_b_equals_c(self):
        """Verify both witnesses have size b when b = c."""
        maximal, maximum = witness_matchings(2, 3, 3, 2)
        assert len(maximal) == len(maximum) == 3

    def test_case6_witness_sizes(self):
        """Verify case 6 witness sizes."""
        maximal, maximum = witness_matchings(3, 4, 6, 5)
        assert (len(maximal), len(maximum)) == (4, 6)

    def test_induced_matching_witness(self):
        """Verify the induced matching is the first a consecutive pairs."""
        assert witness_induced_matching(1, 2, 2, 3).edge_list() == [(0, 1)]
        assert witness_induced_matching(3, 4, 5, 4).edge_list() == [(0, 1), (2, 3), (4, 5)]

    def test_independent_set_witness(self):
        """Verify case 4 and case 1 independent sets."""
        assert witness_independent_set(2, 3, 3, 2) == frozenset({0, 2})
        assert witness_independent_set(1, 2, 2, 3) == frozenset({4, 5, 3})

    @pytest.mark.parametrize("values", enumerate_feasible(3, 2))
    def test_certificate_witnesses_are_valid(self, values):
        """Verify every certificate witness passes its predicate with its target size."""
        a, b, c, d = values
        cert = certificate(*values)
        g = cert.graph
        w = cert.witnesses
        assert is_induced_matching(g, w.induced) and len(w.induced) == a
        assert is_maximal_matching(g, w.minimum_maximal) and len(w.minimum_maximal) == b
        assert is_matching(g, w.maximum) and len(w.maximum) == c
        assert is_independent_set(g, w.independent) and len(w.independent) == d
