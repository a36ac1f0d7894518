"""
Invariant profile of a graph: (ind-match, min-match, match, dim).

Thin facade over the exact solvers in matching.py and independence.py,
plus the witness bundle that certifies each coordinate.
"""
from typing import Tuple

import structlog

from matchdim.exceptions import EmptyGraphError
from matchdim.models.graph import Graph
from matchdim.models.invariants import InvariantProfile, WitnessBundle
from matchdim.services.independence import dimension, maximum_independent_set
from matchdim.services.matching import (
    induced_matching_number,
    matching_number,
    maximum_induced_matching,
    maximum_matching,
    min_matching_number,
    minimum_maximal_matching,
)
from matchdim.services.oracle import oracle_profile

logger = structlog.get_logger()

__all__ = [
    "invariant_profile",
    "profile_with_witnesses",
    "oracle_profile",
]


def invariant_profile(g: Graph) -> InvariantProfile:
    """Exact (ind-match, min-match, match, dim) of a graph with n >= 1."""
    if g.n == 0:
        raise EmptyGraphError("invariants are undefined for the graph with no vertices")
    return InvariantProfile(
        ind_match=induced_matching_number(g),
        min_match=min_matching_number(g),
        match=matching_number(g),
        dim=dimension(g),
    )


def profile_with_witnesses(g: Graph) -> Tuple[InvariantProfile, WitnessBundle]:
    """Profile together with a lexicographically smallest optimal witness per coordinate."""
    if g.n == 0:
        raise EmptyGraphError("invariants are undefined for the graph with no vertices")
    witnesses = WitnessBundle(
        induced=maximum_induced_matching(g),
        minimum_maximal=minimum_maximal_matching(g),
        maximum=maximum_matching(g),
        independent=maximum_independent_set(g),
    )
    profile = InvariantProfile(
        ind_match=len(witnesses.induced),
        min_match=len(witnesses.minimum_maximal),
        match=len(witnesses.maximum),
        dim=len(witnesses.independent),
    )
    return profile, witnesses
