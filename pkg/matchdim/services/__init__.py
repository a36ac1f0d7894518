# Services package
from matchdim.services.constructions import construct, dispatch_case, feasible
from matchdim.services.graph_ops import s_suspension
from matchdim.services.invariants import invariant_profile, oracle_profile
from matchdim.services.verifier import sweep_theorem

__all__ = [
    "construct",
    "dispatch_case",
    "feasible",
    "s_suspension",
    "invariant_profile",
    "oracle_profile",
    "sweep_theorem",
]
