"""
Models for the parameterised graph families realising (a, b, c, d).
"""
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from matchdim.models.graph import Graph
from matchdim.models.invariants import InvariantProfile, WitnessBundle


class CaseTag(str, Enum):
    """
    The seven construction cases.

    C1: a = 1, b = c
    C2: a = 1, b < c, d = 2(c-b)
    C3: a = 1, b < c, d > 2(c-b)
    C4: a > 1, b = c, d = a
    C5: a > 1, b = c, d > a
    C6: a > 1, b < c, 2(c-b) >= a
    C7: a > 1, b < c, a > 2(c-b)
    """
    C1 = "C1"
    C2 = "C2"
    C3 = "C3"
    C4 = "C4"
    C5 = "C5"
    C6 = "C6"
    C7 = "C7"

    @property
    def number(self) -> int:
        return int(self.value[1:])


def feasibility_violation(a: int, b: int, c: int, d: int) -> Optional[str]:
    """Name of the first violated inequality, or None for a feasible tuple."""
    if min(a, b, c, d) < 1:
        return "a, b, c, d ≥ 1"
    if a > b:
        return "a ≤ b"
    if b > c:
        return "b ≤ c"
    if c > 2 * b:
        return "c ≤ 2b"
    if d < max(a, 2 * (c - b)):
        return "d ≥ max{a, 2(c−b)}"
    return None


def case_for(a: int, b: int, c: int, d: int) -> CaseTag:
    """Dispatch table of the construction; the tuple must be feasible."""
    if a == 1:
        if b == c:
            return CaseTag.C1
        return CaseTag.C2 if d == 2 * (c - b) else CaseTag.C3
    if b == c:
        return CaseTag.C4 if d == a else CaseTag.C5
    return CaseTag.C6 if 2 * (c - b) >= a else CaseTag.C7


class ConstructionParams(BaseModel):
    """A feasible quadruple together with its dispatched case."""
    model_config = ConfigDict(frozen=True)

    a: int = Field(..., ge=1, description="Target induced matching number")
    b: int = Field(..., ge=1, description="Target minimum matching number")
    c: int = Field(..., ge=1, description="Target matching number")
    d: int = Field(..., ge=1, description="Target dimension")
    case_tag: CaseTag

    @model_validator(mode="after")
    def _check_consistent(self) -> "ConstructionParams":
        violated = feasibility_violation(self.a, self.b, self.c, self.d)
        if violated is not None:
            raise ValueError(f"infeasible tuple {self.as_tuple()}: {violated} violated")
        expected = case_for(self.a, self.b, self.c, self.d)
        if self.case_tag != expected:
            raise ValueError(f"case {self.case_tag.value} does not match dispatch {expected.value}")
        return self

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    @property
    def profile(self) -> InvariantProfile:
        return InvariantProfile.from_tuple(self.as_tuple())


class LabeledVertexBlocks(BaseModel):
    """
    Index blocks of a constructed graph.

    v_block holds v_1..v_{2b} at indices 0..2b-1, then the x-block (or the
    single apex x of cases 4 and 5), then the y-block.
    """
    model_config = ConfigDict(frozen=True)

    v_block: List[int]
    x_block: List[int]
    y_block: List[int]

    @property
    def total(self) -> int:
        return len(self.v_block) + len(self.x_block) + len(self.y_block)


@dataclass(frozen=True)
class ConstructionCertificate:
    """A constructed graph with the explicit witnesses for its four invariants."""
    params: ConstructionParams
    graph: Graph
    blocks: LabeledVertexBlocks
    witnesses: WitnessBundle
