"""
Verification records emitted by the theorem sweep and the lemma suites.
"""
from typing import Any, Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from matchdim.models.invariants import InvariantProfile


class VerificationReport(BaseModel):
    """Outcome of construct-then-solve for one feasible tuple."""
    model_config = ConfigDict(frozen=True)

    tuple: Tuple[int, int, int, int]
    case: str
    expected: InvariantProfile
    computed: InvariantProfile
    connected: bool
    passed: bool
    elapsed: float = Field(0.0, ge=0.0, description="Wall-clock seconds")
    witness_sizes: Tuple[int, int] = Field(..., description="(maximal, maximum) witness matching sizes")

    @model_validator(mode="after")
    def _check_passed(self) -> "VerificationReport":
        expected = self.expected == self.computed and self.connected
        if self.passed != expected:
            raise ValueError("passed must equal (expected == computed and connected)")
        return self

    def to_line(self, timings: bool = False) -> Dict[str, Any]:
        """JSON-line payload; elapsed only when timings are requested."""
        exclude = None if timings else {"elapsed"}
        return self.model_dump(mode="json", exclude=exclude)


class RandomGraphSpec(BaseModel):
    """Parameters of one seeded G(n, p) draw."""
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=0)
    p: float = Field(..., ge=0.0, le=1.0)
    seed: int = Field(..., ge=0, lt=2 ** 64)
    forbid_isolated: bool = False


class LemmaSuiteResult(BaseModel):
    """Counts for one property suite over a corpus."""
    suite: str
    checked: int = 0
    skipped: int = 0
    failed: int = 0
    first_failure: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.failed == 0

    def to_line(self) -> Dict[str, Any]:
        payload = self.model_dump(mode="json", exclude_none=True)
        payload["passed"] = self.passed
        return payload


class SweepSummary(BaseModel):
    """Pass/fail totals of a sweep."""
    total: int = 0
    passed: int = 0
    failed: int = 0

    @property
    def all_passed(self) -> bool:
        return self.failed == 0
