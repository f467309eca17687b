from __future__ import annotations

from typing import Any, List, Literal

from pydantic import BaseModel, ConfigDict, Field


CheckStatus = Literal["pass", "fail", "budget-exceeded"]


class CheckResult(BaseModel):
    """One verification check: a named claim evaluated on a concrete instance."""

    model_config = ConfigDict(frozen=True)

    id: str
    status: CheckStatus
    values: dict[str, Any] = Field(default_factory=dict)
    witness_paths: List[str] = Field(default_factory=list)
    ms: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json_line(self) -> str:
        return self.model_dump_json() + "\n"


class SuiteSummary(BaseModel):
    suite: str
    seed: int
    total: int = 0
    passed: int = 0
    failed: List[str] = Field(default_factory=list)
    budget_exceeded: List[str] = Field(default_factory=list)

    @classmethod
    def from_results(cls, suite: str, seed: int, results: list[CheckResult]) -> "SuiteSummary":
        return cls(
            suite=suite,
            seed=seed,
            total=len(results),
            passed=sum(1 for result in results if result.passed),
            failed=[result.id for result in results if result.status == "fail"],
            budget_exceeded=[result.id for result in results if result.status == "budget-exceeded"],
        )
