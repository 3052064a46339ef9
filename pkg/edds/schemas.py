"""Pydantic schemas for every JSON document the command line emits."""
from __future__ import annotations

from typing import Any, Dict, Optional

from pydantic import BaseModel, Field, computed_field


class VertexOut(BaseModel):
    index: int = Field(..., description="0-based vertex index in the target graph.")
    tag: str = Field(..., description="1-based rendered provenance tag, e.g. z(2,5).")


class TagMapOut(BaseModel):
    line: int
    graph6: str
    tags: list[VertexOut]


class LineError(BaseModel):
    line: int
    error: str


class SolveOut(BaseModel):
    line: int
    graph6: str
    n: int
    exists: bool
    size: Optional[int] = None
    count: int
    witness: Optional[list[VertexOut]] = None
    matching_ok: Optional[bool] = Field(
        default=None,
        description="Whether the witness induces a 1-regular subgraph on itself.",
    )


class DecisionOut(BaseModel):
    line: int
    graph6: str
    target: str
    target_graph6: str
    exists: bool
    reason: str
    witness: Optional[list[VertexOut]] = None
    witness_valid: Optional[bool] = None
    certificate: Optional[Dict[str, Any]] = None


class ViolationOut(BaseModel):
    vertex: int
    count: int


class VerifyOut(BaseModel):
    line: int
    graph6: str
    members: list[int] = Field(default_factory=list)
    valid: bool
    violations: list[ViolationOut] = Field(default_factory=list)


class CrossCheckRecord(BaseModel):
    graph6: str
    target: str
    decider_exists: bool
    oracle_exists: bool
    witness_valid: Optional[bool] = None
    size_law_ok: Optional[bool] = None
    original_bound_ok: Optional[bool] = None
    all_sets_ok: Optional[bool] = None
    elapsed_ms: Optional[float] = None

    @computed_field  # type: ignore[misc]
    @property
    def passed(self) -> bool:
        flags = (self.witness_valid, self.size_law_ok, self.original_bound_ok, self.all_sets_ok)
        return self.decider_exists == self.oracle_exists and all(flag is not False for flag in flags)


class TargetTotals(BaseModel):
    title: Optional[str] = None
    passed: int = 0
    failed: int = 0


class Report(BaseModel):
    graphs: int = 0
    totals: Dict[str, TargetTotals] = Field(default_factory=dict)
    failures: list[CrossCheckRecord] = Field(default_factory=list)
    records: Optional[list[CrossCheckRecord]] = None

    @computed_field  # type: ignore[misc]
    @property
    def ok(self) -> bool:
        return not self.failures


__all__ = [
    "CrossCheckRecord",
    "DecisionOut",
    "LineError",
    "Report",
    "SolveOut",
    "TagMapOut",
    "TargetTotals",
    "VerifyOut",
    "VertexOut",
    "ViolationOut",
]
