# -*- coding: utf-8 -*-
"""
Pydantic models for identity reports and output documents.

Exact values never appear as floats: every sequence value is carried as
its lossless string rendering.
"""

from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator


# =============================================================================
# Status Types
# =============================================================================

ReportStatus = Literal["pass", "fail"]
CheckMode = Literal["exact", "fast"]
OutputFormat = Literal["json", "csv", "text"]


# =============================================================================
# Identity Catalog
# =============================================================================

class IdentityInfo(BaseModel):
    """Registry entry as listed by list_identities."""
    tag: str
    description: str
    anchor: str
    left_source: str
    right_source: str
    two_index: bool = False


class Counterexample(BaseModel):
    """First index tuple at which the two sides disagree."""
    indices: Dict[str, int]
    left: str
    right: str
    difference: str
    label: Optional[str] = None  # which of several comparisons at these indices
    point: Optional[Dict[str, str]] = None  # fast mode only: the evaluation point


class IdentityReport(BaseModel):
    """Outcome of verifying one identity over an index range."""
    id: str
    range: Dict[str, Any]
    status: ReportStatus
    counterexample: Optional[Counterexample] = None
    elapsed: float = Field(ge=0)
    mode: CheckMode = "exact"
    comparisons: int = Field(default=0, ge=0)
    notes: List[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def status_matches_counterexample(self) -> "IdentityReport":
        if (self.status == "fail") != (self.counterexample is not None):
            raise ValueError("status must be 'fail' exactly when a counterexample is present")
        return self

    @property
    def passed(self) -> bool:
        return self.status == "pass"


# =============================================================================
# Output Documents
# =============================================================================

class OutputDocument(BaseModel):
    """
    Top-level payload written by the command-line tool.

    Serializes to {"command", "version", "params", "results"}; ``format``
    only selects the rendering.
    """
    format: OutputFormat = Field(default="json", exclude=True)
    command: str
    version: str
    params: Dict[str, Any] = Field(default_factory=dict)
    results: List[Dict[str, Any]] = Field(default_factory=list)

    @field_validator("results")
    @classmethod
    def values_are_strings(cls, results: List[Dict[str, Any]]) -> List[Dict[str, Any]]:
        for entry in results:
            if "value" in entry and not isinstance(entry["value"], str):
                raise ValueError(f"value of entry {entry.get('n')} must be a string")
            if "row" in entry and not all(isinstance(v, str) for v in entry["row"]):
                raise ValueError(f"row of entry {entry.get('n')} must hold strings")
        return results
