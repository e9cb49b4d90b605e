"""Pydantic request and response models for the verification service.

A Report is the single response shape for every verification command: the
command echo, a digest of the input, one record per check, and an overall
status. Every claimed verdict is backed by a re-verifiable artifact inside
the record's detail: a witness, a certificate, or an exhaustive-search branch
count. The text rendering used by the CLI carries exactly the same facts.
"""

from __future__ import annotations

from pydantic import BaseModel, Field

REPORT_STATUS_OK = "ok"
REPORT_STATUS_INVALID = "invalid-input"
REPORT_STATUS_BUDGET = "budget-exhausted"


class CheckRecord(BaseModel):
    name: str
    verdict: str
    wall_time_s: float
    detail: dict[str, str] = Field(default_factory=dict)
    certificate: dict[int, str] | None = None  # row index -> multiplier (rational)
    witness: dict[str, str] | None = None  # variable -> value (rational)


class Report(BaseModel):
    command: str
    input_digest: str
    status: str = REPORT_STATUS_OK
    checks: list[CheckRecord] = Field(default_factory=list)
    table: list[dict[str, str]] | None = None  # audit CSV rows, if any


class PaleyVerifyRequest(BaseModel):
    prime: int
    direct_lp: bool = False
    search_reduction: bool = False
    budget: int | None = Field(default=None, gt=0)


class CheckFileRequest(BaseModel):
    content: str  # pathsystem v1 text
    budget: int | None = Field(default=None, gt=0)


class AuditRequest(BaseModel):
    max_prime: int = Field(ge=3)
    seed: int = 0
    burgess_max: int = 199
    cn_max: int = 101


class HealthResponse(BaseModel):
    status: str
    version: str
