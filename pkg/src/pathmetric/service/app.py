"""FastAPI application wrapping the verification toolkit.

Endpoints return Reports; invalid verification inputs (non-admissible primes,
malformed path-system files, empty audit ranges) map to HTTP 400 so thin
clients can translate them to their invalid-input exit code. Budget
exhaustion is a successful response with Report.status set accordingly.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from .models import (
    AuditRequest,
    CheckFileRequest,
    HealthResponse,
    PaleyVerifyRequest,
    Report,
)
from .runners import InputRejected, run_audit, run_check_file, run_paley_verify


def create_app() -> FastAPI:
    app = FastAPI(
        title="pathmetric",
        description="Path-system verification: metrizability and irreducibility "
        "with exact, re-checkable certificates.",
        version=__version__,
    )

    @app.get("/healthz", response_model=HealthResponse)
    def healthz() -> HealthResponse:
        return HealthResponse(status="ok", version=__version__)

    @app.post("/verify/paley", response_model=Report)
    def verify_paley(req: PaleyVerifyRequest) -> Report:
        try:
            return run_paley_verify(req)
        except InputRejected as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc

    @app.post("/check", response_model=Report)
    def check(req: CheckFileRequest) -> Report:
        try:
            return run_check_file(req)
        except InputRejected as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc

    @app.post("/audit", response_model=Report)
    def audit(req: AuditRequest) -> Report:
        try:
            return run_audit(req)
        except InputRejected as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc

    return app


app = create_app()
