"""HTTP service layer: pydantic models, command runners, FastAPI app."""

from .app import app, create_app
from .models import (
    AuditRequest,
    CheckFileRequest,
    CheckRecord,
    PaleyVerifyRequest,
    Report,
)
from .runners import InputRejected, run_audit, run_check_file, run_paley_verify

__all__ = [
    "app",
    "create_app",
    "Report",
    "CheckRecord",
    "PaleyVerifyRequest",
    "CheckFileRequest",
    "AuditRequest",
    "InputRejected",
    "run_paley_verify",
    "run_check_file",
    "run_audit",
]
