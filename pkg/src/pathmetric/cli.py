"""Thin command-line client for the verification service.

Every verification command is served by the FastAPI app; by default the CLI
talks to it in-process over an ASGI transport (no server needed), or to a
remote instance via --server. The client renders reports, writes CSV and
certificate files, and maps outcomes to exit codes:

    0  all requested checks completed (verdicts live in the report)
    2  invalid input (bad prime, malformed file, empty range)
    3  resource budget exhausted (reduction branches / solver pivots)
    1  transport or unexpected failure

The text and structured renderings of a report carry identical facts; wall
times are informational only.
"""

from __future__ import annotations

import argparse
import asyncio
import csv
import json
import sys
from typing import Any

import httpx

from .audits import CSV_COLUMNS
from .service.models import (
    REPORT_STATUS_BUDGET,
    Report,
)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INVALID_INPUT = 2
EXIT_BUDGET = 3


def render_text(report: Report) -> str:
    lines = [
        f"command: {report.command}",
        f"digest: {report.input_digest}",
        f"status: {report.status}",
    ]
    for check in report.checks:
        lines.append(f"check {check.name}: {check.verdict} ({check.wall_time_s:.3f}s)")
        for key in sorted(check.detail):
            lines.append(f"  {key}: {check.detail[key]}")
        if check.certificate is not None:
            for idx in sorted(check.certificate):
                lines.append(f"  cert {idx} {check.certificate[idx]}")
        if check.witness is not None:
            for var in sorted(check.witness):
                lines.append(f"  witness {var} {check.witness[var]}")
    if report.table is not None:
        lines.append("table: " + ",".join(CSV_COLUMNS))
        for row in report.table:
            lines.append("row: " + ",".join(row.get(c, "") for c in CSV_COLUMNS))
    return "\n".join(lines) + "\n"


def parse_text_report(text: str) -> dict[str, Any]:
    """Parse render_text output back into its facts (used by round-trip tests)."""
    facts: dict[str, Any] = {"checks": [], "table": None}
    current: dict[str, Any] | None = None
    for line in text.splitlines():
        if line.startswith("command: "):
            facts["command"] = line[len("command: ") :]
        elif line.startswith("digest: "):
            facts["input_digest"] = line[len("digest: ") :]
        elif line.startswith("status: "):
            facts["status"] = line[len("status: ") :]
        elif line.startswith("check "):
            head, verdict_time = line[len("check ") :].split(": ", 1)
            verdict = verdict_time.rsplit(" (", 1)[0]
            current = {
                "name": head,
                "verdict": verdict,
                "detail": {},
                "certificate": None,
                "witness": None,
            }
            facts["checks"].append(current)
        elif line.startswith("table: "):
            facts["table"] = []
        elif line.startswith("row: "):
            values = line[len("row: ") :].split(",")
            facts["table"].append(dict(zip(CSV_COLUMNS, values)))
        elif line.startswith("  ") and current is not None:
            body = line[2:]
            if body.startswith("cert "):
                _, idx, mult = body.split(" ", 2)
                if current["certificate"] is None:
                    current["certificate"] = {}
                current["certificate"][int(idx)] = mult
            elif body.startswith("witness "):
                _, var, val = body.split(" ", 2)
                if current["witness"] is None:
                    current["witness"] = {}
                current["witness"][var] = val
            else:
                key, value = body.split(": ", 1)
                current["detail"][key] = value
    return facts


def report_facts(report: Report) -> dict[str, Any]:
    """The comparable facts of a report (everything except wall times)."""
    return {
        "command": report.command,
        "input_digest": report.input_digest,
        "status": report.status,
        "checks": [
            {
                "name": c.name,
                "verdict": c.verdict,
                "detail": dict(c.detail),
                "certificate": None
                if c.certificate is None
                else {int(k): v for k, v in c.certificate.items()},
                "witness": None if c.witness is None else dict(c.witness),
            }
            for c in report.checks
        ],
        "table": report.table if report.table is None else [dict(r) for r in report.table],
    }


def _post(server: str | None, path: str, payload: dict[str, Any]) -> httpx.Response:
    if server:
        with httpx.Client(base_url=server, timeout=None) as client:
            return client.post(path, json=payload)

    from .service.app import app

    async def go() -> httpx.Response:
        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(
            transport=transport, base_url="http://pathmetric", timeout=None
        ) as client:
            return await client.post(path, json=payload)

    return asyncio.run(go())


def _emit(report: Report, fmt: str) -> None:
    if fmt == "structured":
        print(json.dumps(report.model_dump(), indent=2))
    else:
        print(render_text(report), end="")


def _finish(resp: httpx.Response, args: argparse.Namespace) -> int:
    if resp.status_code in (400, 422):
        detail = resp.json().get("detail", resp.text)
        print(f"error: {detail}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    if resp.status_code != 200:
        print(f"error: service returned HTTP {resp.status_code}", file=sys.stderr)
        return EXIT_FAILURE
    report = Report.model_validate(resp.json())

    if getattr(args, "csv", None) and report.table is not None:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(CSV_COLUMNS)
            for row in report.table:
                writer.writerow([row.get(c, "") for c in CSV_COLUMNS])

    if getattr(args, "dump_certificate", None):
        lines = []
        for check in report.checks:
            if check.certificate is not None:
                for idx in sorted(check.certificate):
                    lines.append(f"cert {idx} {check.certificate[idx]}")
                break
            if check.witness is not None:
                for var in sorted(check.witness):
                    lines.append(f"witness {var} {check.witness[var]}")
                break
        with open(args.dump_certificate, "w") as fh:
            fh.write("\n".join(lines) + ("\n" if lines else ""))

    _emit(report, args.format)
    if report.status == REPORT_STATUS_BUDGET:
        return EXIT_BUDGET
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathmetric",
        description="Verify path systems: metrizability and irreducibility "
        "with exact certificates.",
    )
    parser.add_argument(
        "--server",
        default=None,
        help="URL of a running pathmetric service (default: run in-process)",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    pv = sub.add_parser("paley-verify", help="verify the residue path system of a prime")
    pv.add_argument("--prime", type=int, required=True)
    pv.add_argument("--direct-lp", action="store_true", help="also solve the direct edge-weight system (heavy)")
    pv.add_argument("--search-reduction", action="store_true", help="also run the exhaustive reduction search (heavy)")
    pv.add_argument("--budget", type=int, default=None, help="branch/pivot budget for the heavy checks")
    pv.add_argument("--format", choices=("text", "structured"), default="text")

    ck = sub.add_parser("check", help="check a path-system file")
    ck.add_argument("--input", required=True, help="pathsystem v1 file")
    ck.add_argument("--dump-certificate", default=None, help="write the metrizability certificate or witness here")
    ck.add_argument("--budget", type=int, default=None)
    ck.add_argument("--format", choices=("text", "structured"), default="text")

    au = sub.add_parser("audit", help="audit character-sum and neighborhood bounds")
    au.add_argument("--max", type=int, required=True, help="audit all odd primes up to this bound")
    au.add_argument("--seed", type=int, default=0)
    au.add_argument("--csv", default=None, help="write per-prime rows to this CSV file")
    au.add_argument("--burgess-max", type=int, default=199, help="cap for the sampled character-sum audit")
    au.add_argument("--cn-max", type=int, default=101, help="cap for the cubic common-neighbor audit")
    au.add_argument("--format", choices=("text", "structured"), default="text")

    sv = sub.add_parser("serve", help="run the verification service")
    sv.add_argument("--host", default="127.0.0.1")
    sv.add_argument("--port", type=int, default=8000)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.subcommand == "serve":
            import uvicorn

            uvicorn.run("pathmetric.service.app:app", host=args.host, port=args.port)
            return EXIT_OK
        if args.subcommand == "paley-verify":
            payload = {
                "prime": args.prime,
                "direct_lp": args.direct_lp,
                "search_reduction": args.search_reduction,
                "budget": args.budget,
            }
            return _finish(_post(args.server, "/verify/paley", payload), args)
        if args.subcommand == "check":
            try:
                with open(args.input) as fh:
                    content = fh.read()
            except OSError as exc:
                print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
                return EXIT_INVALID_INPUT
            payload = {"content": content, "budget": args.budget}
            return _finish(_post(args.server, "/check", payload), args)
        if args.subcommand == "audit":
            payload = {
                "max_prime": args.max,
                "seed": args.seed,
                "burgess_max": args.burgess_max,
                "cn_max": args.cn_max,
            }
            return _finish(_post(args.server, "/audit", payload), args)
        raise AssertionError(f"unhandled subcommand {args.subcommand}")
    except httpx.HTTPError as exc:
        print(f"error: transport failure: {exc}", file=sys.stderr)
        return EXIT_FAILURE


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
