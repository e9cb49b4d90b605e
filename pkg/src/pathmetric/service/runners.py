"""Verification commands: the work behind the service endpoints.

Each runner executes a sequence of checks and assembles a Report whose
records carry re-verifiable artifacts (witnesses, certificates, branch
counts). Runners raise InputRejected for invalid inputs; budget exhaustion is
reported in the Report status, not as an error, since the checks that did run
are still valid.
"""

from __future__ import annotations

import hashlib
import time
from fractions import Fraction

from ..audits import CSV_COLUMNS, audit_primes
from ..formats import ParseError, load_path_system
from ..graphs import paley_graph, strongly_connected
from ..linear import LinearSystem, Verdict
from ..metrizability import (
    build_metrizability_system,
    build_reduced_system,
    build_symmetrized_system,
    solve_feasibility,
    strong_lemma_verdict,
    verify_certificate,
)
from ..numtheory import is_prime, legendre, make_prime_field
from ..pathsystems import (
    PathSystem,
    build_paley_system,
    check_cyclic_symmetry,
    is_consistent,
)
from ..reducibility import (
    CertifiedNone,
    SearchBudgetExceeded,
    find_reduction,
    verify_reduction,
)
from ..simplex import IterationLimitExceeded
from .models import (
    REPORT_STATUS_BUDGET,
    REPORT_STATUS_OK,
    AuditRequest,
    CheckFileRequest,
    CheckRecord,
    PaleyVerifyRequest,
    Report,
)


class InputRejected(ValueError):
    """Invalid input for a verification command (maps to exit code 2)."""


def _digest(text: str) -> str:
    return "sha256:" + hashlib.sha256(text.encode()).hexdigest()


def admissibility_failure(p: int) -> str | None:
    """Why p cannot carry the construction, or None if it is admissible."""
    if not is_prime(p):
        return f"{p} is not prime"
    if p <= 5:
        return f"{p} is too small: the construction needs p > 5"
    if legendre(p - 1, p) != 1:
        return f"-1 is a quadratic non-residue mod {p}"
    if legendre(2, p) != -1:
        return f"2 is a quadratic residue mod {p}"
    if legendre(3, p) != -1:
        return f"3 is a quadratic residue mod {p}"
    return None


def _verdict_record(
    name: str, sys: LinearSystem, verdict: Verdict, elapsed: float
) -> CheckRecord:
    checked = verify_certificate(sys, verdict)
    if verdict.feasible:
        assert verdict.witness is not None
        return CheckRecord(
            name=name,
            verdict="FEASIBLE",
            wall_time_s=elapsed,
            detail={
                "witness_verified": "yes" if checked else "NO",
                "variables": str(len(sys.variables)),
                "rows": str(sys.nrows),
            },
            witness={v: str(x) for v, x in verdict.witness.items()},
        )
    assert verdict.certificate is not None
    return CheckRecord(
        name=name,
        verdict="INFEASIBLE",
        wall_time_s=elapsed,
        detail={
            "certificate_verified": "yes" if checked else "NO",
            "variables": str(len(sys.variables)),
            "rows": str(sys.nrows),
            "support": str(len(verdict.certificate)),
        },
        certificate={i: str(m) for i, m in verdict.certificate.items()},
    )


def _reduction_record(
    ps: PathSystem, budget: int | None, elapsed_from: float
) -> tuple[CheckRecord, bool]:
    """Run the reduction search; returns (record, budget_hit)."""
    try:
        outcome = find_reduction(ps, budget=budget)
    except SearchBudgetExceeded as exc:
        return (
            CheckRecord(
                name="reduction-search",
                verdict="budget-exhausted",
                wall_time_s=time.perf_counter() - elapsed_from,
                detail={"branches": str(exc.branches)},
            ),
            True,
        )
    elapsed = time.perf_counter() - elapsed_from
    if isinstance(outcome, CertifiedNone):
        return (
            CheckRecord(
                name="reduction-search",
                verdict="irreducible",
                wall_time_s=elapsed,
                detail={"branches": str(outcome.branches), "exhaustive": "yes"},
            ),
            False,
        )
    ok, _ = verify_reduction(ps, outcome.side_a, outcome.side_b)
    return (
        CheckRecord(
            name="reduction-search",
            verdict="reducible",
            wall_time_s=elapsed,
            detail={
                "side_a": " ".join(str(v) for v in sorted(outcome.side_a)),
                "side_b": " ".join(str(v) for v in sorted(outcome.side_b)),
                "reduction_verified": "yes" if ok else "NO",
            },
        ),
        False,
    )


def run_paley_verify(req: PaleyVerifyRequest) -> Report:
    """Verify the residue path system of an admissible prime.

    In order: consistency, cyclic symmetry, symmetrized-system feasibility,
    optional direct-system feasibility, reduced-system strong connectivity
    with the lemma verdict, and the optional reduction search.
    """
    reason = admissibility_failure(req.prime)
    if reason is not None:
        raise InputRejected(reason)
    p = req.prime
    command = f"paley-verify --prime {p}"
    if req.direct_lp:
        command += " --direct-lp"
    if req.search_reduction:
        command += " --search-reduction"
    if req.budget is not None:
        command += f" --budget {req.budget}"
    report = Report(command=command, input_digest=_digest(f"paley p={p}"))

    pf = make_prime_field(p)
    t0 = time.perf_counter()
    ps = build_paley_system(pf)
    ok, violation = is_consistent(ps)
    report.checks.append(
        CheckRecord(
            name="consistency",
            verdict="consistent" if ok else "inconsistent",
            wall_time_s=time.perf_counter() - t0,
            detail={"pairs": str(len(ps))} if ok else {"violation": str(violation)},
        )
    )

    t0 = time.perf_counter()
    symmetric = check_cyclic_symmetry(ps)
    report.checks.append(
        CheckRecord(
            name="cyclic-symmetry",
            verdict="symmetric" if symmetric else "asymmetric",
            wall_time_s=time.perf_counter() - t0,
        )
    )

    t0 = time.perf_counter()
    sym_sys = build_symmetrized_system(pf)
    sym_verdict = solve_feasibility(sym_sys)
    report.checks.append(
        _verdict_record("symmetrized-lp", sym_sys, sym_verdict, time.perf_counter() - t0)
    )

    if req.direct_lp:
        t0 = time.perf_counter()
        graph = paley_graph(pf)
        direct_sys = build_metrizability_system(graph, ps)
        try:
            direct_verdict = solve_feasibility(direct_sys, max_iters=req.budget)
        except IterationLimitExceeded as exc:
            report.checks.append(
                CheckRecord(
                    name="direct-lp",
                    verdict="budget-exhausted",
                    wall_time_s=time.perf_counter() - t0,
                    detail={"iterations": str(exc.iterations)},
                )
            )
            report.status = REPORT_STATUS_BUDGET
        else:
            report.checks.append(
                _verdict_record(
                    "direct-lp", direct_sys, direct_verdict, time.perf_counter() - t0
                )
            )

    t0 = time.perf_counter()
    gs, digraph = build_reduced_system(pf)
    sc, components = strongly_connected(digraph)
    lemma = strong_lemma_verdict(gs)
    report.checks.append(
        CheckRecord(
            name="reduced-system",
            verdict=lemma.value,
            wall_time_s=time.perf_counter() - t0,
            detail={
                "strongly_connected": "yes" if sc else "no",
                "components": str(len(components)),
                "vertices": str(len(gs.labels)),
                "inequalities": str(len(gs.inequalities)),
            },
        )
    )

    if req.search_reduction and report.status == REPORT_STATUS_OK:
        record, budget_hit = _reduction_record(ps, req.budget, time.perf_counter())
        report.checks.append(record)
        if budget_hit:
            report.status = REPORT_STATUS_BUDGET
    return report


def run_check_file(req: CheckFileRequest) -> Report:
    """Check a user-supplied path system: consistency, metrizability, reducibility."""
    try:
        graph, ps = load_path_system(req.content)
    except ParseError as exc:
        raise InputRejected(str(exc)) from exc
    report = Report(command="check", input_digest=_digest(req.content))

    t0 = time.perf_counter()
    ok, violation = is_consistent(ps)
    report.checks.append(
        CheckRecord(
            name="consistency",
            verdict="consistent" if ok else "inconsistent",
            wall_time_s=time.perf_counter() - t0,
            detail={"pairs": str(len(ps))} if ok else {"violation": str(violation)},
        )
    )
    if not ok:
        return report  # the feasibility reduction is only sound for consistent systems

    t0 = time.perf_counter()
    sys_ = build_metrizability_system(graph, ps)
    try:
        verdict = solve_feasibility(sys_, max_iters=req.budget)
    except IterationLimitExceeded as exc:
        report.checks.append(
            CheckRecord(
                name="metrizability",
                verdict="budget-exhausted",
                wall_time_s=time.perf_counter() - t0,
                detail={"iterations": str(exc.iterations)},
            )
        )
        report.status = REPORT_STATUS_BUDGET
        return report
    record = _verdict_record("metrizability", sys_, verdict, time.perf_counter() - t0)
    record.verdict = "metrizable" if verdict.feasible else "non-metrizable"
    report.checks.append(record)

    record, budget_hit = _reduction_record(ps, req.budget, time.perf_counter())
    report.checks.append(record)
    if budget_hit:
        report.status = REPORT_STATUS_BUDGET
    return report


def run_audit(req: AuditRequest) -> Report:
    """Bound audits over all odd primes up to the requested maximum."""
    if req.max_prime < 3:
        raise InputRejected("empty prime range: need --max >= 3")
    command = (
        f"audit --max {req.max_prime} --seed {req.seed}"
        f" --burgess-max {req.burgess_max} --cn-max {req.cn_max}"
    )
    report = Report(
        command=command,
        input_digest=_digest(
            f"audit max={req.max_prime} seed={req.seed} "
            f"burgess={req.burgess_max} cn={req.cn_max}"
        ),
    )
    t0 = time.perf_counter()
    rows = audit_primes(
        req.max_prime, seed=req.seed, burgess_max=req.burgess_max, cn_max=req.cn_max
    )
    elapsed = time.perf_counter() - t0

    burgess_rows = [r for r in rows if r.burgess_violations is not None]
    burgess_viol = sum(r.burgess_violations for r in burgess_rows)
    max_ratio = max((r.burgess_max_ratio for r in burgess_rows), default=0.0)
    report.checks.append(
        CheckRecord(
            name="burgess",
            verdict=f"{burgess_viol} violations",
            wall_time_s=elapsed,
            detail={
                "primes": str(len(burgess_rows)),
                "max_ratio": f"{max_ratio:.6f}",
                "seed": str(req.seed),
            },
        )
    )

    cn_rows = [r for r in rows if r.cn_max_deviation is not None]
    cn_viol = sum(1 for r in cn_rows if not r.cn_within_loose)
    cn_sharp_viol = sum(1 for r in cn_rows if not r.cn_within_sharp)
    worst_dev = max((r.cn_max_deviation for r in cn_rows), default=Fraction(0))
    report.checks.append(
        CheckRecord(
            name="common-neighbors",
            verdict=f"{cn_viol} violations",
            wall_time_s=0.0,
            detail={
                "primes": str(len(cn_rows)),
                "max_deviation": str(worst_dev),
                "sharp_bound_violations": str(cn_sharp_viol),
            },
        )
    )

    exceptions = sorted(r.p for r in rows if not r.run_within_sqrt)
    report.checks.append(
        CheckRecord(
            name="nonresidue-runs",
            verdict="exceptions: " + (" ".join(map(str, exceptions)) or "none"),
            wall_time_s=0.0,
            detail={"primes": str(len(rows))},
        )
    )

    disagreements = sorted(r.p for r in rows if not r.admissible_matches_congruence)
    report.checks.append(
        CheckRecord(
            name="admissibility-congruence",
            verdict="agree" if not disagreements else "disagree",
            wall_time_s=0.0,
            detail={} if not disagreements else {"primes": " ".join(map(str, disagreements))},
        )
    )

    report.table = [
        dict(zip(CSV_COLUMNS, row.csv_values())) for row in rows
    ]
    return report
