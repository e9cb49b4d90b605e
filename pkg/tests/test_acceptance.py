"""Acceptance criteria, one test per criterion, each printing a PASS/FAIL line.

Run with `pytest -s tests/test_acceptance.py` to see the lines as they pass;
every criterion asserts both its verdicts and its stated time budget.
"""

import random
import time
from fractions import Fraction

from helpers import all_simple_paths
from pathmetric.audits import audit_primes
from pathmetric.graphs import make_graph, paley_graph, strongly_connected
from pathmetric.linear import general_to_linear, make_general_system, verify_certificate
from pathmetric.metrizability import (
    LemmaVerdict,
    build_metrizability_system,
    build_reduced_system,
    build_symmetrized_system,
    is_metrizable,
    solve_feasibility,
    strong_lemma_verdict,
)
from pathmetric.numtheory import admissible_primes, make_prime_field
from pathmetric.pathsystems import (
    build_paley_system,
    is_consistent,
    make_path_system,
    petersen_fixture,
)
from pathmetric.reducibility import CertifiedNone, Reduction, find_reduction, verify_reduction

ADMISSIBLE_461 = [29, 53, 101, 149, 173, 197, 269, 293, 317, 389, 461]


def _report(criterion: str, ok: bool, info: str) -> None:
    print(f"ACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'} ({info})")
    assert ok, f"criterion {criterion} failed: {info}"


def test_criterion_1_consistency():
    times = []
    ok = True
    for p in (29, 53, 101, 149):
        t0 = time.perf_counter()
        ps = build_paley_system(make_prime_field(p))
        consistent, _ = is_consistent(ps)
        elapsed = time.perf_counter() - t0
        times.append(f"p={p}:{elapsed:.1f}s")
        ok = ok and consistent and elapsed < 30.0
    _report("1 consistency", ok, " ".join(times))


def test_criterion_2_symmetrized_infeasible():
    assert admissible_primes(461) == ADMISSIBLE_461  # 11 primes
    infos = []
    ok = True
    for p in ADMISSIBLE_461:
        t0 = time.perf_counter()
        sys_ = build_symmetrized_system(make_prime_field(p))
        verdict = solve_feasibility(sys_)
        checked = verify_certificate(sys_, verdict)
        elapsed = time.perf_counter() - t0
        ok = ok and (not verdict.feasible) and checked and elapsed < 10.0
        infos.append(f"p={p}:{elapsed:.1f}s")
    _report("2 symmetrized-infeasibility", ok, " ".join(infos))


def test_criterion_3_direct_infeasible():
    pf = make_prime_field(29)
    g = paley_graph(pf)
    ps = build_paley_system(pf)
    t0 = time.perf_counter()
    verdict = is_metrizable(g, ps)
    paley_ok = (
        not verdict.feasible
        and verify_certificate(build_metrizability_system(g, ps), verdict)
    )
    t_paley = time.perf_counter() - t0

    gp, psp = petersen_fixture()
    t0 = time.perf_counter()
    pv = is_metrizable(gp, psp)
    petersen_ok = (
        not pv.feasible and verify_certificate(build_metrizability_system(gp, psp), pv)
    )
    t_pet = time.perf_counter() - t0
    ok = paley_ok and petersen_ok and t_paley < 300.0 and t_pet < 5.0
    _report("3 direct-infeasibility", ok, f"paley29:{t_paley:.1f}s petersen:{t_pet:.2f}s")


def test_criterion_4_irreducibility():
    ps = build_paley_system(make_prime_field(29))
    t0 = time.perf_counter()
    outcome = find_reduction(ps, budget=10**8)
    t_paley = time.perf_counter() - t0
    paley_ok = isinstance(outcome, CertifiedNone)
    branches = outcome.branches if paley_ok else -1

    _, psp = petersen_fixture()
    found = find_reduction(psp)
    petersen_ok = isinstance(found, Reduction)
    if petersen_ok:
        accepted, _ = verify_reduction(psp, found.side_a, found.side_b)
        petersen_ok = accepted
    figure_ok, _ = verify_reduction(psp, frozenset(range(1, 6)), frozenset(range(6, 11)))
    ok = paley_ok and petersen_ok and figure_ok
    _report(
        "4 irreducibility",
        ok,
        f"paley29 exhausted in {branches} branches ({t_paley:.2f}s), petersen reducible",
    )


def test_criterion_5_lemma_agreement():
    rng = random.Random(7)
    disagreements = 0
    total = 0
    while total < 200:
        n = rng.randint(2, 7)
        all_two = total % 2 == 0
        triples = []
        for t in range(n):  # spanning cycle keeps the digraph strongly connected
            a = 2 if all_two else rng.choice([2, 2, 3, Fraction(5, 2)])
            triples.append((a, t, (t + 1) % n, rng.randrange(n)))
        for _ in range(rng.randint(0, 7)):
            a = 2 if all_two else rng.choice([2, 3])
            triples.append((a, rng.randrange(n), rng.randrange(n), rng.randrange(n)))
        if not all_two and all(Fraction(a) == 2 for a, *_ in triples):
            triples[0] = (3,) + triples[0][1:]
        gs = make_general_system(range(n), triples)
        verdict = strong_lemma_verdict(gs)
        if verdict == LemmaVerdict.INCONCLUSIVE:
            continue
        total += 1
        sys_ = general_to_linear(gs)
        solved = solve_feasibility(sys_)
        if not verify_certificate(sys_, solved):
            disagreements += 1
            continue
        if verdict == LemmaVerdict.FEASIBLE_ALL_EQUAL:
            if not solved.feasible or len(set(solved.witness.values())) != 1:
                disagreements += 1
        else:
            if solved.feasible:
                disagreements += 1
    _report(
        "5 lemma-agreement", disagreements == 0, f"{total} systems, {disagreements} disagreements"
    )


def _shortest_path_system(graph, weights):
    paths = []
    for u in graph.vertices:
        for v in graph.vertices:
            if u >= v:
                continue
            best = best_w = None
            tie = False
            for path in all_simple_paths(graph.adjacency, u, v):
                w = sum(weights[(min(a, b), max(a, b))] for a, b in zip(path, path[1:]))
                if best_w is None or w < best_w:
                    best, best_w, tie = path, w, False
                elif w == best_w:
                    tie = True
            if best is None:
                return None
            if tie:
                return None
            paths.append(best)
    return make_path_system(graph, paths)


def _fixture_systems():
    """At least 20 consistent systems on graphs with at most 8 vertices."""
    systems = []
    rng = random.Random(2)

    def add_shortest(graph):
        for _ in range(50):
            weights = {e: Fraction(rng.randint(1, 40)) for e in sorted(graph.edges)}
            ps = _shortest_path_system(graph, weights)
            if ps is not None:
                systems.append(ps)
                return
        raise AssertionError("could not build a tie-free weighting")

    # trees carry their unique path systems
    for edges in (
        [(0, 1), (1, 2), (2, 3)],
        [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)],
        [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)],
        [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5), (5, 6)],
    ):
        g = make_graph({v for e in edges for v in e}, edges)
        paths = [
            next(all_simple_paths(g.adjacency, u, v))
            for u in g.vertices
            for v in g.vertices
            if u < v
        ]
        systems.append(make_path_system(g, paths))

    for n in (4, 5, 6, 7, 8):  # cycles
        add_shortest(make_graph(range(n), [(i, (i + 1) % n) for i in range(n)]))
    for n in (4, 5):  # complete graphs, two weightings each
        kn = make_graph(range(n), [(u, v) for u in range(n) for v in range(u + 1, n)])
        add_shortest(kn)
        add_shortest(kn)
    # cube
    cube_edges = [
        (0, 1), (1, 2), (2, 3), (0, 3),
        (4, 5), (5, 6), (6, 7), (4, 7),
        (0, 4), (1, 5), (2, 6), (3, 7),
    ]
    add_shortest(make_graph(range(8), cube_edges))
    # complete bipartite 3+3
    add_shortest(make_graph(range(6), [(u, v) for u in range(3) for v in range(3, 6)]))
    # wheel: hub 0 with a 6-cycle rim
    rim = [(i, i % 6 + 1) for i in range(1, 7)]
    add_shortest(make_graph(range(7), rim + [(0, i) for i in range(1, 7)]))
    # bent four-cycle and six-cycle (consistent by hand)
    g4 = make_graph(range(4), [(0, 1), (1, 2), (2, 3), (0, 3)])
    systems.append(make_path_system(g4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 1, 2), (1, 0, 3)]))
    g6 = make_graph(range(6), [(i, (i + 1) % 6) for i in range(6)])
    systems.append(
        make_path_system(
            g6,
            [
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5),
                (0, 1, 2), (1, 2, 3), (2, 3, 4), (3, 4, 5), (4, 5, 0), (5, 0, 1),
                (0, 1, 2, 3), (1, 2, 3, 4), (2, 3, 4, 5),
            ],
        )
    )
    # random connected graphs
    added = 0
    while added < 3:
        n = rng.randint(6, 8)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.45]
        g = make_graph(range(n), edges)
        if any(not g.neighbors(v) for v in g.vertices):
            continue
        try:
            add_shortest(g)
            added += 1
        except AssertionError:
            continue
    return systems


def test_criterion_6_metrizability_oracle_soundness():
    systems = _fixture_systems()
    assert len(systems) >= 20
    assert all(ps.graph.n <= 8 for ps in systems)
    feasible = infeasible = violations = 0
    for ps in systems:
        consistent, _ = is_consistent(ps)
        assert consistent
        sys_ = build_metrizability_system(ps.graph, ps)
        verdict = solve_feasibility(sys_)
        if not verify_certificate(sys_, verdict):
            violations += 1
            continue
        if verdict.feasible:
            feasible += 1
            w = verdict.witness
            for u, v in ps.pairs():
                path = ps.paths[(u, v)]
                stored = sum(
                    w[f"w_{min(a, b)}_{max(a, b)}"] for a, b in zip(path, path[1:])
                )
                for q in all_simple_paths(ps.graph.adjacency, u, v):
                    cost = sum(
                        w[f"w_{min(a, b)}_{max(a, b)}"] for a, b in zip(q, q[1:])
                    )
                    if stored > cost:
                        violations += 1
        else:
            infeasible += 1
    _report(
        "6 oracle-soundness",
        violations == 0,
        f"{len(systems)} systems ({feasible} feasible, {infeasible} infeasible), "
        f"{violations} violations",
    )


def test_criterion_7_audit_bounds():
    t0 = time.perf_counter()
    rows = audit_primes(5000, seed=0, burgess_max=199, cn_max=101)
    elapsed = time.perf_counter() - t0

    burgess_rows = [r for r in rows if r.burgess_violations is not None]
    burgess_ok = (
        all(r.burgess_violations == 0 for r in burgess_rows)
        and max(r.p for r in burgess_rows) == 199
    )
    cn_rows = {r.p: r for r in rows if r.cn_max_deviation is not None}
    cn_ok = {29, 53, 101} <= set(cn_rows) and all(
        r.cn_within_loose for r in cn_rows.values()
    )
    run_exceptions = sorted(r.p for r in rows if not r.run_within_sqrt)
    runs_ok = run_exceptions == [13]
    ok = burgess_ok and cn_ok and runs_ok and elapsed < 300.0
    _report(
        "7 audit-bounds",
        ok,
        f"{len(burgess_rows)} burgess primes, cn deviations "
        f"{ {p: str(cn_rows[p].cn_max_deviation) for p in (29, 53, 101)} }, "
        f"run-length exceptions {run_exceptions}, {elapsed:.0f}s",
    )


def test_criterion_8_strong_connectivity_report():
    lines = []
    ok = True
    for p in ADMISSIBLE_461:
        pf = make_prime_field(p)
        gs, digraph = build_reduced_system(pf)
        sc, components = strongly_connected(digraph)
        verdict = strong_lemma_verdict(gs)
        if sc:
            # the 3 x_1 rows are present, so the lemma must report infeasibility
            ok = ok and verdict == LemmaVerdict.INFEASIBLE_BY_LEMMA
        else:
            ok = ok and verdict == LemmaVerdict.INCONCLUSIVE
        lines.append(f"p={p}:{'SC' if sc else f'{len(components)}comp'}")
    _report("8 strong-connectivity", ok, " ".join(lines))
