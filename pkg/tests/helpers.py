"""Shared test oracles, deliberately independent of the implementations they check.

Everything here is brute force: squares enumerated by trial, feasibility by
Fourier-Motzkin elimination, reachability by BFS, reductions by bipartition
enumeration, shortest paths by full path enumeration. Slow and obviously
correct is the point.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


def squares_mod(p: int) -> set[int]:
    return {(x * x) % p for x in range(1, p)}


def sieve(limit: int) -> list[int]:
    flags = [True] * (limit + 1)
    flags[0:2] = [False, False]
    for i in range(2, int(limit**0.5) + 1):
        if flags[i]:
            for j in range(i * i, limit + 1, i):
                flags[j] = False
    return [i for i, f in enumerate(flags) if f]


def fourier_motzkin_feasible(nvars: int, rows: list[tuple[dict[int, Fraction], Fraction]]) -> bool:
    """Exact feasibility of rows sum(c_i x_i) >= d by variable elimination."""
    work = [(dict(coeffs), Fraction(d)) for coeffs, d in rows]
    for k in range(nvars):
        lowers = []  # x_k >= expr
        uppers = []  # x_k <= expr
        passed = []
        for coeffs, d in work:
            c = coeffs.get(k, Fraction(0))
            rest = {i: v for i, v in coeffs.items() if i != k and v}
            if c > 0:
                lowers.append(({i: -v / c for i, v in rest.items()}, d / c))
            elif c < 0:
                uppers.append(({i: -v / c for i, v in rest.items()}, d / c))
            else:
                passed.append((rest, d))
        new_rows = list(passed)
        for (lc, ld) in lowers:
            for (uc, ud) in uppers:
                # ld + lc.x <= x_k <= ud + uc.x  collapses to (uc - lc).x >= ld - ud
                coeffs = dict(uc)
                for i, v in lc.items():
                    coeffs[i] = coeffs.get(i, Fraction(0)) - v
                new_rows.append((coeffs, ld - ud))
        # dedupe to keep growth in check
        seen = set()
        work = []
        for coeffs, d in new_rows:
            key = (frozenset((i, v) for i, v in coeffs.items() if v), d)
            if key not in seen:
                seen.add(key)
                work.append(({i: v for i, v in coeffs.items() if v}, d))
    return all(d <= 0 for coeffs, d in work)


def all_simple_paths(adj: dict[int, tuple[int, ...]], u: int, v: int, max_edges: int | None = None):
    """Yield every simple u-v path as a vertex tuple."""
    stack = [(u, (u,))]
    while stack:
        node, path = stack.pop()
        if node == v:
            yield path
            continue
        if max_edges is not None and len(path) > max_edges:
            continue
        for w in adj[node]:
            if w not in path:
                stack.append((w, path + (w,)))


def brute_force_reductions(vertices: list[int], paths: dict[tuple[int, int], tuple[int, ...]]):
    """Yield every valid bipartition (A, B) with the smallest vertex in A."""
    verts = sorted(vertices)
    rest = verts[1:]
    for bits in itertools.product((0, 1), repeat=len(rest)):
        side_a = {verts[0]} | {v for v, b in zip(rest, bits) if b == 0}
        side_b = {v for v, b in zip(rest, bits) if b == 1}
        if not side_b:
            continue
        ok = True
        for (u, v), path in paths.items():
            if u in side_a and v in side_a:
                if any(w not in side_a for w in path):
                    ok = False
                    break
            elif u in side_b and v in side_b:
                if any(w not in side_b for w in path):
                    ok = False
                    break
        if ok:
            yield frozenset(side_a), frozenset(side_b)


def brute_consistency(paths: dict[tuple[int, int], tuple[int, ...]]) -> bool:
    """Every contiguous subpath of every stored path is stored (up to reversal)."""
    canon = {}
    for key, path in paths.items():
        canon[key] = path if path[0] < path[-1] else path[::-1]
    for path in paths.values():
        k = len(path)
        for i in range(k):
            for j in range(i + 1, k):
                sub = path[i : j + 1]
                a, b = sub[0], sub[-1]
                key = (a, b) if a < b else (b, a)
                csub = sub if sub[0] < sub[-1] else sub[::-1]
                if canon.get(key) != csub:
                    return False
    return True


def reachable(vertices, arcs, start) -> set:
    succ = {v: [] for v in vertices}
    for u, v in arcs:
        succ[u].append(v)
    seen = {start}
    frontier = [start]
    while frontier:
        v = frontier.pop()
        for w in succ[v]:
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return seen


def brute_strongly_connected(vertices, arcs) -> bool:
    verts = list(vertices)
    if len(verts) <= 1:
        return True
    return all(reachable(verts, arcs, v) == set(verts) for v in verts)
