"""Reductions of path systems and the exhaustive irreducibility search.

A reduction is a bipartition (A, B) of the vertices, both sides nonempty,
such that the stored path between any two same-side vertices stays on that
side. The search here decides existence exactly: closure propagation forces
interior vertices of same-side pairs onto that side, and a deterministic
backtracking search over the remaining choices either produces a reduction or
certifies that none exists, reporting how many branches it explored.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import edge_key
from .pathsystems import PathSystem


class SearchBudgetExceeded(RuntimeError):
    """Raised when the reduction search hits its branch budget."""

    def __init__(self, branches: int):
        self.branches = branches
        super().__init__(f"reduction search exceeded its budget after {branches} branches")


@dataclass(frozen=True)
class Reduction:
    """A valid bipartition: both sides nonempty, disjoint, covering, and
    closed under stored paths between same-side endpoints."""

    side_a: frozenset[int]
    side_b: frozenset[int]


@dataclass(frozen=True)
class CertifiedNone:
    """Exhaustive-search outcome: no reduction exists; branches were explored."""

    branches: int


@dataclass(frozen=True)
class PropagationResult:
    side_a: frozenset[int]
    side_b: frozenset[int]
    undecided: frozenset[int]
    conflict: int | None  # a vertex forced onto both sides, if any


def verify_reduction(
    ps: PathSystem, a: frozenset[int] | set[int], b: frozenset[int] | set[int]
) -> tuple[bool, tuple[int, int] | None]:
    """Check the reduction invariants; on failure return the first violating
    same-side pair in canonical order (None for structural failures such as
    an empty side or a bad partition)."""
    aset, bset = set(a), set(b)
    verts = set(ps.graph.vertices)
    if not aset or not bset:
        return False, None
    if aset & bset or aset | bset != verts:
        return False, None
    for side in (aset, bset):
        ordered = sorted(side)
        for i, u in enumerate(ordered):
            for v in ordered[i + 1 :]:
                for w in ps.paths[(u, v)]:
                    if w not in side:
                        return False, (u, v)
    return True, None


def _interiors(ps: PathSystem) -> dict[tuple[int, int], tuple[int, ...]]:
    return {key: path[1:-1] for key, path in ps.paths.items() if len(path) > 2}


def closure_propagate(
    ps: PathSystem,
    partial_a: set[int] | frozenset[int],
    partial_b: set[int] | frozenset[int],
) -> PropagationResult:
    """Close both sides under interior vertices of same-side pairs.

    Monotone (the returned sides contain the inputs) and idempotent. A
    conflict is a vertex forced onto both sides; propagation stops there.
    """
    if set(partial_a) & set(partial_b):
        raise ValueError("partial sides overlap")
    interiors = _interiors(ps)
    a, b = set(partial_a), set(partial_b)
    pending = [(v, 0) for v in sorted(a)] + [(v, 1) for v in sorted(b)]
    conflict = _propagate(interiors, a, b, pending)
    undecided = frozenset(set(ps.graph.vertices) - a - b)
    return PropagationResult(frozenset(a), frozenset(b), undecided, conflict)


def _propagate(
    interiors: dict[tuple[int, int], tuple[int, ...]],
    side_a: set[int],
    side_b: set[int],
    pending: list[tuple[int, int]],
) -> int | None:
    """Work queue of (vertex, side) additions; returns a conflict vertex or None."""
    while pending:
        v, side = pending.pop()
        mine, other = (side_a, side_b) if side == 0 else (side_b, side_a)
        for u in tuple(mine):
            if u == v:
                continue
            inter = interiors.get(edge_key(u, v))
            if not inter:
                continue
            for w in inter:
                if w in mine:
                    continue
                if w in other:
                    return w
                mine.add(w)
                pending.append((w, side))
    return None


def find_reduction(
    ps: PathSystem, budget: int | None = None
) -> Reduction | CertifiedNone:
    """Find a reduction or certify exhaustively that none exists.

    The smallest vertex is pinned to side A (the definition is symmetric in
    the sides). For each candidate seed s for side B in ascending order, every
    vertex below s is forced to A (s is B's minimum), propagation closes the
    sides, and the search branches on the smallest undecided vertex, side A
    first. Each tried assignment counts as one branch; if a budget is given,
    SearchBudgetExceeded is raised when it is hit. The returned reduction is
    the first in this canonical branch order, independent of scheduling.
    """
    verts = sorted(ps.graph.vertices)
    if len(verts) < 2:
        raise ValueError("reduction needs at least two vertices")
    interiors = _interiors(ps)
    counter = [0]

    def search(side_a: set[int], side_b: set[int], undecided: list[int]) -> Reduction | None:
        rest = [v for v in undecided if v not in side_a and v not in side_b]
        if not rest:
            return Reduction(frozenset(side_a), frozenset(side_b))
        v = rest[0]
        for side in (0, 1):
            counter[0] += 1
            if budget is not None and counter[0] > budget:
                raise SearchBudgetExceeded(counter[0])
            a2, b2 = set(side_a), set(side_b)
            (a2 if side == 0 else b2).add(v)
            if _propagate(interiors, a2, b2, [(v, side)]) is None:
                found = search(a2, b2, rest[1:])
                if found is not None:
                    return found
        return None

    for si in range(1, len(verts)):
        seed = verts[si]
        side_a = set(verts[:si])
        side_b = {seed}
        counter[0] += 1
        if budget is not None and counter[0] > budget:
            raise SearchBudgetExceeded(counter[0])
        pending = [(v, 0) for v in side_a] + [(seed, 1)]
        if _propagate(interiors, side_a, side_b, pending) is not None:
            continue
        found = search(side_a, side_b, verts[si + 1 :])
        if found is not None:
            return found
    return CertifiedNone(branches=counter[0])
