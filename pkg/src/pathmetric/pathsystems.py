"""Path systems: one simple path per unordered vertex pair.

Builders for the residue-based system on Paley graphs and the Petersen
fixture, the consistency check (every subpath of a stored path is itself
stored), cyclic symmetry under rotation, and restriction to vertex subsets.

Paths are tuples of vertices, stored with the smaller endpoint first; a path
and its reversal are the same object of study, and all comparisons here treat
them that way.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .graphs import Graph, edge_key, induced_subgraph, make_graph, paley_graph
from .numtheory import PrimeField, is_admissible

Path = tuple[int, ...]


class RestrictionError(ValueError):
    """Raised when a vertex subset is not closed under the stored paths."""

    def __init__(self, pair: tuple[int, int], escaping: int):
        self.pair = pair
        self.escaping = escaping
        super().__init__(
            f"path for pair {pair} leaves the subset at vertex {escaping}"
        )


def _canonical(path: Path) -> Path:
    return path if path[0] < path[-1] else path[::-1]


@dataclass(frozen=True)
class PathSystem:
    """A total path system: exactly one simple path per unordered vertex pair."""

    graph: Graph
    paths: dict[tuple[int, int], Path] = field(repr=False)

    def path(self, u: int, v: int) -> Path:
        """Stored path between u and v, oriented from u to v."""
        if u == v:
            raise ValueError("no path is stored for a single vertex")
        p = self.paths[edge_key(u, v)]
        return p if p[0] == u else p[::-1]

    def pairs(self) -> list[tuple[int, int]]:
        return sorted(self.paths)

    def __len__(self) -> int:
        return len(self.paths)


def make_path_system(graph: Graph, paths: Iterable[Path]) -> PathSystem:
    """Validate and index one path per pair; paths may be given in either orientation."""
    stored: dict[tuple[int, int], Path] = {}
    for raw in paths:
        path = tuple(raw)
        if len(path) < 2:
            raise ValueError(f"path {path} has fewer than two vertices")
        if len(set(path)) != len(path):
            raise ValueError(f"path {path} repeats a vertex")
        for x, y in zip(path, path[1:]):
            if not graph.has_edge(x, y):
                raise ValueError(f"path {path} uses non-edge ({x}, {y})")
        key = edge_key(path[0], path[-1])
        if key in stored:
            raise ValueError(f"duplicate path for pair {key}")
        stored[key] = _canonical(path)
    n = graph.n
    if len(stored) != n * (n - 1) // 2:
        for u in graph.vertices:
            for v in graph.vertices:
                if u < v and (u, v) not in stored:
                    raise ValueError(f"pair ({u}, {v}) has no path")
    return PathSystem(graph=graph, paths=stored)


def build_paley_system(pf: PrimeField) -> PathSystem:
    """The residue-based path system on the Paley graph of an admissible prime.

    For a pair {a, b} with difference d = b - a (mod p):
      d a residue         -> the edge (a, b)
      d = 3               -> (a, a+1, a+2, b)
      d a non-residue, not +-3 -> (a, (a+b)/2, b) with field division by 2

    A pair whose difference is -3 in one orientation has difference 3 in the
    other, so the second rule covers it. Admissibility (p > 5, -1 a residue,
    2 and 3 non-residues) makes every rule produce edges of the graph.
    """
    p = pf.p
    if not is_admissible(p):
        raise ValueError(
            f"p={p} is not admissible: the construction needs a prime p > 5 "
            "with -1 a residue and 2, 3 non-residues"
        )
    graph = paley_graph(pf)
    inv2 = pow(2, p - 2, p)
    paths: list[Path] = []
    for a in range(p):
        for b in range(a + 1, p):
            d = (b - a) % p
            if d in pf.residues:
                paths.append((a, b))
            elif d == 3:
                paths.append((a, (a + 1) % p, (a + 2) % p, b))
            elif d == p - 3:
                paths.append((b, (b + 1) % p, (b + 2) % p, a))
            else:
                paths.append((a, ((a + b) * inv2) % p, b))
    return make_path_system(graph, paths)


PETERSEN_EXCEPTIONAL_PATHS: dict[tuple[int, int], Path] = {
    (2, 8): (2, 1, 6, 8),
    (1, 7): (1, 5, 10, 7),
    (3, 9): (3, 2, 7, 9),
    (4, 10): (4, 3, 8, 10),
    (5, 6): (5, 4, 9, 6),
}


def petersen_fixture() -> tuple[Graph, PathSystem]:
    """The Petersen graph on 1..10 with its reducible non-metrizable path system.

    Outer cycle 1-2-3-4-5, spokes i <-> i+5, inner 5-cycle 6-8-10-7-9. Every
    adjacent pair gets its edge and every other pair its unique length-2 path,
    except the five exceptional pairs listed in PETERSEN_EXCEPTIONAL_PATHS,
    which take the bent length-3 routes (read off the colored edges of the
    source figure; the accompanying text does not list them explicitly).
    """
    outer = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    inner = [(6, 8), (8, 10), (10, 7), (7, 9), (9, 6)]
    graph = make_graph(range(1, 11), outer + spokes + inner)
    paths: list[Path] = []
    for u in range(1, 11):
        for v in range(u + 1, 11):
            if (u, v) in PETERSEN_EXCEPTIONAL_PATHS:
                paths.append(PETERSEN_EXCEPTIONAL_PATHS[(u, v)])
            elif graph.has_edge(u, v):
                paths.append((u, v))
            else:
                common = set(graph.neighbors(u)) & set(graph.neighbors(v))
                mid = common.pop()
                paths.append((u, mid, v))
    return graph, make_path_system(graph, paths)


class ConsistencyResult(NamedTuple):
    ok: bool
    violation: tuple[Path, int, int, Path, Path] | None
    """(offending path, x, y, its x-y subpath, the stored x-y path)"""


def is_consistent(ps: PathSystem) -> ConsistencyResult:
    """Whether every subpath of a stored path is the stored path for its endpoints.

    Subpaths are compared up to reversal. On failure, reports the first
    violation in canonical pair order.
    """
    for key in ps.pairs():
        path = ps.paths[key]
        k = len(path)
        for i in range(k):
            for j in range(i + 1, k):
                sub = path[i : j + 1]
                stored = ps.paths.get(edge_key(sub[0], sub[-1]))
                if stored is None or _canonical(sub) != stored:
                    return ConsistencyResult(False, (path, sub[0], sub[-1], sub, stored))
    return ConsistencyResult(True, None)


def check_cyclic_symmetry(ps: PathSystem) -> bool:
    """Whether the system is invariant under every rotation a -> a + x mod p.

    Requires field-element labels 0..p-1 (as produced by build_paley_system);
    rotated paths are looked up up to reversal. Only the generator shift
    x = 1 is tested: rotation by 1 generates the whole cyclic group, and a
    finite path set mapped into itself by a bijection is closed under its
    inverse and hence under every power.
    """
    n = ps.graph.n
    if ps.graph.vertices != tuple(range(n)):
        raise ValueError("cyclic symmetry needs vertices labeled 0..p-1")
    stored = set(ps.paths.values())
    for path in ps.paths.values():
        shifted = tuple((a + 1) % n for a in path)
        if _canonical(shifted) not in stored:
            return False
    return True


def restrict(ps: PathSystem, s: Iterable[int]) -> PathSystem:
    """The path system induced on s, if every path between members stays in s.

    Raises RestrictionError naming an escaping pair otherwise; empty subsets
    are rejected.
    """
    sset = set(s)
    if not sset:
        raise ValueError("cannot restrict to an empty vertex set")
    unknown = sset - set(ps.graph.vertices)
    if unknown:
        raise ValueError(f"unknown vertices in subset: {sorted(unknown)}")
    kept: list[Path] = []
    for u, v in ps.pairs():
        if u in sset and v in sset:
            path = ps.paths[(u, v)]
            for w in path:
                if w not in sset:
                    raise RestrictionError((u, v), w)
            kept.append(path)
    return make_path_system(induced_subgraph(ps.graph, sset), kept)
