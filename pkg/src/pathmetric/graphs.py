"""Undirected simple graphs and directed graphs.

Paley graphs, the induced-subgraph and common-neighborhood queries the
verification pipeline needs, and a linear-time strongly-connected-components
decomposition for system digraphs. Graphs are immutable after construction;
neighbor sets iterate in sorted order so that every downstream search and
certificate is reproducible run to run.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .numtheory import PrimeField


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with integer-labeled vertices.

    No self-loops, no parallel edges; adjacency is symmetric and stored as
    sorted tuples.
    """

    vertices: tuple[int, ...]
    edges: frozenset[tuple[int, int]]
    adjacency: dict[int, tuple[int, ...]] = field(repr=False)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def __contains__(self, v: int) -> bool:
        return v in self.adjacency


def make_graph(vertices: Iterable[int], edges: Iterable[tuple[int, int]]) -> Graph:
    verts = tuple(sorted(set(vertices)))
    vset = set(verts)
    eset: set[tuple[int, int]] = set()
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if u not in vset or v not in vset:
            raise ValueError(f"edge ({u}, {v}) uses an unknown vertex")
        eset.add((u, v) if u < v else (v, u))
    adj: dict[int, set[int]] = {v: set() for v in verts}
    for u, v in eset:
        adj[u].add(v)
        adj[v].add(u)
    adjacency = {v: tuple(sorted(nb)) for v, nb in adj.items()}
    return Graph(vertices=verts, edges=frozenset(eset), adjacency=adjacency)


def edge_key(u: int, v: int) -> tuple[int, int]:
    """Canonical unordered-edge key (smaller label first)."""
    return (u, v) if u < v else (v, u)


def paley_graph(pf: PrimeField) -> Graph:
    """Graph on F_p with a ~ b iff a - b is a quadratic residue.

    Requires p = 1 mod 4, which makes -1 a residue and the relation symmetric.
    """
    p = pf.p
    if p % 4 != 1:
        raise ValueError(
            f"p={p} has p % 4 == 3: asymmetric residue relation, no Paley graph"
        )
    edges = []
    for a in range(p):
        for r in pf.residues:
            b = (a + r) % p
            if a < b:
                edges.append((a, b))
    return make_graph(range(p), edges)


def common_neighbors_excluding(g: Graph, x: int, y: int, z: int) -> frozenset[int]:
    """All common neighbors of x and y that are not neighbors of z."""
    if len({x, y, z}) != 3:
        raise ValueError(f"vertices must be pairwise distinct, got {x}, {y}, {z}")
    nx = set(g.neighbors(x))
    ny = set(g.neighbors(y))
    nz = set(g.neighbors(z))
    return frozenset((nx & ny) - nz)


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph on vertex set s with all edges of g inside s; labels preserved."""
    sset = set(s)
    unknown = sset - set(g.vertices)
    if unknown:
        raise ValueError(f"unknown vertices in subset: {sorted(unknown)}")
    edges = [(u, v) for (u, v) in g.edges if u in sset and v in sset]
    return make_graph(sset, edges)


@dataclass(frozen=True)
class Digraph:
    """Directed graph; arcs are ordered vertex pairs."""

    vertices: tuple[int, ...]
    arcs: frozenset[tuple[int, int]]
    successors: dict[int, tuple[int, ...]] = field(repr=False)


def make_digraph(vertices: Iterable[int], arcs: Iterable[tuple[int, int]]) -> Digraph:
    verts = tuple(sorted(set(vertices)))
    vset = set(verts)
    aset: set[tuple[int, int]] = set()
    for u, v in arcs:
        if u not in vset or v not in vset:
            raise ValueError(f"arc ({u}, {v}) uses an unknown vertex")
        aset.add((u, v))
    succ: dict[int, set[int]] = {v: set() for v in verts}
    for u, v in aset:
        succ[u].add(v)
    successors = {v: tuple(sorted(nb)) for v, nb in succ.items()}
    return Digraph(vertices=verts, arcs=frozenset(aset), successors=successors)


class SCCResult(NamedTuple):
    strongly_connected: bool
    components: tuple[frozenset[int], ...]


def strongly_connected(d: Digraph) -> SCCResult:
    """Whether every ordered vertex pair is joined by a directed path.

    Also returns the strongly connected components for diagnostics, sorted by
    smallest contained label. Iterative Tarjan, linear time.
    """
    index: dict[int, int] = {}
    lowlink: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    components: list[frozenset[int]] = []
    counter = 0

    for root in d.vertices:
        if root in index:
            continue
        # explicit work stack of (vertex, iterator position) to avoid recursion
        work = [(root, 0)]
        while work:
            v, pi = work.pop()
            if pi == 0:
                index[v] = lowlink[v] = counter
                counter += 1
                stack.append(v)
                on_stack.add(v)
            recurse = False
            succ = d.successors[v]
            for i in range(pi, len(succ)):
                w = succ[i]
                if w not in index:
                    work.append((v, i + 1))
                    work.append((w, 0))
                    recurse = True
                    break
                if w in on_stack:
                    lowlink[v] = min(lowlink[v], index[w])
            if recurse:
                continue
            if lowlink[v] == index[v]:
                comp = set()
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.add(w)
                    if w == v:
                        break
                components.append(frozenset(comp))
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])

    components.sort(key=min)
    ok = len(components) <= 1
    return SCCResult(ok, tuple(components))
