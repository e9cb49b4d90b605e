"""Line-oriented text formats for path systems, linear systems, and certificates.

pathsystem v1:

    pathsystem v1
    vertices <n> labels <l_1> ... <l_n>
    edge <u> <v>
    path <u> <v> : <u> <x_1> ... <v>

linsys v1:

    linsys v1
    var <name> ...
    row <d> : <coeff>*<name> ...
    tag <row-index> <free-text>

Certificates are `cert <row-index> <multiplier>` lines. Labels are decimal,
rationals are `p/q` (or plain integers), `#` starts a comment, and every
loader error carries the offending line number. Dump followed by load is
bit-exact for all three formats.
"""

from __future__ import annotations

from fractions import Fraction

from .graphs import Graph, make_graph
from .linear import LinearSystem, make_linear_system
from .pathsystems import PathSystem, make_path_system


class ParseError(ValueError):
    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


def _content_lines(text: str):
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line_no, line


def _ints(tokens: list[str], line_no: int) -> list[int]:
    out = []
    for t in tokens:
        try:
            out.append(int(t))
        except ValueError:
            raise ParseError(line_no, f"expected a decimal label, got {t!r}") from None
    return out


def dump_path_system(ps: PathSystem) -> str:
    g = ps.graph
    lines = ["pathsystem v1"]
    lines.append(
        "vertices %d labels %s" % (g.n, " ".join(str(v) for v in g.vertices))
    )
    for u, v in sorted(g.edges):
        lines.append(f"edge {u} {v}")
    for u, v in ps.pairs():
        path = " ".join(str(x) for x in ps.path(u, v))
        lines.append(f"path {u} {v} : {path}")
    return "\n".join(lines) + "\n"


def load_path_system(text: str) -> tuple[Graph, PathSystem]:
    """Parse the pathsystem v1 format, validating totality and path shape.

    Rejects duplicate pairs, missing pairs, non-edges inside paths and
    non-simple paths, each with the line number of the offense.
    """
    it = _content_lines(text)
    try:
        line_no, header = next(it)
    except StopIteration:
        raise ParseError(0, "empty input; expected 'pathsystem v1' header") from None
    if header != "pathsystem v1":
        raise ParseError(line_no, f"expected 'pathsystem v1' header, got {header!r}")

    labels: list[int] | None = None
    label_set: set[int] = set()
    edges: list[tuple[int, int]] = []
    paths: dict[tuple[int, int], tuple[tuple[int, ...], int]] = {}
    for line_no, line in it:
        tokens = line.split()
        kind = tokens[0]
        if kind == "vertices":
            if labels is not None:
                raise ParseError(line_no, "duplicate vertices line")
            if len(tokens) < 3 or tokens[2] != "labels":
                raise ParseError(line_no, "expected 'vertices <n> labels <l_1> ...'")
            n = _ints(tokens[1:2], line_no)[0]
            labels = _ints(tokens[3:], line_no)
            if len(labels) != n:
                raise ParseError(line_no, f"declared {n} vertices but listed {len(labels)} labels")
            if len(set(labels)) != len(labels):
                raise ParseError(line_no, "duplicate vertex label")
            label_set = set(labels)
        elif kind == "edge":
            if labels is None:
                raise ParseError(line_no, "edge before vertices line")
            uv = _ints(tokens[1:], line_no)
            if len(uv) != 2:
                raise ParseError(line_no, "expected 'edge <u> <v>'")
            for x in uv:
                if x not in label_set:
                    raise ParseError(line_no, f"edge uses unknown vertex {x}")
            if uv[0] == uv[1]:
                raise ParseError(line_no, f"self-loop at vertex {uv[0]}")
            edges.append((uv[0], uv[1]))
        elif kind == "path":
            if labels is None:
                raise ParseError(line_no, "path before vertices line")
            if ":" not in tokens:
                raise ParseError(line_no, "expected 'path <u> <v> : <vertices>'")
            sep = tokens.index(":")
            pair = _ints(tokens[1:sep], line_no)
            verts = _ints(tokens[sep + 1 :], line_no)
            if len(pair) != 2:
                raise ParseError(line_no, "expected two endpoint labels before ':'")
            u, v = pair
            if u == v:
                raise ParseError(line_no, "path endpoints must differ")
            for x in (u, v, *verts):
                if x not in label_set:
                    raise ParseError(line_no, f"path uses unknown vertex {x}")
            key = (u, v) if u < v else (v, u)
            if key in paths:
                raise ParseError(line_no, f"duplicate path for pair {key}")
            if len(verts) < 2 or {verts[0], verts[-1]} != {u, v}:
                raise ParseError(line_no, f"path body must run between {u} and {v}")
            if len(set(verts)) != len(verts):
                raise ParseError(line_no, "path repeats a vertex (not simple)")
            paths[key] = (tuple(verts), line_no)
        else:
            raise ParseError(line_no, f"unknown directive {kind!r}")

    if labels is None:
        raise ParseError(0, "missing vertices line")
    try:
        graph = make_graph(labels, edges)
    except ValueError as exc:
        raise ParseError(0, str(exc)) from None

    eset = graph.edges
    for key, (verts, line_no) in sorted(paths.items()):
        for x, y in zip(verts, verts[1:]):
            ek = (x, y) if x < y else (y, x)
            if ek not in eset:
                raise ParseError(line_no, f"path uses non-edge ({x}, {y})")
    n = graph.n
    if len(paths) != n * (n - 1) // 2:
        for u in graph.vertices:
            for v in graph.vertices:
                if u < v and (u, v) not in paths:
                    raise ParseError(0, f"pair ({u}, {v}) has no path")
    ps = make_path_system(graph, [verts for verts, _ in paths.values()])
    return graph, ps


def _frac(token: str, line_no: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(line_no, f"expected a rational p/q, got {token!r}") from None


def dump_linear_system(sys: LinearSystem) -> str:
    lines = ["linsys v1"]
    lines.append("var " + " ".join(sys.variables))
    for row in sys.rows:
        terms = " ".join(f"{row.coeffs[v]}*{v}" for v in sys.variables if v in row.coeffs)
        lines.append(f"row {row.bound} : {terms}".rstrip())
    for i, row in enumerate(sys.rows):
        if row.tag:
            lines.append(f"tag {i} {row.tag}")
    return "\n".join(lines) + "\n"


def load_linear_system(text: str) -> LinearSystem:
    it = _content_lines(text)
    try:
        line_no, header = next(it)
    except StopIteration:
        raise ParseError(0, "empty input; expected 'linsys v1' header") from None
    if header != "linsys v1":
        raise ParseError(line_no, f"expected 'linsys v1' header, got {header!r}")

    variables: list[str] = []
    rows: list[tuple[dict[str, Fraction], Fraction]] = []
    tags: dict[int, str] = {}
    for line_no, line in it:
        tokens = line.split()
        kind = tokens[0]
        if kind == "var":
            variables.extend(tokens[1:])
        elif kind == "row":
            if len(tokens) < 3 or tokens[2] != ":":
                raise ParseError(line_no, "expected 'row <d> : <coeff>*<name> ...'")
            bound = _frac(tokens[1], line_no)
            coeffs: dict[str, Fraction] = {}
            for term in tokens[3:]:
                if "*" not in term:
                    raise ParseError(line_no, f"expected '<coeff>*<name>', got {term!r}")
                cs, name = term.split("*", 1)
                if name in coeffs:
                    raise ParseError(line_no, f"variable {name} repeated in row")
                coeffs[name] = _frac(cs, line_no)
            rows.append((coeffs, bound))
        elif kind == "tag":
            idx = _ints(tokens[1:2], line_no)[0]
            tags[idx] = " ".join(tokens[2:])
        else:
            raise ParseError(line_no, f"unknown directive {kind!r}")

    try:
        return make_linear_system(
            variables,
            [(coeffs, bound, tags.get(i)) for i, (coeffs, bound) in enumerate(rows)],
        )
    except ValueError as exc:
        raise ParseError(0, str(exc)) from None


def dump_certificate(certificate: dict[int, Fraction]) -> str:
    lines = [f"cert {i} {certificate[i]}" for i in sorted(certificate)]
    return "\n".join(lines) + "\n"


def load_certificate(text: str) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for line_no, line in _content_lines(text):
        tokens = line.split()
        if tokens[0] != "cert" or len(tokens) != 3:
            raise ParseError(line_no, "expected 'cert <row-index> <multiplier>'")
        idx = _ints(tokens[1:2], line_no)[0]
        if idx in out:
            raise ParseError(line_no, f"duplicate certificate entry for row {idx}")
        out[idx] = _frac(tokens[2], line_no)
    return out
