"""Rational linear inequality systems in canonical form, with checkable verdicts.

A LinearSystem is a conjunction of rows `sum_i c_i x_i >= d` over named
variables, all coefficients exact rationals. A Verdict is either Feasible
with a witness assignment or Infeasible with a Farkas certificate: nonnegative
row multipliers whose combination has zero coefficients on every variable and
a strictly positive bound, i.e. the contradiction 0 >= positive.

verify_certificate re-checks a Verdict against the system from scratch; it is
deliberately independent of any solver state.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .graphs import Digraph, make_digraph

Rational = int | Fraction


@dataclass(frozen=True)
class Row:
    """One constraint: sum of coeffs[v] * v over variables >= bound."""

    coeffs: dict[str, Fraction]
    bound: Fraction
    tag: str | None = None


@dataclass(frozen=True)
class LinearSystem:
    variables: tuple[str, ...]
    rows: tuple[Row, ...]
    var_index: dict[str, int] = field(repr=False)

    @property
    def nrows(self) -> int:
        return len(self.rows)


def make_linear_system(
    variables: Sequence[str],
    rows: Iterable[tuple[Mapping[str, Rational], Rational, str | None]],
) -> LinearSystem:
    """Build a system from (coeffs, bound, tag) triples, validating names."""
    names = tuple(variables)
    if len(set(names)) != len(names):
        raise ValueError("duplicate variable name")
    for name in names:
        if not name or any(ch.isspace() for ch in name) or "*" in name:
            raise ValueError(f"variable name {name!r} contains whitespace or '*'")
    index = {v: i for i, v in enumerate(names)}
    built: list[Row] = []
    for coeffs, bound, tag in rows:
        clean = {}
        for v, c in coeffs.items():
            if v not in index:
                raise ValueError(f"row references undeclared variable {v!r}")
            c = Fraction(c)
            if c:
                clean[v] = c
        built.append(Row(coeffs=clean, bound=Fraction(bound), tag=tag))
    return LinearSystem(variables=names, rows=tuple(built), var_index=index)


@dataclass(frozen=True)
class Verdict:
    """Outcome of an exact feasibility decision.

    Exactly one of witness / certificate is set: a witness maps every variable
    to a rational satisfying all rows; a certificate maps row indices to
    nonnegative multipliers combining to 0 >= positive.
    """

    feasible: bool
    witness: dict[str, Fraction] | None = None
    certificate: dict[int, Fraction] | None = None

    def __post_init__(self):
        if self.feasible and (self.witness is None or self.certificate is not None):
            raise ValueError("feasible verdict needs a witness and no certificate")
        if not self.feasible and (self.certificate is None or self.witness is not None):
            raise ValueError("infeasible verdict needs a certificate and no witness")


def evaluate_row(row: Row, assignment: Mapping[str, Fraction]) -> Fraction:
    return sum((c * assignment[v] for v, c in row.coeffs.items()), Fraction(0))


def verify_certificate(sys: LinearSystem, verdict: Verdict) -> bool:
    """Exact re-check of a Verdict's defining invariants.

    Feasible: the witness covers every variable and satisfies every row.
    Infeasible: the multipliers are nonnegative, the combined coefficient of
    every variable is zero, and the combined bound is strictly positive.
    Dimension mismatches (unknown variables, row indices out of range) raise.
    """
    if verdict.feasible:
        witness = verdict.witness
        assert witness is not None
        missing = set(sys.variables) - set(witness)
        if missing:
            raise ValueError(f"witness misses variables: {sorted(missing)}")
        unknown = set(witness) - set(sys.variables)
        if unknown:
            raise ValueError(f"witness has unknown variables: {sorted(unknown)}")
        return all(evaluate_row(row, witness) >= row.bound for row in sys.rows)

    certificate = verdict.certificate
    assert certificate is not None
    for idx in certificate:
        if not 0 <= idx < sys.nrows:
            raise ValueError(f"certificate row index {idx} out of range")
    if any(mult < 0 for mult in certificate.values()):
        return False
    combined: dict[str, Fraction] = {}
    bound = Fraction(0)
    for idx, mult in certificate.items():
        row = sys.rows[idx]
        for v, c in row.coeffs.items():
            combined[v] = combined.get(v, Fraction(0)) + mult * c
        bound += mult * row.bound
    return all(c == 0 for c in combined.values()) and bound > 0


@dataclass(frozen=True)
class GeneralInequality:
    """One inequality a * x_i <= x_j + x_k with rational a >= 2."""

    a: Fraction
    i: int
    j: int
    k: int


@dataclass(frozen=True)
class GeneralSystem:
    """A system of inequalities a_m x_{i_m} <= x_{j_m} + x_{k_m}, all a_m >= 2,
    over variables indexed by a fixed label set (positivity is implicit)."""

    labels: tuple[int, ...]
    inequalities: tuple[GeneralInequality, ...]


def make_general_system(
    labels: Iterable[int],
    triples: Iterable[tuple[Rational, int, int, int]],
) -> GeneralSystem:
    labs = tuple(sorted(set(labels)))
    lset = set(labs)
    ineqs = []
    for a, i, j, k in triples:
        a = Fraction(a)
        if a < 2:
            raise ValueError(f"coefficient {a} < 2 in inequality at x_{i}")
        for v in (i, j, k):
            if v not in lset:
                raise ValueError(f"inequality references undeclared variable {v}")
        ineqs.append(GeneralInequality(a=a, i=i, j=j, k=k))
    return GeneralSystem(labels=labs, inequalities=tuple(ineqs))


def general_system_digraph(gs: GeneralSystem) -> Digraph:
    """The digraph with an arc from i to j and from i to k per inequality."""
    arcs = []
    for q in gs.inequalities:
        arcs.append((q.i, q.j))
        arcs.append((q.i, q.k))
    return make_digraph(gs.labels, arcs)


def general_to_linear(gs: GeneralSystem) -> LinearSystem:
    """Canonical LinearSystem form: x >= 1 per variable plus the inequalities
    rewritten as x_j + x_k - a x_i >= 0 (positivity normalized to >= 1)."""
    names = tuple(f"x_{v}" for v in gs.labels)
    rows: list[tuple[dict[str, Rational], Rational, str | None]] = []
    for v in gs.labels:
        rows.append(({f"x_{v}": 1}, 1, f"positivity x_{v}"))
    for q in gs.inequalities:
        coeffs: dict[str, Rational] = {}
        for name, c in ((f"x_{q.j}", Fraction(1)), (f"x_{q.k}", Fraction(1)), (f"x_{q.i}", -q.a)):
            coeffs[name] = coeffs.get(name, Fraction(0)) + c
        rows.append((coeffs, 0, f"{q.a}*x_{q.i} <= x_{q.j} + x_{q.k}"))
    return make_linear_system(names, rows)
