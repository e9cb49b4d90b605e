"""Exact verification of path systems on graphs.

Builds the residue-based path systems on Paley graphs, decides metrizability
by exact rational feasibility with checkable witnesses and Farkas
certificates, and decides reducibility by exhaustive propagation-driven
search. A FastAPI service wraps the toolkit for long-running or multi-client
use; the bundled CLI is a thin client of that service.
"""

from .audits import audit_primes
from .graphs import (
    Digraph,
    Graph,
    common_neighbors_excluding,
    induced_subgraph,
    make_digraph,
    make_graph,
    paley_graph,
    strongly_connected,
)
from .linear import (
    GeneralSystem,
    LinearSystem,
    Verdict,
    general_system_digraph,
    general_to_linear,
    make_general_system,
    make_linear_system,
    verify_certificate,
)
from .metrizability import (
    LemmaVerdict,
    TwoStepWitness,
    build_metrizability_system,
    build_reduced_system,
    build_symmetrized_system,
    is_metrizable,
    solve_feasibility,
    strong_lemma_verdict,
    two_step_witness,
)
from .numtheory import (
    PrimeField,
    admissible_primes,
    character_sum,
    is_admissible,
    legendre,
    make_prime_field,
    max_nonresidue_run,
)
from .pathsystems import (
    PathSystem,
    RestrictionError,
    build_paley_system,
    check_cyclic_symmetry,
    is_consistent,
    make_path_system,
    petersen_fixture,
    restrict,
)
from .reducibility import (
    CertifiedNone,
    Reduction,
    SearchBudgetExceeded,
    closure_propagate,
    find_reduction,
    verify_reduction,
)

__version__ = "0.1.0"

__all__ = [
    "PrimeField",
    "legendre",
    "make_prime_field",
    "is_admissible",
    "admissible_primes",
    "max_nonresidue_run",
    "character_sum",
    "Graph",
    "Digraph",
    "make_graph",
    "make_digraph",
    "paley_graph",
    "common_neighbors_excluding",
    "strongly_connected",
    "induced_subgraph",
    "PathSystem",
    "make_path_system",
    "build_paley_system",
    "petersen_fixture",
    "is_consistent",
    "check_cyclic_symmetry",
    "restrict",
    "RestrictionError",
    "LinearSystem",
    "Verdict",
    "GeneralSystem",
    "make_linear_system",
    "make_general_system",
    "general_system_digraph",
    "general_to_linear",
    "verify_certificate",
    "build_metrizability_system",
    "build_symmetrized_system",
    "build_reduced_system",
    "solve_feasibility",
    "strong_lemma_verdict",
    "LemmaVerdict",
    "two_step_witness",
    "TwoStepWitness",
    "is_metrizable",
    "Reduction",
    "CertifiedNone",
    "SearchBudgetExceeded",
    "verify_reduction",
    "closure_propagate",
    "find_reduction",
    "audit_primes",
    "__version__",
]
