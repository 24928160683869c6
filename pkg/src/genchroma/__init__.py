"""Exact degree-partition, clique and chromatic invariants of small graphs.

The central invariant, phi, is the least number of parts in a vertex
partition where every part V satisfies deg(v) <= n - |V| for each member.
The library computes phi (greedy solver plus exhaustive oracle), clique
and chromatic numbers, exact degree-mean lower bounds on all three, and
verifies the associated inequalities and equality characterizations in
integer arithmetic over graph ensembles.
"""

from .cliques import (
    chromatic_number,
    clique_bound_check,
    clique_number,
    extremal_clique_classifier,
)
from .degrees import (
    DegreeStats,
    elementary_symmetric,
    maclaurin_check,
    mean_degree,
    power_sum_identity_check,
    quadratic_mean_squared,
)
from .errors import (
    OracleMismatchError,
    ParseError,
    SolverLimitError,
    TheoremFalsificationError,
    VerificationError,
)
from .graphs import (
    FamilySpec,
    Graph,
    encode_graph6,
    generate,
    gnp,
    induced_subgraph,
    parse_edge_list,
    parse_graph6,
)
from .partitions import (
    DeltaPartition,
    EqualityVerdict,
    PhiResult,
    edge_bound_check,
    equality_classifier,
    is_delta_set,
    partition_inequality_check,
    phi_exact,
    phi_lower_bounds,
    phi_oracle,
)
from .reports import (
    BoundReport,
    SweepSpec,
    SweepSummary,
    analyze,
    emit_csv,
    oracle_scan,
    run_sweep,
)
from .sequences import (
    SequenceTrace,
    build_sequence,
    common_neighborhood,
    corollary_checks,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "DegreeStats",
    "DeltaPartition",
    "EqualityVerdict",
    "FamilySpec",
    "Graph",
    "OracleMismatchError",
    "ParseError",
    "PhiResult",
    "SequenceTrace",
    "SolverLimitError",
    "SweepSpec",
    "SweepSummary",
    "TheoremFalsificationError",
    "VerificationError",
    "analyze",
    "build_sequence",
    "chromatic_number",
    "clique_bound_check",
    "clique_number",
    "common_neighborhood",
    "corollary_checks",
    "edge_bound_check",
    "elementary_symmetric",
    "emit_csv",
    "encode_graph6",
    "equality_classifier",
    "extremal_clique_classifier",
    "generate",
    "gnp",
    "induced_subgraph",
    "is_delta_set",
    "maclaurin_check",
    "mean_degree",
    "oracle_scan",
    "parse_edge_list",
    "parse_graph6",
    "partition_inequality_check",
    "phi_exact",
    "phi_lower_bounds",
    "phi_oracle",
    "power_sum_identity_check",
    "quadratic_mean_squared",
    "run_sweep",
]
