"""Per-graph bound reports, sweep orchestration and CSV emission.

analyze() runs every check the library offers on one graph and returns a
BoundReport; any violated claim aborts with a graph6 reproduction string
instead of producing a report with a false flag.  Sweeps are strictly
sequential and seeded, so a given SweepSpec always yields byte-identical
CSV output.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, fields
from fractions import Fraction

from .cliques import (
    CHROMA_MAX_N,
    CLIQUE_MAX_N,
    chromatic_number,
    clique_bound_check,
    clique_number,
    extremal_clique_classifier,
)
from .degrees import DegreeStats
from .errors import OracleMismatchError, SolverLimitError, TheoremFalsificationError
from .graphs import Graph, encode_graph6, gnp_from_rng
from .partitions import (
    ORACLE_MAX_N,
    edge_bound_check,
    equality_classifier,
    partition_inequality_check,
    phi_exact,
    phi_lower_bounds,
    phi_oracle,
)
from .sequences import build_sequence, corollary_checks

EXHAUSTIVE_MAX_N = 5


@dataclass(frozen=True)
class BoundReport:
    """All invariants and check outcomes for one graph.

    Field order is the frozen CSV column contract.  omega, chi and the
    checks depending on them are None when a solver limit was exceeded;
    every boolean that is present must be True.
    """

    graph_id: str
    n: int
    e: int
    sum_d: int
    sum_d2: int
    phi: int
    omega: int | None
    chi: int | None
    lb_mean: int
    lb_quad_mean: int
    quad_bound_equality: bool
    phi_edge_bound_ok: bool
    turan_edge_bound_ok: bool | None
    partition_square_ok: bool
    partition_sigma_ok: bool
    clique_bound_ok: bool | None
    clique_bound_equality: bool | None
    seq_deltaset_bound_ok: bool
    seq_degree_sum_bound_ok: bool
    witness_partition: tuple[int, ...]


CSV_COLUMNS = tuple(f.name for f in fields(BoundReport))


def analyze(
    g: Graph,
    clique_max_n: int = CLIQUE_MAX_N,
    chroma_max_n: int = CHROMA_MAX_N,
) -> BoundReport:
    """Compute every invariant and verify every bound on one graph."""
    if g.n < 1:
        raise ValueError("need at least one vertex")
    gid = encode_graph6(g)
    stats = DegreeStats.from_graph(g)
    pres = phi_exact(g)
    phi = pres.phi
    lbs = phi_lower_bounds(stats)
    verdict = equality_classifier(g, phi)
    pcheck = partition_inequality_check(g, pres.witness)

    omega: int | None
    chi: int | None
    try:
        omega, _ = clique_number(g, max_n=clique_max_n)
    except SolverLimitError:
        omega = None
    try:
        chi, _ = chromatic_number(g, max_n=chroma_max_n)
    except SolverLimitError:
        chi = None

    if not lbs.from_mean <= lbs.from_quad_mean <= phi:
        raise TheoremFalsificationError(
            f"lower-bound chain broken: {lbs} vs phi={phi}", graph6=gid
        )
    if omega is not None and phi > omega:
        raise TheoremFalsificationError(
            f"phi={phi} exceeds clique number {omega}", graph6=gid
        )
    if omega is not None and chi is not None and omega > chi:
        raise TheoremFalsificationError(
            f"clique number {omega} exceeds chromatic number {chi}", graph6=gid
        )

    if omega is not None:
        ebound = edge_bound_check(g, phi, omega)
        phi_edge_ok: bool = ebound.phi_bound_ok
        turan_ok: bool | None = ebound.turan_ok
        cbound = clique_bound_check(g, omega)
        clique_ok: bool | None = cbound.bound_ok
        clique_eq: bool | None = cbound.equality
        if chi is not None:
            extremal_clique_classifier(g, omega, phi, chi)
    else:
        phi_edge_ok = 2 * phi * g.edge_count <= g.n * g.n * (phi - 1)
        turan_ok = None
        clique_ok = None
        clique_eq = None

    alpha = corollary_checks(g, build_sequence(g, "alpha"))
    beta = corollary_checks(g, build_sequence(g, "beta"))
    seq_delta_ok = all(
        c.bound_ok for t in (alpha, beta) for c in t.delta_set_checks if c.delta_set_ok
    )
    seq_sum_ok = all(
        c.bound_ok for c in beta.degree_sum_checks if c.degree_sum_ok
    )

    report = BoundReport(
        graph_id=gid,
        n=g.n,
        e=g.edge_count,
        sum_d=stats.sum_d,
        sum_d2=stats.sum_d2,
        phi=phi,
        omega=omega,
        chi=chi,
        lb_mean=lbs.from_mean,
        lb_quad_mean=lbs.from_quad_mean,
        quad_bound_equality=verdict.equality_holds,
        phi_edge_bound_ok=phi_edge_ok,
        turan_edge_bound_ok=turan_ok,
        partition_square_ok=pcheck.square_sum_ok,
        partition_sigma_ok=pcheck.sigma2_ok and pcheck.sigma3_ok,
        clique_bound_ok=clique_ok,
        clique_bound_equality=clique_eq,
        seq_deltaset_bound_ok=seq_delta_ok,
        seq_degree_sum_bound_ok=seq_sum_ok,
        witness_partition=pres.witness.sizes,
    )
    for name in (
        "phi_edge_bound_ok",
        "turan_edge_bound_ok",
        "partition_square_ok",
        "partition_sigma_ok",
        "clique_bound_ok",
        "seq_deltaset_bound_ok",
        "seq_degree_sum_bound_ok",
    ):
        value = getattr(report, name)
        if value is False:
            raise TheoremFalsificationError(f"check {name} failed", graph6=gid)
    return report


@dataclass(frozen=True)
class SweepSpec:
    """One sweep: exhaustive over all labeled graphs, or seeded random.

    Exhaustive mode enumerates all 2^C(n,2) labeled graphs and is capped
    at n <= 5; random mode draws `count` G(n, p) samples from one seeded
    stream.  Graphs with n <= oracle_max_n are additionally gated against
    the exhaustive partition oracle.
    """

    mode: str
    n: int
    count: int | None = None
    p: Fraction | None = None
    seed: int | None = None
    oracle_max_n: int = EXHAUSTIVE_MAX_N

    def __post_init__(self) -> None:
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"unknown sweep mode {self.mode!r}")
        if self.n < 1:
            raise ValueError("sweep requires n >= 1")
        if self.oracle_max_n > ORACLE_MAX_N:
            raise ValueError(f"oracle gate limited to n <= {ORACLE_MAX_N}")
        if self.mode == "exhaustive" and self.n > EXHAUSTIVE_MAX_N:
            raise ValueError(
                f"exhaustive mode enumerates 2^C(n,2) graphs; capped at n <= {EXHAUSTIVE_MAX_N}"
            )
        if self.mode == "random":
            if self.count is None or self.count < 1:
                raise ValueError("random mode requires count >= 1")
            if self.p is None or not (0 <= self.p <= 1):
                raise ValueError("random mode requires probability in [0, 1]")
            if self.seed is None:
                raise ValueError("random mode requires a seed")


@dataclass(frozen=True)
class SweepSummary:
    graphs: int
    anomalies: int
    equality_hits: int
    oracle_checked: int
    min_gap: int | None
    mean_gap: Fraction | None


@dataclass(frozen=True)
class SweepResult:
    reports: tuple[BoundReport, ...]
    summary: SweepSummary


def all_labeled_graphs(n: int):
    """Every labeled graph on n vertices, in edge-mask order."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for mask in range(1 << len(pairs)):
        edges = [pairs[k] for k in range(len(pairs)) if (mask >> k) & 1]
        yield Graph.from_edges(n, edges)


def _sweep_graphs(spec: SweepSpec):
    if spec.mode == "exhaustive":
        yield from all_labeled_graphs(spec.n)
    else:
        rng = random.Random(spec.seed)
        for _ in range(spec.count or 0):
            yield gnp_from_rng(spec.n, spec.p, rng)  # type: ignore[arg-type]


def run_sweep(spec: SweepSpec) -> SweepResult:
    """Analyze every graph of the sweep; any anomaly aborts with a repro."""
    reports = []
    equality_hits = 0
    oracle_checked = 0
    gaps = []
    for g in _sweep_graphs(spec):
        report = analyze(g)
        if g.n <= spec.oracle_max_n:
            oracle = phi_oracle(g)
            if oracle.phi != report.phi:
                raise OracleMismatchError(
                    f"greedy phi={report.phi} but oracle found {oracle.phi}",
                    graph6=report.graph_id,
                )
            oracle_checked += 1
        equality_hits += report.quad_bound_equality
        gaps.append(report.phi - report.lb_quad_mean)
        reports.append(report)
    summary = SweepSummary(
        graphs=len(reports),
        anomalies=0,
        equality_hits=equality_hits,
        oracle_checked=oracle_checked,
        min_gap=min(gaps) if gaps else None,
        mean_gap=Fraction(sum(gaps), len(gaps)) if gaps else None,
    )
    return SweepResult(tuple(reports), summary)


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, tuple):
        return '"' + "+".join(str(x) for x in value) + '"'
    return '"' + str(value) + '"'


def emit_csv(reports) -> str:
    """Render reports as CSV: header, one row per report, input order.

    Booleans are 0/1, absent values empty, string-valued columns quoted.
    The output is byte-stable for a fixed report sequence.
    """
    lines = [",".join(CSV_COLUMNS)]
    for report in reports:
        lines.append(
            ",".join(_csv_cell(getattr(report, name)) for name in CSV_COLUMNS)
        )
    return "\n".join(lines) + "\n"


def oracle_scan(
    max_n: int,
    count: int = 200,
    p: Fraction = Fraction(1, 2),
    seed: int = 1,
) -> tuple[int, list[str]]:
    """Compare the greedy solver against the oracle over a standard corpus.

    Exhaustive over all labeled graphs for n <= min(5, max_n), then
    `count` seeded G(n, p) samples for each n in 6..max_n.  Returns the
    number of graphs checked and the graph6 strings of any mismatches.
    """
    if max_n < 1:
        raise ValueError("max-n must be >= 1")
    if max_n > ORACLE_MAX_N:
        raise ValueError(f"oracle limited to n <= {ORACLE_MAX_N}")
    mismatches = []
    checked = 0

    def check(g: Graph) -> None:
        nonlocal checked
        checked += 1
        if phi_exact(g).phi != phi_oracle(g).phi:
            mismatches.append(encode_graph6(g))

    for n in range(1, min(EXHAUSTIVE_MAX_N, max_n) + 1):
        for g in all_labeled_graphs(n):
            check(g)
    rng = random.Random(seed)
    for n in range(6, max_n + 1):
        for _ in range(count):
            check(gnp_from_rng(n, p, rng))
    return checked, mismatches
