"""Degree-bounded vertex partitions and the exact invariant built on them.

A part V of an n-vertex graph is admissible when every member's degree is
at most n - |V|; admissibility therefore depends only on the degree
multiset and the part size.  The invariant computed here (phi) is the
least number of admissible parts covering the vertex set.  Two independent
construction paths are provided: a greedy solver and an exhaustive oracle,
kept separate so each can check the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .degrees import DegreeStats, _sigma_or_zero
from .errors import SolverLimitError, TheoremFalsificationError
from .graphs import Graph, encode_graph6

ORACLE_MAX_N = 12


def is_delta_set(g: Graph, vs) -> bool:
    """True iff max degree over vs is at most n - |vs| (vs nonempty)."""
    members = set(vs)
    if not members:
        raise ValueError("the empty set is not admissible")
    for v in members:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range")
    return max(g.degree(v) for v in members) <= g.n - len(members)


@dataclass(frozen=True)
class DeltaPartition:
    """Ordered family of disjoint admissible parts covering all vertices."""

    parts: tuple[frozenset[int], ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.parts)

    @classmethod
    def of(cls, g: Graph, parts) -> "DeltaPartition":
        """Validate parts against g: nonempty, disjoint, covering, admissible."""
        frozen = tuple(frozenset(p) for p in parts)
        seen: set[int] = set()
        for part in frozen:
            if not part:
                raise ValueError("empty part in partition")
            if seen & part:
                raise ValueError("overlapping parts in partition")
            seen |= part
            if not is_delta_set(g, part):
                raise ValueError(f"part {sorted(part)} exceeds its degree bound")
        if seen != set(range(g.n)):
            raise ValueError("parts do not cover the vertex set")
        return cls(frozen)


@dataclass(frozen=True)
class PhiResult:
    phi: int
    witness: DeltaPartition
    method: str


def phi_exact(g: Graph) -> PhiResult:
    """Minimum part count, by greedy packing over descending degrees.

    Sort vertices by degree descending (ties by index).  The next unplaced
    vertex has the largest remaining degree d, so any part containing it
    holds at most n - d vertices; take exactly that many.  An exchange
    argument shows this is optimal, and the test suite additionally gates
    it against phi_oracle.
    """
    n = g.n
    if n == 0:
        raise ValueError("phi undefined for the empty vertex set")
    degs = g.degrees()
    order = sorted(range(n), key=lambda v: (-degs[v], v))
    parts = []
    i = 0
    while i < n:
        cap = n - degs[order[i]]
        parts.append(order[i : i + cap])
        i += cap
    witness = DeltaPartition.of(g, parts)
    return PhiResult(len(parts), witness, "greedy")


def phi_oracle(g: Graph, max_n: int = ORACLE_MAX_N) -> PhiResult:
    """Minimum part count by exhaustive set-partition enumeration.

    Enumerates restricted-growth strings in nondecreasing part-count order
    and returns the first partition whose parts all meet the degree bound.
    Partial assignments are cut off only when a part already violates its
    bound, which is sound because the bound tightens as a part grows.
    """
    n = g.n
    if n == 0:
        raise ValueError("phi undefined for the empty vertex set")
    if n > max_n:
        raise SolverLimitError(f"oracle limited to n <= {max_n}, got {n}")
    degs = g.degrees()
    for r in range(1, n + 1):
        blocks = _first_valid_partition(n, r, degs)
        if blocks is not None:
            witness = DeltaPartition.of(g, blocks)
            return PhiResult(r, witness, "brute_force")
    raise AssertionError("singleton partition is always admissible")


def _first_valid_partition(n: int, r: int, degs) -> list[list[int]] | None:
    blocks: list[list[int]] = []
    maxdeg: list[int] = []

    def place(v: int) -> list[list[int]] | None:
        if v == n:
            return [list(b) for b in blocks] if len(blocks) == r else None
        if len(blocks) + (n - v) < r:
            return None  # cannot open enough new blocks
        limit = min(len(blocks) + 1, r)
        for b in range(limit):
            opening = b == len(blocks)
            size = 1 if opening else len(blocks[b]) + 1
            top = degs[v] if opening else max(maxdeg[b], degs[v])
            if top > n - size:
                continue
            if opening:
                blocks.append([v])
                maxdeg.append(degs[v])
            else:
                blocks[b].append(v)
                prev = maxdeg[b]
                maxdeg[b] = top
            found = place(v + 1)
            if found is not None:
                return found
            if opening:
                blocks.pop()
                maxdeg.pop()
            else:
                blocks[b].pop()
                maxdeg[b] = prev
        return None

    return place(0)


class PhiLowerBounds(NamedTuple):
    """Least admissible part counts implied by the two degree means."""

    from_mean: int
    from_quad_mean: int


def _quad_bound_holds(r: int, n: int, sum_d2: int) -> bool:
    # r >= n / (n - quadratic mean) <=> r^2 * sum d^2 <= n^3 (r-1)^2
    return r * r * sum_d2 <= n**3 * (r - 1) ** 2


def _mean_bound_holds(r: int, n: int, sum_d: int) -> bool:
    # r >= n / (n - mean degree) <=> r * sum d <= n^2 (r-1)
    return r * sum_d <= n * n * (r - 1)


def phi_lower_bounds(stats: DegreeStats) -> PhiLowerBounds:
    """Exact ceilings of n/(n - mean) and n/(n - quadratic mean).

    Both are found by scanning r upward and testing the cross-multiplied
    integer inequality, so no irrational value is ever materialized.
    """
    n = stats.n
    if n == 0:
        raise ValueError("bounds undefined for n = 0")
    if any(d >= n for d in stats.degrees):
        raise ValueError("degree >= n is impossible in a simple graph")
    from_mean = next(r for r in range(1, n + 1) if _mean_bound_holds(r, n, stats.sum_d))
    from_quad = next(
        r for r in range(1, n + 1) if _quad_bound_holds(r, n, stats.sum_d2)
    )
    return PhiLowerBounds(from_mean, from_quad)


@dataclass(frozen=True)
class EqualityVerdict:
    """Outcome of the quadratic-mean bound equality characterization.

    equality_holds must coincide with divisibility_ok AND regular_ok; the
    classifier raises rather than return a verdict violating that.
    """

    equality_holds: bool
    divisibility_ok: bool
    regular_ok: bool


def equality_classifier(g: Graph, phi: int) -> EqualityVerdict:
    """Decide equality in the quadratic-mean bound and check its structure.

    Equality is phi^2 * sum d^2 = n^3 (phi-1)^2 exactly.  It is expected
    precisely when phi divides n and the graph is regular of degree
    n(phi-1)/phi; any graph where the two sides disagree falsifies the
    characterization and raises.
    """
    if phi != phi_exact(g).phi:
        raise ValueError(f"phi={phi} is not the partition number of this graph")
    n = g.n
    stats = DegreeStats.from_graph(g)
    equality = phi * phi * stats.sum_d2 == n**3 * (phi - 1) ** 2
    divisibility = n % phi == 0
    degs = set(stats.degrees)
    regular = len(degs) == 1 and phi * next(iter(degs)) == n * (phi - 1)
    if equality != (divisibility and regular):
        raise TheoremFalsificationError(
            "equality characterization violated: "
            f"equality={equality}, divisibility={divisibility}, regular={regular}",
            graph6=encode_graph6(g),
        )
    return EqualityVerdict(equality, divisibility, regular)


@dataclass(frozen=True)
class PartitionCheck:
    """Bounds evaluated on one admissible partition with r parts.

    sum_d2 is the graph's degree-square sum; square_cap is n*s2 + 3*s3
    over the part sizes, which equals sum of size*(n-size)^2.  All three
    flags hold for every valid partition.
    """

    sum_d2: int
    square_cap: int
    square_sum_ok: bool
    sigma2_ok: bool
    sigma3_ok: bool


def partition_inequality_check(g: Graph, p: DeltaPartition) -> PartitionCheck:
    """Verify the degree-square cap and the symmetric-mean size bounds."""
    DeltaPartition.of(g, p.parts)  # revalidate against this graph
    n = g.n
    sizes = p.sizes
    r = len(sizes)
    s2 = _sigma_or_zero(sizes, 2)
    s3 = _sigma_or_zero(sizes, 3)
    cap = n * s2 + 3 * s3
    direct = sum(size * (n - size) ** 2 for size in sizes)
    if cap != direct:
        raise AssertionError("power-sum identity failed on part sizes")
    sum_d2 = DegreeStats.from_graph(g).sum_d2
    return PartitionCheck(
        sum_d2=sum_d2,
        square_cap=cap,
        square_sum_ok=sum_d2 <= cap,
        sigma2_ok=2 * r * s2 <= n * n * (r - 1),
        sigma3_ok=6 * r * r * s3 <= n**3 * (r - 1) * (r - 2),
    )


@dataclass(frozen=True)
class EdgeBoundCheck:
    """Edge-count caps from the clique number and the partition number."""

    turan_ok: bool
    phi_bound_ok: bool


def edge_bound_check(g: Graph, phi: int, omega: int) -> EdgeBoundCheck:
    """Exact integer tests 2*k*e <= n^2 (k-1) for k = omega and k = phi."""
    if g.n < 1:
        raise ValueError("need at least one vertex")
    if not (1 <= phi <= omega <= g.n):
        raise ValueError(f"inconsistent invariants phi={phi}, omega={omega}")
    e = g.edge_count
    n2 = g.n * g.n
    return EdgeBoundCheck(
        turan_ok=2 * omega * e <= n2 * (omega - 1),
        phi_bound_ok=2 * phi * e <= n2 * (phi - 1),
    )
