"""Greedy max-degree vertex sequences and their partition-bound checks.

A sequence starts at a maximum-degree vertex and repeatedly extends into
the common neighborhood of the chosen prefix, so the chosen vertices
always form a clique.  Two greedy rules are supported: 'alpha' picks the
vertex of maximum degree within the subgraph induced by the current pool,
'beta' picks the vertex of maximum degree in the whole graph.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace

from .degrees import DegreeStats
from .errors import TheoremFalsificationError
from .graphs import Graph, encode_graph6
from .partitions import _quad_bound_holds, is_delta_set

KINDS = ("alpha", "beta")


@dataclass(frozen=True)
class PrefixDeltaCheck:
    """Degree-bound hypothesis and conclusion for one prefix length r.

    delta_set_ok records whether the pool the r-th vertex was drawn from
    (the common neighborhood of the first r-1 vertices) is an admissible
    part; when it is, the graph splits into r admissible parts and the
    lower bound r >= n/(n - quadratic mean) must hold.
    """

    delta_set_ok: bool
    bound_ok: bool | None


@dataclass(frozen=True)
class PrefixSumCheck:
    """Degree-sum hypothesis and conclusion for one prefix length r.

    degree_sum_ok is the condition sum of the first r degrees <= (r-1)n;
    under it the same lower bound on r applies.  Beta sequences only.
    """

    degree_sum_ok: bool
    bound_ok: bool | None


@dataclass(frozen=True)
class SequenceTrace:
    """A built sequence with its per-prefix common neighborhoods.

    common_nbhds[i] is the common neighborhood of the first i+1 vertices.
    The check tuples are indexed by prefix length starting at r=2 and are
    None until corollary_checks has run.
    """

    kind: str
    vertices: tuple[int, ...]
    common_nbhds: tuple[frozenset[int], ...]
    delta_set_checks: tuple[PrefixDeltaCheck, ...] | None = None
    degree_sum_checks: tuple[PrefixSumCheck, ...] | None = None


def common_neighborhood(g: Graph, vs) -> frozenset[int]:
    """Intersection of the open neighborhoods of the listed vertices."""
    vertices = list(vs)
    if not vertices:
        raise ValueError("need at least one vertex")
    mask = (1 << g.n) - 1
    for v in vertices:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range")
        mask &= g.adj[v]
    return frozenset(_mask_bits(mask))


def _mask_bits(mask: int):
    while mask:
        yield (mask & -mask).bit_length() - 1
        mask &= mask - 1


def build_sequence(
    g: Graph,
    kind: str,
    max_len: int | None = None,
    rng: random.Random | None = None,
) -> SequenceTrace:
    """Grow a maximal greedy sequence (or stop at max_len).

    Ties are broken by ascending vertex index; pass rng for a randomized
    tie-break, useful to exercise the nondeterministic freedom the
    definitions allow.
    """
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    if g.n < 1:
        raise ValueError("need at least one vertex")
    degs = g.degrees()

    def pick(pool: int, score) -> int:
        candidates = list(_mask_bits(pool))
        top = max(score(v) for v in candidates)
        ties = [v for v in candidates if score(v) == top]
        return ties[0] if rng is None else rng.choice(ties)

    first = pick((1 << g.n) - 1, lambda v: degs[v])
    vertices = [first]
    pool = g.adj[first]
    nbhds = [frozenset(_mask_bits(pool))]
    while pool and (max_len is None or len(vertices) < max_len):
        if kind == "beta":
            v = pick(pool, lambda u: degs[u])
        else:
            v = pick(pool, lambda u: (g.adj[u] & pool).bit_count())
        vertices.append(v)
        pool &= g.adj[v]
        nbhds.append(frozenset(_mask_bits(pool)))
    return SequenceTrace(kind, tuple(vertices), tuple(nbhds))


def _revalidate(g: Graph, t: SequenceTrace) -> None:
    degs = g.degrees()
    if not t.vertices:
        raise ValueError("empty sequence")
    if len(set(t.vertices)) != len(t.vertices):
        raise ValueError("repeated vertex in sequence")
    if len(t.common_nbhds) != len(t.vertices):
        raise ValueError("trace length mismatch")
    if degs[t.vertices[0]] != max(degs):
        raise ValueError("first vertex does not have maximum degree")
    for i, v in enumerate(t.vertices):
        expected = common_neighborhood(g, t.vertices[: i + 1])
        if t.common_nbhds[i] != expected:
            raise ValueError(f"common neighborhood at prefix {i + 1} is inconsistent")
        if i == 0:
            continue
        pool = t.common_nbhds[i - 1]
        if v not in pool:
            raise ValueError(f"vertex {v} not in the prefix common neighborhood")
        if t.kind == "beta":
            if degs[v] != max(degs[u] for u in pool):
                raise ValueError(f"vertex {v} is not degree-maximal in its pool")
        else:
            pool_mask = 0
            for u in pool:
                pool_mask |= 1 << u
            score = (g.adj[v] & pool_mask).bit_count()
            best = max((g.adj[u] & pool_mask).bit_count() for u in pool)
            if score != best:
                raise ValueError(f"vertex {v} is not induced-degree-maximal in its pool")


def corollary_checks(g: Graph, t: SequenceTrace) -> SequenceTrace:
    """Evaluate the prefix bound checks and return a filled-in trace.

    For each prefix length r >= 2: if the pool of the r-th pick is an
    admissible part, or (beta only) the first r degrees sum to at most
    (r-1)n, then r is an upper bound on the partition number and must
    satisfy the quadratic-mean lower bound.  A prefix meeting a hypothesis
    but failing the bound falsifies the corresponding claim and raises.
    """
    _revalidate(g, t)
    stats = DegreeStats.from_graph(g)
    n, sum_d2 = g.n, stats.sum_d2
    degs = stats.degrees
    delta_checks: list[PrefixDeltaCheck] = []
    sum_checks: list[PrefixSumCheck] = []
    prefix_sum = degs[t.vertices[0]]
    for r in range(2, len(t.vertices) + 1):
        prefix_sum += degs[t.vertices[r - 1]]
        pool = t.common_nbhds[r - 2]  # nonempty: the r-th vertex came from it
        applicable = is_delta_set(g, pool)
        bound: bool | None = None
        if applicable:
            bound = _quad_bound_holds(r, n, sum_d2)
            if not bound:
                raise TheoremFalsificationError(
                    f"admissible-pool prefix r={r} violates the quadratic-mean bound",
                    graph6=encode_graph6(g),
                )
        delta_checks.append(PrefixDeltaCheck(applicable, bound))
        if t.kind == "beta":
            sum_ok = prefix_sum <= (r - 1) * n
            bound2: bool | None = None
            if sum_ok:
                bound2 = _quad_bound_holds(r, n, sum_d2)
                if not bound2:
                    raise TheoremFalsificationError(
                        f"degree-sum prefix r={r} violates the quadratic-mean bound",
                        graph6=encode_graph6(g),
                    )
            sum_checks.append(PrefixSumCheck(sum_ok, bound2))
    return replace(
        t,
        delta_set_checks=tuple(delta_checks),
        degree_sum_checks=tuple(sum_checks) if t.kind == "beta" else None,
    )
