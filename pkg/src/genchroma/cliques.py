"""Exact clique number and chromatic number for desk-scale graphs.

Both solvers are deterministic: candidate sets are bitmasks and the lowest
set bit is always taken first, so reruns produce identical witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass

from .degrees import DegreeStats
from .errors import SolverLimitError, TheoremFalsificationError
from .graphs import Graph, encode_graph6

CLIQUE_MAX_N = 64
CHROMA_MAX_N = 20


def clique_number(g: Graph, max_n: int = CLIQUE_MAX_N) -> tuple[int, frozenset[int]]:
    """Exact maximum clique size plus one witness clique.

    Branch and bound: candidates are greedily colored and scanned in
    reverse color order, so a branch is cut as soon as the coloring shows
    it cannot beat the incumbent.
    """
    n = g.n
    if n > max_n:
        raise SolverLimitError(f"clique solver limited to n <= {max_n}, got {n}")
    if n == 0:
        return 0, frozenset()
    adj = g.adj
    best: list[int] = []

    def color_sort(mask: int) -> tuple[list[int], list[int]]:
        # peel independent color classes; class index bounds the clique size
        order: list[int] = []
        bounds: list[int] = []
        color = 0
        rem = mask
        while rem:
            color += 1
            avail = rem
            while avail:
                v = (avail & -avail).bit_length() - 1
                order.append(v)
                bounds.append(color)
                rem &= ~(1 << v)
                avail &= ~((1 << v) | adj[v])
        return order, bounds

    def expand(cand: int, current: list[int]) -> None:
        nonlocal best
        order, bounds = color_sort(cand)
        for i in range(len(order) - 1, -1, -1):
            if len(current) + bounds[i] <= len(best):
                return
            v = order[i]
            current.append(v)
            sub = cand & adj[v]
            if sub:
                expand(sub, current)
            elif len(current) > len(best):
                best = current.copy()
            current.pop()
            cand &= ~(1 << v)

    expand((1 << n) - 1, [])
    return len(best), frozenset(best)


def chromatic_number(g: Graph, max_n: int = CHROMA_MAX_N) -> tuple[int, tuple[int, ...]]:
    """Exact chromatic number and a proper coloring using that many colors.

    Iterative deepening on the color count, starting at the clique number,
    with backtracking over vertices in descending-degree order.  A fresh
    color is only ever opened as the next unused index, which removes
    color-permutation symmetry.
    """
    n = g.n
    if n > max_n:
        raise SolverLimitError(f"coloring solver limited to n <= {max_n}, got {n}")
    if n == 0:
        return 0, ()
    degs = g.degrees()
    order = sorted(range(n), key=lambda v: (-degs[v], v))
    lb, _ = clique_number(g, max_n=max_n)
    lb = max(lb, 1)
    coloring = [-1] * n

    def place(pos: int, k: int, used: int) -> bool:
        if pos == n:
            return True
        v = order[pos]
        forbidden = set()
        m = g.adj[v]
        while m:
            u = (m & -m).bit_length() - 1
            if coloring[u] >= 0:
                forbidden.add(coloring[u])
            m &= m - 1
        for c in range(min(used + 1, k)):
            if c in forbidden:
                continue
            coloring[v] = c
            if place(pos + 1, k, max(used, c + 1)):
                return True
            coloring[v] = -1
        return False

    for k in range(lb, n + 1):
        for i in range(n):
            coloring[i] = -1
        if place(0, k, 0):
            return k, tuple(coloring)
    raise AssertionError("n colors always suffice")


@dataclass(frozen=True)
class CliqueBoundCheck:
    """Quadratic-mean lower bound on the clique number, decided exactly."""

    bound_ok: bool
    equality: bool


def clique_bound_check(g: Graph, omega: int) -> CliqueBoundCheck:
    """Test omega >= n/(n - quadratic mean) via w^2 sum d^2 <= n^3 (w-1)^2."""
    if not (0 <= omega <= g.n) or (g.n >= 1 and omega < 1):
        raise ValueError(f"inconsistent omega={omega} for n={g.n}")
    n = g.n
    sum_d2 = DegreeStats.from_graph(g).sum_d2
    lhs = omega * omega * sum_d2
    rhs = n**3 * (omega - 1) ** 2
    return CliqueBoundCheck(bound_ok=lhs <= rhs, equality=lhs == rhs)


@dataclass(frozen=True)
class ExtremalCheck:
    """Structure flags for graphs meeting the clique bound with equality."""

    bound_equality: bool
    regular: bool
    complete_multipartite: bool


def extremal_clique_classifier(
    g: Graph, omega: int, phi: int, chi: int
) -> ExtremalCheck:
    """Classify the equality case of the clique lower bound.

    A graph achieving equality must be regular and complete omega-partite
    with equal parts; structurally, its complement must be a disjoint
    union of omega cliques of size n/omega.  An equality graph failing
    that structure falsifies the classification and raises.
    """
    if not (1 <= phi <= omega <= chi <= g.n):
        raise ValueError(
            f"inconsistent invariants phi={phi}, omega={omega}, chi={chi}"
        )
    equality = clique_bound_check(g, omega).equality
    degs = g.degrees()
    regular = len(set(degs)) == 1
    multipartite = _is_balanced_complete_multipartite(g, omega)
    if equality and not (regular and multipartite):
        raise TheoremFalsificationError(
            "clique-bound equality without the extremal structure: "
            f"regular={regular}, complete_multipartite={multipartite}",
            graph6=encode_graph6(g),
        )
    return ExtremalCheck(equality, regular, multipartite)


def _is_balanced_complete_multipartite(g: Graph, parts: int) -> bool:
    """True iff the complement splits into `parts` equal-size cliques."""
    n = g.n
    if n == 0 or n % parts != 0:
        return False
    full = (1 << n) - 1
    comp = tuple(full & ~g.adj[v] & ~(1 << v) for v in range(n))
    seen = 0
    components = []
    for v in range(n):
        if (seen >> v) & 1:
            continue
        stack = [v]
        mask = 1 << v
        while stack:
            u = stack.pop()
            todo = comp[u] & ~mask
            mask |= todo
            while todo:
                w = (todo & -todo).bit_length() - 1
                stack.append(w)
                todo &= todo - 1
        seen |= mask
        components.append(mask)
    if len(components) != parts:
        return False
    size = n // parts
    for mask in components:
        if mask.bit_count() != size:
            return False
        m = mask
        while m:
            v = (m & -m).bit_length() - 1
            if comp[v] & mask != mask & ~(1 << v):
                return False
            m &= m - 1
    return True
