"""Simple undirected graphs: representation, parsing, encoding and generators.

Vertices are the integers 0..n-1. Adjacency is stored as one bitmask per
vertex, which keeps the exact solvers fast without extra dependencies.
Graphs are immutable after construction and safe to share between tasks.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError

FAMILIES = ("complete", "empty", "cycle", "path", "star", "turan", "gnp")

# graph6 size limits: single byte covers n <= 62, the 4-byte '~abc' header
# covers n <= 258047.  The 8-byte '~~' form is not accepted.
_G6_SMALL_MAX = 62
_G6_LONG_MAX = 258047


@dataclass(frozen=True)
class Graph:
    """Labeled simple graph: vertex count plus neighbor bitmasks.

    Invariants: no self-loops, symmetric adjacency, degree(v) <= n-1.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length must equal vertex count")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.adj):
            if mask >> self.n:
                raise ValueError(f"adjacency of {v} references vertices >= n")
            if (mask >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
            if mask & ~full:
                raise ValueError("negative adjacency mask")
        for v in range(self.n):
            m = self.adj[v]
            while m:
                u = (m & -m).bit_length() - 1
                if not (self.adj[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
                m &= m - 1

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        """Build a graph from (u, v) pairs; duplicates are collapsed."""
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return cls(n, tuple(masks))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self.adj)

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(_bits(self.adj[v]))

    def edges(self):
        """Yield edges (u, v) with u < v in lexicographic order."""
        for u in range(self.n):
            m = self.adj[u] >> (u + 1)
            while m:
                low = (m & -m).bit_length() - 1
                yield (u, u + 1 + low)
                m &= m - 1


def _bits(mask: int):
    while mask:
        yield (mask & -mask).bit_length() - 1
        mask &= mask - 1


@dataclass(frozen=True)
class FamilySpec:
    """Parameters for one generated test graph.

    family: one of FAMILIES.  r is required for turan; p and seed apply to
    gnp only (p is an exact rational so repeated sweeps are reproducible).
    """

    family: str
    n: int
    r: int | None = None
    p: Fraction | None = None
    seed: int | None = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        if self.family == "turan":
            if self.r is None or not (1 <= self.r <= self.n):
                raise ValueError("turan requires 1 <= r <= n")
        if self.family == "gnp":
            if self.p is None or not (0 <= self.p <= 1):
                raise ValueError("gnp requires probability in [0, 1]")


def generate(spec: FamilySpec) -> Graph:
    """Instantiate a graph family; deterministic for fixed parameters."""
    n = spec.n
    if spec.family == "empty":
        return Graph.from_edges(n, [])
    if spec.family == "complete":
        return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if spec.family == "path":
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if spec.family == "cycle":
        # C1 and C2 are not simple graphs
        if n in (1, 2):
            raise ValueError("cycle requires n = 0 or n >= 3")
        if n == 0:
            return Graph.from_edges(0, [])
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if spec.family == "star":
        if n < 1:
            raise ValueError("star requires n >= 1")
        return Graph.from_edges(n, [(0, i) for i in range(1, n)])
    if spec.family == "turan":
        return _turan(n, spec.r)  # type: ignore[arg-type]
    if spec.family == "gnp":
        return gnp(n, spec.p, spec.seed or 0)  # type: ignore[arg-type]
    raise AssertionError("unreachable")


def _turan(n: int, r: int) -> Graph:
    # balanced parts: the first n % r parts get the extra vertex
    base, extra = divmod(n, r)
    part_of = []
    for i in range(r):
        size = base + (1 if i < extra else 0)
        part_of.extend([i] * size)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if part_of[u] != part_of[v]
    ]
    return Graph.from_edges(n, edges)


def gnp(n: int, p: Fraction, seed: int) -> Graph:
    """Seeded G(n, p) with exact rational edge probability.

    Each pair (i, j), i < j, in lexicographic order consumes exactly one
    randrange draw, so identical (n, p, seed) always yield the same graph.
    """
    return gnp_from_rng(n, p, random.Random(seed))


def gnp_from_rng(n: int, p: Fraction, rng: random.Random) -> Graph:
    """G(n, p) drawn from an existing random stream (one draw per pair)."""
    if not (0 <= p <= 1):
        raise ValueError("probability must be in [0, 1]")
    num, den = p.numerator, p.denominator
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.randrange(den) < num:
                edges.append((i, j))
    return Graph.from_edges(n, edges)


def complete(n: int) -> Graph:
    return generate(FamilySpec("complete", n))


def empty(n: int) -> Graph:
    return generate(FamilySpec("empty", n))


def cycle(n: int) -> Graph:
    return generate(FamilySpec("cycle", n))


def path(n: int) -> Graph:
    return generate(FamilySpec("path", n))


def star(n: int) -> Graph:
    return generate(FamilySpec("star", n))


def turan(n: int, r: int) -> Graph:
    return generate(FamilySpec("turan", n, r=r))


def induced_subgraph(g: Graph, vs) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on vs, relabeled 0..|vs|-1 in ascending old order.

    Returns (subgraph, mapping) where mapping[new] = old vertex index.
    """
    order = sorted(set(vs))
    for v in order:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range")
    index = {old: new for new, old in enumerate(order)}
    edges = [
        (index[u], index[v])
        for u in order
        for v in order
        if u < v and g.has_edge(u, v)
    ]
    return Graph.from_edges(len(order), edges), tuple(order)


# -- graph6 ------------------------------------------------------------------


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (optionally prefixed with '>>graph6<<').

    Accepts the single-byte and 4-byte size headers; the 8-byte form is
    rejected.  Data characters must lie in the printable range 63..126,
    cover exactly the upper-triangle bit count, and use zero padding.
    """
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 input")
    for ch in s:
        if not (63 <= ord(ch) <= 126):
            raise ParseError(f"character {ch!r} outside graph6 range 63..126")
    n, body = _read_g6_size(s)
    need_bits = n * (n - 1) // 2
    need_chars = (need_bits + 5) // 6
    if len(body) < need_chars:
        raise ParseError(f"truncated graph6 body: need {need_chars} chars, got {len(body)}")
    if len(body) > need_chars:
        raise ParseError("trailing garbage after graph6 body")
    bits = 0
    for ch in body:
        bits = (bits << 6) | (ord(ch) - 63)
    pad = need_chars * 6 - need_bits
    if pad and bits & ((1 << pad) - 1):
        raise ParseError("nonzero padding bits in graph6 body")
    bits >>= pad
    masks = [0] * n
    # column-major over the upper triangle: pair (i, j), i < j, ordered by j
    pos = need_bits - 1
    for j in range(1, n):
        for i in range(j):
            if (bits >> pos) & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            pos -= 1
    return Graph(n, tuple(masks))


def _read_g6_size(s: str) -> tuple[int, str]:
    first = ord(s[0]) - 63
    if first != 63:
        return first, s[1:]
    # 4-byte header: '~' then 18 bits of n
    if len(s) < 2:
        raise ParseError("truncated graph6 size header")
    if ord(s[1]) == 126:
        raise ParseError("8-byte graph6 size header not supported")
    if len(s) < 4:
        raise ParseError("truncated graph6 size header")
    n = 0
    for ch in s[1:4]:
        n = (n << 6) | (ord(ch) - 63)
    if n <= _G6_SMALL_MAX:
        raise ParseError("non-canonical 4-byte header for small n")
    return n, s[4:]


def encode_graph6(g: Graph) -> str:
    """Encode as graph6; single-byte size for n <= 62, 4-byte up to 258047."""
    n = g.n
    if n <= _G6_SMALL_MAX:
        head = chr(n + 63)
    elif n <= _G6_LONG_MAX:
        head = "~" + "".join(chr(((n >> k) & 0x3F) + 63) for k in (12, 6, 0))
    else:
        raise ValueError(f"graph too large to encode: n={n}")
    bits = 0
    count = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            bits = (bits << 1) | ((col >> i) & 1)
            count += 1
    pad = (-count) % 6
    bits <<= pad
    count += pad
    chars = []
    for k in range(count - 6, -1, -6):
        chars.append(chr(((bits >> k) & 0x3F) + 63))
    return head + "".join(chars)


# -- edge-list text ----------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse 'n m' header plus m lines 'u v'; duplicate edges are collapsed."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ParseError("empty edge-list input")
    header = lines[0].split()
    if len(header) != 2:
        raise ParseError(f"bad header line {lines[0]!r}: expected 'n m'")
    n, m = (_int_token(t) for t in header)
    if n < 0 or m < 0:
        raise ParseError("negative counts in header")
    if len(lines) - 1 != m:
        raise ParseError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"bad edge line {ln!r}")
        u, v = (_int_token(t) for t in parts)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range in edge ({u},{v})")
        if u == v:
            raise ParseError(f"self-loop at vertex {u}")
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def _int_token(tok: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"non-integer token {tok!r}") from None
