from __future__ import annotations

from hypothesis import strategies as st

from genchroma.graphs import Graph


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8):
    """Arbitrary labeled graph with n in [min_n, max_n]."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.integers(0, (1 << len(pairs)) - 1)) if pairs else 0
    edges = [pairs[k] for k in range(len(pairs)) if (mask >> k) & 1]
    return Graph.from_edges(n, edges)
