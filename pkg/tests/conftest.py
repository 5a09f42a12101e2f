"""Shared hypothesis strategies for random graphs and arrangements."""

from __future__ import annotations

import itertools

import hypothesis.strategies as st
from hypothesis import settings

from horicert import WeightedMultigraph

settings.register_profile("suite", deadline=None, derandomize=True)
settings.load_profile("suite")


@st.composite
def graphs(draw, min_vertices=1, max_vertices=6, min_weight=-2, max_weight=6, max_mult=3):
    n = draw(st.integers(min_vertices, max_vertices))
    verts = [f"v{i}" for i in range(1, n + 1)]
    weights = {v: draw(st.integers(min_weight, max_weight)) for v in verts}
    edges = []
    for u, v in itertools.combinations(verts, 2):
        m = draw(st.integers(0, max_mult))
        if m:
            edges.append((u, v, m))
    return WeightedMultigraph(weights, edges)


@st.composite
def multipartite_graphs(draw, max_classes=4, max_class_size=3, min_weight=2, max_weight=5, max_mult=3):
    """Completely multipartite graph: constant-0 inside classes, >= 1 across."""
    k = draw(st.integers(2, max_classes))
    sizes = [draw(st.integers(1, max_class_size)) for _ in range(k)]
    parts = []
    idx = 1
    for s in sizes:
        parts.append([f"v{idx + j}" for j in range(s)])
        idx += s
    weights = {v: draw(st.integers(min_weight, max_weight)) for p in parts for v in p}
    edges = []
    for p, q in itertools.combinations(parts, 2):
        for u, v in itertools.product(p, q):
            edges.append((u, v, draw(st.integers(1, max_mult))))
    return WeightedMultigraph(weights, edges)


@st.composite
def certifiable_multipartite_graphs(draw):
    """Multipartite instances meeting the wt >= 2 / rdeg >= 4 preconditions."""
    k = draw(st.integers(2, 5))
    sizes = [draw(st.integers(1, 4)) for _ in range(k)]
    # rdeg(v) = n - |class of v|, so the demand rdeg >= 4 everywhere is
    # exactly n - max(sizes) >= 4; pad with singleton classes until it holds.
    while sum(sizes) - max(sizes) < 4:
        sizes.append(1)
    parts = []
    idx = 1
    for s in sizes:
        parts.append([f"v{idx + j}" for j in range(s)])
        idx += s
    weights = {v: draw(st.integers(2, 5)) for p in parts for v in p}
    edges = []
    for p, q in itertools.combinations(parts, 2):
        for u, v in itertools.product(p, q):
            edges.append((u, v, draw(st.integers(1, 3))))
    return WeightedMultigraph(weights, edges)


def relabelled(g: WeightedMultigraph, permutation: dict[str, str]) -> WeightedMultigraph:
    return WeightedMultigraph(
        {permutation[v]: g.weight(v) for v in g.vertices},
        [(permutation[u], permutation[v], m) for u, v, m in g.edge_items()],
    )


__all__ = ["graphs", "multipartite_graphs", "certifiable_multipartite_graphs", "relabelled"]
