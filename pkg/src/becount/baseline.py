"""Backtracking induced-subgraph-isomorphism counter.

This is the correctness oracle for the pipeline and the stand-in for a
VF2-style matcher in timing comparisons.  Counts are of *mappings*: a
motif with ``a`` automorphisms contributes ``a`` per placement.
"""

from __future__ import annotations

from itertools import permutations

import numpy as np

from .errors import GraphError
from .graph import Graph
from .kernels import backtrack_count

EXHAUSTIVE_LIMIT = 12


def search_order(H: Graph) -> list[int]:
    """Connectivity-first static order: start at a maximum-degree vertex,
    then repeatedly take the vertex with most already-ordered neighbours
    (ties: higher degree, then smaller id)."""
    start = max(range(H.n), key=lambda v: (H.degree(v), -v))
    order = [start]
    placed = {start}
    while len(order) < H.n:
        best = max(
            (v for v in range(H.n) if v not in placed),
            key=lambda v: (len(H.adj_sets[v] & placed), H.degree(v), -v),
        )
        order.append(best)
        placed.add(best)
    return order


def _plan(H: Graph):
    order = search_order(H)
    pos = {v: i for i, v in enumerate(order)}
    parent = np.full(H.n, -1, dtype=np.int64)
    for i, v in enumerate(order[1:], 1):
        back = [pos[u] for u in H.adjacency[v] if pos[u] < i]
        if not back:
            raise GraphError("motif must be connected")
        parent[i] = min(back)
    hadj = np.zeros((H.n, H.n), dtype=np.int8)
    for u, v in H.edges():
        hadj[pos[u], pos[v]] = hadj[pos[v], pos[u]] = 1
    hdeg = np.array([H.degree(v) for v in order], dtype=np.int64)
    return parent, hadj, hdeg


def baseline_count(g: Graph, H: Graph) -> int:
    """Number of injective maps ``V(H) -> V(g)`` with ``uv in E(H)`` iff the
    images are adjacent in ``g``."""
    if H.n < 2 or not H.is_connected():
        raise GraphError("motif must be connected with at least 2 vertices")
    if g.n < H.n:
        return 0
    indptr, indices = g.csr
    parent, hadj, hdeg = _plan(H)
    return int(backtrack_count(indptr, indices, parent, hadj, hdeg))


def exhaustive_count(g: Graph, H: Graph) -> int:
    """Brute force over all injective maps; hosts of at most 12 vertices."""
    if g.n > EXHAUSTIVE_LIMIT:
        raise GraphError(f"exhaustive_count is limited to {EXHAUSTIVE_LIMIT} host vertices")
    h_edges = [(u, v) for u in range(H.n) for v in range(u + 1, H.n)]
    total = 0
    for image in permutations(range(g.n), H.n):
        if all(H.has_edge(u, v) == g.has_edge(image[u], image[v]) for u, v in h_edges):
            total += 1
    return total


def iter_embeddings(g: Graph, H: Graph):
    """Yield every induced embedding as a tuple indexed by motif vertex.

    Plain-Python backtracking, meant for small instances in tests and for
    brute-force per-color-set counts.
    """
    order = search_order(H)
    pos = {v: i for i, v in enumerate(order)}
    earlier = [[order[j] for j in range(i)] for i in range(H.n)]
    image = [-1] * H.n
    used: set[int] = set()

    def extend(i):
        if i == H.n:
            yield tuple(image)
            return
        v = order[i]
        anchors = [u for u in H.adjacency[v] if pos[u] < i]
        cands = range(g.n) if not anchors else g.adjacency[image[anchors[0]]]
        for c in cands:
            if c in used:
                continue
            if all(H.has_edge(v, u) == g.has_edge(c, image[u]) for u in earlier[i]):
                image[v] = c
                used.add(c)
                yield from extend(i + 1)
                used.discard(c)
        image[v] = -1

    if g.n >= H.n:
        yield from extend(0)
