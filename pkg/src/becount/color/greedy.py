from __future__ import annotations

import heapq

from .arcs import ArcGraph
from .coloring import Coloring

PRIORITIZATIONS = ("low-degree", "high-degree", "dsatur")


def _smallest_free(taken: set[int]) -> int:
    c = 0
    while c in taken:
        c += 1
    return c


def greedy_color(a: ArcGraph, prioritization: str = "low-degree") -> Coloring:
    """Greedy proper coloring of the underlying undirected graph of ``a``.

    ``low-degree`` / ``high-degree`` color in ascending / descending degree
    order; ``dsatur`` picks the vertex with most distinct neighbour colors,
    then highest degree.  Remaining ties go to the smallest vertex id.
    """
    if prioritization not in PRIORITIZATIONS:
        raise ValueError(f"unknown prioritization {prioritization!r}")
    adj = a.underlying()
    n = a.n
    color = [-1] * n
    if prioritization == "dsatur":
        sat: list[set[int]] = [set() for _ in range(n)]
        heap = [(0, -len(adj[v]), v) for v in range(n)]
        heapq.heapify(heap)
        while heap:
            s, _, v = heapq.heappop(heap)
            if color[v] >= 0 or -s != len(sat[v]):
                continue
            c = _smallest_free(sat[v])
            color[v] = c
            for u in adj[v]:
                if color[u] < 0 and c not in sat[u]:
                    sat[u].add(c)
                    heapq.heappush(heap, (-len(sat[u]), -len(adj[u]), u))
    else:
        sign = 1 if prioritization == "low-degree" else -1
        for v in sorted(range(n), key=lambda v: (sign * len(adj[v]), v)):
            color[v] = _smallest_free({color[u] for u in adj[v]})
    return Coloring(color)
