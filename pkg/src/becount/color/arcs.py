"""Acyclic low-indegree orientations and transitive-fraternal augmentation.

Arcs point from ancestor to descendant, so a vertex's in-neighbours are the
vertices that must be its ancestors in any decomposition built on top.
"""

from __future__ import annotations

import heapq
import math
from collections import deque
from typing import Iterator

from ..errors import ColoringError
from ..graph import Graph


class ArcGraph:
    """Directed acyclic graph with one weight (iteration added) per arc."""

    def __init__(self, n: int):
        self.n = n
        self.inn: list[dict[int, int]] = [{} for _ in range(n)]
        self.out: list[set[int]] = [set() for _ in range(n)]
        self._num_arcs = 0

    def copy(self) -> "ArcGraph":
        other = ArcGraph(self.n)
        other.inn = [dict(d) for d in self.inn]
        other.out = [set(s) for s in self.out]
        other._num_arcs = self._num_arcs
        return other

    @property
    def num_arcs(self) -> int:
        return self._num_arcs

    def has_arc(self, u: int, v: int) -> bool:
        return u in self.inn[v]

    def adjacent(self, u: int, v: int) -> bool:
        return u in self.inn[v] or v in self.inn[u]

    def weight(self, u: int, v: int) -> int:
        return self.inn[v][u]

    def add_arc(self, u: int, v: int, weight: int = 1) -> bool:
        """Add ``u -> v`` unless the pair is already joined; returns whether
        an arc was added."""
        if u == v:
            raise ColoringError(f"arc {u}->{u} would be a loop")
        if self.adjacent(u, v):
            return False
        self.inn[v][u] = weight
        self.out[u].add(v)
        self._num_arcs += 1
        return True

    def reverse_arc(self, u: int, v: int) -> None:
        w = self.inn[v].pop(u)
        self.out[u].discard(v)
        self.inn[u][v] = w
        self.out[v].add(u)

    def arcs(self) -> Iterator[tuple[int, int, int]]:
        for v in range(self.n):
            for u in sorted(self.inn[v]):
                yield u, v, self.inn[v][u]

    def indegree(self, v: int) -> int:
        return len(self.inn[v])

    def max_indegree(self) -> int:
        return max((len(d) for d in self.inn), default=0)

    def underlying(self) -> list[set[int]]:
        adj = [set(d) for d in self.inn]
        for v in range(self.n):
            adj[v] |= self.out[v]
        return adj

    def topological_order(self) -> list[int]:
        """Kahn's algorithm, smallest ready id first; raises on a cycle."""
        indeg = [len(d) for d in self.inn]
        ready = [v for v in range(self.n) if indeg[v] == 0]
        heapq.heapify(ready)
        order = []
        while ready:
            v = heapq.heappop(ready)
            order.append(v)
            for u in self.out[v]:
                indeg[u] -= 1
                if indeg[u] == 0:
                    heapq.heappush(ready, u)
        if len(order) != self.n:
            raise ColoringError("arc graph contains a directed cycle")
        return order

    def is_acyclic(self) -> bool:
        try:
            self.topological_order()
        except ColoringError:
            return False
        return True

    @classmethod
    def from_order(cls, g: Graph, rank: list[int]) -> "ArcGraph":
        """Orient every edge from the endpoint with larger ``rank`` to the one
        with smaller ``rank``."""
        a = cls(g.n)
        for u, v in g.edges():
            if rank[u] > rank[v]:
                a.add_arc(u, v, 1)
            else:
                a.add_arc(v, u, 1)
        return a


def degeneracy_order(g: Graph) -> tuple[list[int], int]:
    """Smallest-last removal order (ties by smallest id) and the degeneracy."""
    resid = [g.degree(v) for v in range(g.n)]
    heap = [(resid[v], v) for v in range(g.n)]
    heapq.heapify(heap)
    removed = [False] * g.n
    order = []
    degen = 0
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != resid[v]:
            continue
        removed[v] = True
        order.append(v)
        degen = max(degen, d)
        for u in g.adjacency[v]:
            if not removed[u]:
                resid[u] -= 1
                heapq.heappush(heap, (resid[u], u))
    return order, degen


def orient_degeneracy(g: Graph) -> ArcGraph:
    """Orient each edge from the later-removed endpoint of a smallest-last
    ordering toward the earlier-removed one.  Max indegree = degeneracy."""
    order, _ = degeneracy_order(g)
    rank = [0] * g.n
    for i, v in enumerate(order):
        rank[v] = i
    return ArcGraph.from_order(g, rank)


def _fire(a: ArcGraph, g: Graph) -> None:
    """Chip-firing on in-arcs: a vertex whose indegree exceeds the threshold
    reverses all of its in-arcs.  The threshold starts at half the average
    degree and doubles after ``n`` consecutive firings that do not lower the
    total excess."""
    n = g.n
    avg = 2.0 * g.num_edges / n if n else 0.0
    t = max(1, math.ceil(avg / 2))
    limit = 50 * n + 100

    stall = 0
    firings = 0
    queue = deque(v for v in range(n) if len(a.inn[v]) > t)
    while queue and firings < limit:
        v = queue.popleft()
        x = len(a.inn[v])
        if x <= t:
            continue
        delta = -(x - t)  # change in total excess over the threshold
        for u in sorted(a.inn[v]):
            if len(a.inn[u]) >= t:
                delta += 1
            a.reverse_arc(u, v)
            if len(a.inn[u]) > t:
                queue.append(u)
        firings += 1
        if delta < 0:
            stall = 0
        else:
            stall += 1
            if stall >= n:
                t *= 2
                stall = 0


def orient_sandpile(g: Graph) -> ArcGraph:
    """Low-indegree acyclic orientation seeded by chip-firing.

    Firing starts from the degeneracy orientation.  The fired orientation is
    then made acyclic by peeling: repeatedly remove, among vertices whose
    residual degree is at most twice the degeneracy, the one with the fewest
    remaining fired out-neighbours (ties: lower residual degree, smaller id),
    and orient toward removed vertices.  Max indegree <= 2 * degeneracy.
    """
    if g.n == 0:
        return ArcGraph(0)
    fired = orient_degeneracy(g)
    cap = 2 * fired.max_indegree()
    _fire(fired, g)

    resid = [g.degree(v) for v in range(g.n)]
    out_left = [len(fired.out[v]) for v in range(g.n)]
    removed = [False] * g.n
    heap = [(out_left[v], resid[v], v) for v in range(g.n) if resid[v] <= cap]
    heapq.heapify(heap)
    rank = [0] * g.n
    step = 0
    while heap:
        o, r, v = heapq.heappop(heap)
        if removed[v] or o != out_left[v] or r != resid[v]:
            continue
        removed[v] = True
        rank[v] = step
        step += 1
        for u in g.adjacency[v]:
            if removed[u]:
                continue
            resid[u] -= 1
            if v in fired.out[u]:
                out_left[u] -= 1
            if resid[u] <= cap:
                heapq.heappush(heap, (out_left[u], resid[u], u))
    if step != g.n:
        raise ColoringError("sandpile peeling stalled")  # unreachable: cap >= degeneracy
    return ArcGraph.from_order(g, rank)


def augmentation_candidates(a: ArcGraph, mode: str, iteration: int):
    """Transitive arcs and (unoriented) fraternal pairs the next step adds."""
    truncated = mode == "dtfa"
    trans: set[tuple[int, int]] = set()
    frat: set[tuple[int, int]] = set()
    for c in range(a.n):
        ins = a.inn[c]
        if not ins:
            continue
        for x, wx in ins.items():
            for y in a.out[c]:
                if x in a.inn[y] or (truncated and wx + a.inn[y][c] > iteration):
                    continue
                trans.add((x, y))
        if len(ins) > 1:
            items = sorted(ins.items())
            for i, (x, wx) in enumerate(items):
                for y, wy in items[i + 1:]:
                    if truncated and wx + wy > iteration:
                        continue
                    if a.adjacent(x, y):
                        continue
                    frat.add((x, y))
    frat = {p for p in frat if p not in trans and (p[1], p[0]) not in trans}
    return trans, frat


def augment_step(a: ArcGraph, mode: str, iteration: int) -> ArcGraph:
    """One transitive-fraternal augmentation step (``tfa`` or ``dtfa``).

    Fraternal pairs are oriented along a topological order of ``a`` (earlier
    to later), which keeps the result acyclic.  New arcs get weight
    ``iteration``.  Returns a new graph; ``a`` is left untouched.
    """
    if mode not in ("tfa", "dtfa"):
        raise ValueError(f"unknown augmentation {mode!r}")
    if iteration < 2:
        raise ValueError("augmentation iterations start at 2")
    pos = {v: i for i, v in enumerate(a.topological_order())}
    trans, frat = augmentation_candidates(a, mode, iteration)
    out = a.copy()
    for x, y in sorted(trans):
        out.add_arc(x, y, iteration)
    for x, y in sorted(frat):
        if pos[x] < pos[y]:
            out.add_arc(x, y, iteration)
        else:
            out.add_arc(y, x, iteration)
    return out
