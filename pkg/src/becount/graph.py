"""Simple undirected graphs, edge-list I/O and motif construction."""

from __future__ import annotations

import io
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import IO, Iterable, Iterator, Sequence

import numpy as np

from .errors import GraphError, ParseError

MAX_MOTIF_ORDER = 8


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``.
    """

    def __init__(self, n: int, adjacency: Sequence[Sequence[int]]):
        if n < 0 or len(adjacency) != n:
            raise GraphError(f"adjacency has {len(adjacency)} rows for n={n}")
        rows = []
        for v, nbrs in enumerate(adjacency):
            row = tuple(sorted(nbrs))
            for i, u in enumerate(row):
                if u == v:
                    raise GraphError(f"self-loop at vertex {v}")
                if not 0 <= u < n:
                    raise GraphError(f"neighbour {u} of {v} out of range")
                if i and row[i - 1] == u:
                    raise GraphError(f"duplicate edge {v}-{u}")
            rows.append(row)
        self.n = n
        self.adjacency = tuple(rows)
        for v, row in enumerate(self.adjacency):
            for u in row:
                if v not in self.adj_sets[u]:
                    raise GraphError(f"asymmetric adjacency {v}->{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj: list[list[int]] = [[] for _ in range(n)]
        seen = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for n={n}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphError(f"duplicate edge {key[0]}-{key[1]}")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        return cls(n, adj)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [()] * n)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash((self.n, self.adjacency))

    def __len__(self) -> int:
        return self.n

    @cached_property
    def adj_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(row) for row in self.adjacency)

    @cached_property
    def num_edges(self) -> int:
        return sum(len(row) for row in self.adjacency) // 2

    @cached_property
    def degrees(self) -> np.ndarray:
        return np.fromiter((len(r) for r in self.adjacency), dtype=np.int64, count=self.n)

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """(indptr, indices) arrays for the numeric kernels."""
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum(self.degrees, out=indptr[1:])
        indices = np.fromiter(
            (u for row in self.adjacency for u in row), dtype=np.int64, count=int(indptr[-1])
        )
        return indptr, indices

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj_sets[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        for v, row in enumerate(self.adjacency):
            for u in row:
                if v < u:
                    yield v, u

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Return ``(sub, old_ids)`` where ``sub`` vertex ``i`` is ``old_ids[i]``."""
        old = sorted(set(vertices))
        index = {v: i for i, v in enumerate(old)}
        adj = [[index[u] for u in self.adjacency[v] if u in index] for v in old]
        return Graph(len(old), adj), old

    def components(self, vertices: Iterable[int] | None = None) -> list[list[int]]:
        """Connected components (sorted vertex lists) of the induced subgraph,
        ordered by smallest vertex."""
        if vertices is None:
            allowed = None
            order: Iterable[int] = range(self.n)
        else:
            allowed = set(vertices)
            order = sorted(allowed)
        seen = set()
        comps = []
        for s in order:
            if s in seen:
                continue
            seen.add(s)
            stack = [s]
            comp = []
            while stack:
                v = stack.pop()
                comp.append(v)
                for u in self.adjacency[v]:
                    if u not in seen and (allowed is None or u in allowed):
                        seen.add(u)
                        stack.append(u)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))


def _open_text(source) -> IO[str]:
    if isinstance(source, (str, Path)):
        return open(source, "r", encoding="utf-8")
    if isinstance(source, (bytes, bytearray)):
        return io.StringIO(source.decode("utf-8"))
    if isinstance(source, io.TextIOBase):
        return source
    return io.TextIOWrapper(source, encoding="utf-8")


def parse_edge_list(text: str) -> Graph:
    max_id = -1
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) > 2:
            raise ParseError(f"line {lineno}: expected one or two integers, got {raw!r}")
        try:
            ids = [int(p) for p in parts]
        except ValueError:
            raise ParseError(f"line {lineno}: not an integer in {raw!r}") from None
        if any(i < 0 for i in ids):
            raise ParseError(f"line {lineno}: negative vertex id in {raw!r}")
        max_id = max(max_id, *ids)
        if len(ids) == 2:
            edges.append((ids[0], ids[1]))
    return Graph.from_edges(max_id + 1, edges)


def load_edge_list(source) -> Graph:
    """Read an edge list from a path, bytes, or a text/binary stream.

    Two-integer lines are edges, single-integer lines declare a vertex, ``#``
    starts a comment line.  Self-loops and duplicate edges raise
    :class:`GraphError`; malformed lines raise :class:`ParseError`.
    """
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="utf-8") as fh:
            return parse_edge_list(fh.read())
    return parse_edge_list(_open_text(source).read())


def format_edge_list(g: Graph) -> str:
    lines = [f"{u} {v}" for u, v in g.edges()]
    lines.extend(str(v) for v in range(g.n) if not g.adjacency[v])
    return "".join(line + "\n" for line in lines)


def write_edge_list(g: Graph, dest) -> None:
    text = format_edge_list(g)
    if isinstance(dest, (str, Path)):
        Path(dest).write_text(text, encoding="utf-8")
    else:
        dest.write(text)


@dataclass(frozen=True)
class MotifSpec:
    """A motif request such as ``path:4`` or ``file:motif.txt``."""

    kind: str
    order: int | str

    KINDS = ("path", "star", "clique", "cycle", "file")

    @classmethod
    def parse(cls, text: str) -> "MotifSpec":
        kind, sep, arg = text.partition(":")
        kind = kind.strip().lower()
        if not sep or kind not in cls.KINDS:
            raise ParseError(f"bad motif {text!r}; expected kind:order with kind in {cls.KINDS}")
        if kind == "file":
            return cls(kind, arg)
        try:
            return cls(kind, int(arg))
        except ValueError:
            raise ParseError(f"bad motif order in {text!r}") from None

    def __str__(self) -> str:
        return f"{self.kind}:{self.order}"


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def star_graph(n: int) -> Graph:
    """Star on ``n`` vertices with centre 0."""
    return Graph.from_edges(n, ((0, i) for i in range(1, n)))


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def build_motif(spec: MotifSpec | str) -> Graph:
    if isinstance(spec, str):
        spec = MotifSpec.parse(spec)
    if spec.kind == "file":
        h = load_edge_list(spec.order)
    else:
        order = int(spec.order)
        if order < 2:
            raise GraphError(f"motif order must be >= 2, got {order}")
        if spec.kind == "cycle" and order < 3:
            raise GraphError("cycle motif needs order >= 3")
        h = {"path": path_graph, "star": star_graph,
             "clique": complete_graph, "cycle": cycle_graph}[spec.kind](order)
    if h.n < 2 or not h.is_connected():
        raise GraphError("motif must be connected with at least 2 vertices")
    return h
