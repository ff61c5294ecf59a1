"""Color-set enumeration with prefix reuse, and treedepth decompositions
obtained from centered colorings by recursive center elimination."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .color.coloring import Coloring
from .errors import DecompositionError
from .graph import Graph
from .kernels import centered_forest, color_set_components


def enumerate_color_sets(k: int, h: int) -> Iterator[tuple[int, ...]]:
    """All color sets of 1..h colors out of ``0..k-1`` in DFS order.

    Each set is followed by its extensions with larger colors, e.g. for
    ``k=3, h=2``: (0,), (0,1), (0,2), (1,), (1,2), (2,).
    """
    if not 1 <= h <= k:
        raise ValueError(f"need 1 <= h <= k, got h={h}, k={k}")
    stack = [0]
    while stack:
        c = stack[-1]
        if c >= k:
            stack.pop()
            if stack:
                stack[-1] += 1
            continue
        yield tuple(stack)
        if len(stack) < h and c + 1 < k:
            stack.append(c + 1)
        else:
            stack[-1] += 1


class ColorSetCursor:
    """Walks color sets in DFS order, keeping the component partition of
    every prefix on the stack so an extension only unions in one class.

    ``advance()`` moves to the next set and returns it (``None`` when done);
    :meth:`components` then lists the components of the current set.
    """

    def __init__(self, g: Graph, phi: Coloring, h: int):
        if phi.n != g.n:
            raise ValueError("coloring and graph sizes differ")
        self.g = g
        self.phi = phi
        self.k = phi.size
        self.h = min(h, self.k)
        self.prefix: list[int] = []
        self._parents: list[list[int]] = []  # one union-find array per prefix level
        self._started = False

    def _find(self, par: list[int], v: int) -> int:
        root = v
        while par[root] != root:
            root = par[root]
        while par[v] != root:
            par[v], v = root, par[v]
        return root

    def _push(self, c: int) -> None:
        par = list(self._parents[-1]) if self._parents else [-1] * self.g.n
        cls = self.phi.classes[c]
        for v in cls:
            par[v] = v
        adj = self.g.adjacency
        for v in cls:
            for u in adj[v]:
                if par[u] >= 0:
                    ru, rv = self._find(par, u), self._find(par, v)
                    if ru != rv:
                        par[max(ru, rv)] = min(ru, rv)
        self.prefix.append(c)
        self._parents.append(par)

    def _pop(self) -> int:
        self._parents.pop()
        return self.prefix.pop()

    def advance(self) -> tuple[int, ...] | None:
        if self.h < 1:
            return None
        if not self._started:
            self._started = True
            self._push(0)
            return tuple(self.prefix)
        last = self.prefix[-1]
        if len(self.prefix) < self.h and last + 1 < self.k:
            self._push(last + 1)
            return tuple(self.prefix)
        while self.prefix:
            last = self._pop()
            if last + 1 < self.k:
                self._push(last + 1)
                return tuple(self.prefix)
        return None

    def __iter__(self) -> Iterator[tuple[tuple[int, ...], list[list[int]]]]:
        while (s := self.advance()) is not None:
            yield s, self.components()

    def components(self) -> list[list[int]]:
        """Components of the current set, ascending by smallest vertex."""
        if not self.prefix:
            return []
        par = self._parents[-1]
        groups: dict[int, list[int]] = {}
        for v in sorted(v for c in self.prefix for v in self.phi.classes[c]):
            groups.setdefault(self._find(par, v), []).append(v)
        return sorted(groups.values(), key=lambda comp: comp[0])


def induced_components(g: Graph, phi: Coloring, colors: Sequence[int],
                       cursor: ColorSetCursor | None = None) -> list[list[int]]:
    """Components of the subgraph induced by the classes in ``colors``.

    With a cursor the partition comes from its cached prefix, and ``colors``
    must equal the cursor's current set.
    """
    if cursor is not None:
        if tuple(colors) != tuple(cursor.prefix):
            raise DecompositionError(
                f"cursor is at {tuple(cursor.prefix)}, asked for {tuple(colors)}"
            )
        return cursor.components()
    verts = [v for c in sorted(set(colors)) for v in phi.classes[c]]
    return g.components(verts) if verts else []


@dataclass(frozen=True)
class ColorSetBatch:
    """Components of at least ``min_size`` vertices for every color set that
    has one, as produced by :func:`color_set_batches`."""

    visited: int
    sets: np.ndarray
    set_ptr: np.ndarray
    comp_ptr: np.ndarray
    comp_verts: np.ndarray

    def __len__(self) -> int:
        return int(self.sets.shape[0])

    def color_set(self, i: int) -> tuple[int, ...]:
        return tuple(int(c) for c in self.sets[i] if c >= 0)

    def components(self, i: int) -> list[np.ndarray]:
        return [self.comp_verts[self.comp_ptr[j]:self.comp_ptr[j + 1]]
                for j in range(self.set_ptr[i], self.set_ptr[i + 1])]


def color_set_batches(g: Graph, phi: Coloring, h: int, min_size: int = 1,
                      exact: bool = False) -> ColorSetBatch:
    """Same walk as :class:`ColorSetCursor` run in one compiled pass.

    Components with fewer than ``min_size`` vertices are dropped; with
    ``exact`` only sets of exactly ``min(h, k)`` colors are reported.
    """
    indptr, indices = g.csr
    ptr, verts = phi.class_arrays
    hh = min(h, phi.size)
    out = color_set_components(indptr, indices, ptr, verts, phi.size, hh, exact, min_size)
    return ColorSetBatch(int(out[0]), *out[1:])


@dataclass(frozen=True)
class TreedepthDecomposition:
    """Rooted forest over ``vertices``; ``parent[v]`` is ``None`` at roots and
    depths start at 1."""

    vertices: tuple[int, ...]
    parent: dict[int, int | None]
    depth: dict[int, int]
    height: int

    def children(self) -> dict[int | None, list[int]]:
        out: dict[int | None, list[int]] = {}
        for v in self.vertices:
            out.setdefault(self.parent[v], []).append(v)
        return out

    def root_path(self, v: int) -> list[int]:
        """Ancestors of ``v`` from the root down, ending with ``v``."""
        path = []
        while v is not None:
            path.append(v)
            v = self.parent[v]
        return path[::-1]

    def vertical_violations(self, g: Graph) -> list[tuple[int, int]]:
        """Induced edges that do not join an ancestor-descendant pair."""
        inside = set(self.vertices)
        anc = {v: set(self.root_path(v)) for v in self.vertices}
        bad = []
        for v in self.vertices:
            for u in g.adjacency[v]:
                if u in inside and u < v and u not in anc[v] and v not in anc[u]:
                    bad.append((u, v))
        return bad

    def format(self) -> str:
        """``vertex parent depth`` lines (parent -1 at roots)."""
        return "".join(
            f"{v} {-1 if self.parent[v] is None else self.parent[v]} {self.depth[v]}\n"
            for v in self.vertices
        )


def treedepth_decomposition(g: Graph, component: Iterable[int], phi: Coloring) -> TreedepthDecomposition:
    """Decompose ``component`` by repeatedly removing the vertex of the
    smallest unique color of each remaining component.  Raises
    :class:`DecompositionError` if some component has no unique color."""
    verts = np.array(sorted(set(component)), dtype=np.int64)
    if verts.size == 0:
        return TreedepthDecomposition((), {}, {}, 0)
    indptr, indices = g.csr
    height, parent, depth = centered_forest(indptr, indices, phi.color, verts, phi.size)
    if height < 0:
        raise DecompositionError("coloring is not centered on the component")
    vs = verts.tolist()
    return TreedepthDecomposition(
        tuple(vs),
        {v: (None if p < 0 else int(p)) for v, p in zip(vs, parent.tolist())},
        dict(zip(vs, depth.tolist())),
        int(height),
    )
