"""Centered and p-centered coloring checks.

A connected vertex set is centered when recursive centre elimination
succeeds on it.  A coloring is p-centered when every component induced by
at most ``p-1`` colors is centered.  The search only visits color sets that
are connected in the class quotient graph, and among those only the ones
that cannot grow further; every other component sits inside one of theirs.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from ..graph import Graph
from ..kernels import centered_forest, first_uncentered_set
from .coloring import Coloring


def is_centered(g: Graph, phi: Coloring, vertices: Iterable[int]) -> bool:
    verts = np.array(sorted(set(vertices)), dtype=np.int64)
    if verts.size == 0:
        return True
    indptr, indices = g.csr
    height, _, _ = centered_forest(indptr, indices, phi.color, verts, phi.size)
    return height >= 0


def class_quotient(g: Graph, phi: Coloring) -> tuple[np.ndarray, np.ndarray]:
    """CSR adjacency between color classes: ``a ~ b`` iff an edge of ``g``
    joins a vertex colored ``a`` to one colored ``b`` (``a != b``)."""
    indptr, indices = g.csr
    src = np.repeat(np.arange(g.n, dtype=np.int64), np.diff(indptr))
    cu = phi.color[src]
    cv = phi.color[indices]
    keep = cu != cv
    pairs = np.unique(cu[keep] * max(phi.size, 1) + cv[keep])
    a = pairs // max(phi.size, 1)
    qptr = np.zeros(phi.size + 1, dtype=np.int64)
    np.cumsum(np.bincount(a, minlength=phi.size), out=qptr[1:])
    return qptr, (pairs % max(phi.size, 1)).astype(np.int64)


def uncentered_color_set(g: Graph, phi: Coloring, p: int, must: int = -1) -> tuple[int, ...] | None:
    """A color set of at most ``p-1`` colors witnessing that ``phi`` is not
    p-centered, or ``None``.  ``must`` restricts the search to sets
    containing that color."""
    if p < 1:
        raise ValueError("p must be >= 1")
    size = min(p - 1, phi.size)
    if size <= 0:
        return None
    indptr, indices = g.csr
    ptr, verts = phi.class_arrays
    qptr, qidx = class_quotient(g, phi)
    # Small witnesses are the common case and are found far faster by a
    # shallow search, so deepen one color at a time.
    for s in range(min(2, size), size + 1):
        bad = first_uncentered_set(indptr, indices, phi.color, ptr, verts, qptr, qidx,
                                   phi.size, s, must)
        if bad.size:
            return tuple(int(c) for c in bad)
    return None


def is_p_centered(g: Graph, phi: Coloring, p: int) -> bool:
    if phi.n != g.n:
        raise ValueError(f"coloring covers {phi.n} vertices, graph has {g.n}")
    return uncentered_color_set(g, phi, p) is None
