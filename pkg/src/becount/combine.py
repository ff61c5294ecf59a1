"""Turning per-color-set counts into the total number of embeddings.

An embedding of an ``h``-vertex motif uses at most ``h`` colors, so it is
seen in every color set containing its own colors.  Inclusion-exclusion
weights each set count so that each embedding is credited exactly once; the
hybrid method instead credits an embedding only inside the first set of
``min(h, k)`` colors (in enumeration order) that contains its colors.
"""

from __future__ import annotations

import itertools
from collections import Counter
from math import comb
from typing import Iterable, Mapping

from .baseline import iter_embeddings
from .color.coloring import Coloring
from .graph import Graph


def _key(colors: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(set(colors)))


def ie_coefficient(u: int, k: int, h: int) -> int:
    """Weight of ``f(U)`` for ``|U| = u`` in the inclusion-exclusion total:
    ``sum_{j=0}^{h'-u} C(k-u, j) (-1)^j`` with ``h' = min(h, k)``."""
    hh = min(h, k)
    return sum((-1) ** j * comb(k - u, j) for j in range(hh - u + 1))


def mobius(counts: Mapping, T: Iterable[int]) -> int:
    """``e(T) = sum_{U subset of T} (-1)^{|T|-|U|} f(U)``: embeddings whose
    colors are exactly ``T``.  Missing subsets count as zero here."""
    t = _key(T)
    total = 0
    for r in range(1, len(t) + 1):
        sign = (-1) ** (len(t) - r)
        for u in itertools.combinations(t, r):
            total += sign * counts.get(u, 0)
    return total


def combine_inclusion_exclusion(counts: Mapping, k: int, h: int, *,
                                missing_is_zero: bool = False) -> int:
    """Total from ``f(S)`` for every color set with ``1..min(h, k)`` colors.

    Keys are sorted color tuples.  A missing set is an error unless
    ``missing_is_zero`` says the caller knows those sets host nothing.
    """
    hh = min(h, k)
    coef = [ie_coefficient(u, k, h) for u in range(hh + 1)]
    if missing_is_zero:
        total = 0
        for s, f in counts.items():
            if not 1 <= len(s) <= hh:
                raise ValueError(f"color set {s} has more than {hh} colors")
            total += coef[len(s)] * f
        return total
    total = 0
    for r in range(1, hh + 1):
        for s in itertools.combinations(range(k), r):
            try:
                f = counts[s]
            except KeyError:
                raise KeyError(f"no count for color set {s}") from None
            total += coef[r] * f
    return total


def hybrid_required(S: Iterable[int], k: int) -> tuple[int, ...]:
    """Colors an embedding must use to be credited in set ``S``.

    An embedding with colors ``T`` belongs to the lexicographically first
    size-``|S|`` superset of ``T``, which fills ``T`` up with the smallest
    colors it lacks.  So ``S`` owns it iff ``T`` contains every color of
    ``S`` above ``m``, the smallest color not in ``S``.
    """
    s = _key(S)
    members = set(s)
    m = next((c for c in range(k) if c not in members), None)
    if m is None:
        return ()
    return tuple(c for c in s if c > m)


def combine_hybrid(credited: Mapping) -> int:
    """Sum of per-set counts already restricted by :func:`hybrid_required`."""
    return sum(credited.values())


def exact_color_counts(g: Graph, phi: Coloring, H: Graph) -> dict[tuple[int, ...], int]:
    """Brute force: embeddings bucketed by the exact set of colors they use."""
    out: Counter = Counter()
    for emb in iter_embeddings(g, H):
        out[_key(int(phi.color[v]) for v in emb)] += 1
    return dict(out)


def exact_color_count(g: Graph, phi: Coloring, H: Graph, T: Iterable[int]) -> int:
    """Embeddings using every color of ``T`` and no other."""
    t = _key(T)
    if not t or len(t) > H.n:
        return 0
    return exact_color_counts(g, phi, H).get(t, 0)
