"""Counting induced motif embeddings inside one treedepth decomposition.

The dynamic program runs leaf to root.  The state at a node ``v`` of depth
``k`` is a *k-pattern*: which motif vertices sit on the root path of ``v``
(the boundary, one 4-bit field per depth holding ``motif vertex + 1``) and
which motif vertices are already embedded strictly below ``v`` (the
interior, a bitmask).  Edges of the host only join ancestor-descendant
pairs, so an interior vertex must have all its motif neighbours in the
boundary or the interior (the separator condition), and embeddings in
sibling subtrees combine freely when their interiors are disjoint.

Patterns with an empty interior have count 1 whenever their boundary is
consistent with the host (motif edges on the root path match host edges
exactly).  They are kept implicit: a table only stores entries with a
non-empty interior, and :func:`forget` materializes the needed single-vertex
entries from the list of consistent boundaries.

Counts are exact Python integers.  A result that does not fit an unsigned
64-bit word is reported as :class:`~becount.errors.CountOverflowError`.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Iterable

from .errors import CountOverflowError, DecompositionError
from .graph import MAX_MOTIF_ORDER, Graph

FIELD_BITS = 4
FIELD_MASK = (1 << FIELD_BITS) - 1
INTERIOR_MASK = 0xFF
COLOR_SHIFT = 8
UINT64_MAX = (1 << 64) - 1

Inner = dict[int, int]          # interior key -> count
Entries = dict[int, Inner]      # boundary labeling -> inner table


def motif_masks(H: Graph) -> tuple[int, ...]:
    """Neighbourhood bitmask of every motif vertex."""
    if H.n > MAX_MOTIF_ORDER:
        raise ValueError(f"motifs are limited to {MAX_MOTIF_ORDER} vertices")
    return tuple(sum(1 << u for u in H.adjacency[b]) for b in range(H.n))


def label_at(lam: int, depth: int) -> int:
    """Motif vertex at ``depth`` (1-based) in labeling ``lam``, or -1."""
    return ((lam >> (FIELD_BITS * (depth - 1))) & FIELD_MASK) - 1


def boundary_of(lam: int) -> int:
    """Bitmask of the motif vertices a labeling places."""
    mask = 0
    while lam:
        f = lam & FIELD_MASK
        if f:
            mask |= 1 << (f - 1)
        lam >>= FIELD_BITS
    return mask


def _witness(lam: int, anc_mask: int) -> int:
    """Motif vertices placed at the depths selected by ``anc_mask``."""
    w = 0
    i = 0
    while anc_mask:
        if anc_mask & 1:
            f = (lam >> (FIELD_BITS * i)) & FIELD_MASK
            if f:
                w |= 1 << (f - 1)
        anc_mask >>= 1
        i += 1
    return w


def extend_labelings(labelings: dict[int, int], hadj: tuple[int, ...], depth: int,
                     witness: dict[int, int]) -> dict[int, int]:
    """Consistent labelings one level down.

    ``labelings`` maps each consistent labeling of depths ``1..depth-1`` to
    its boundary mask; ``witness[lam]`` holds the boundary vertices adjacent
    in the host to the new path vertex.  A motif vertex ``b`` may sit at the
    new depth iff its motif neighbours among the boundary are exactly those.
    """
    shift = FIELD_BITS * (depth - 1)
    out = dict(labelings)
    h = len(hadj)
    for lam, bm in labelings.items():
        w = witness[lam]
        for b in range(h):
            if not bm >> b & 1 and hadj[b] & bm == w:
                out[lam | (b + 1) << shift] = bm | 1 << b
    return out


@dataclass
class DpStats:
    joins: int = 0
    forgets: int = 0
    table_peak: int = 0
    join_calls: int = 0
    forget_calls: int = 0
    join_ns: int = 0
    forget_ns: int = 0
    per_depth_time: dict[int, int] = field(default_factory=dict)

    def merge(self, other: "DpStats") -> None:
        self.joins += other.joins
        self.forgets += other.forgets
        self.table_peak = max(self.table_peak, other.table_peak)
        self.join_calls += other.join_calls
        self.forget_calls += other.forget_calls
        self.join_ns += other.join_ns
        self.forget_ns += other.forget_ns
        for d, t in other.per_depth_time.items():
            self.per_depth_time[d] = self.per_depth_time.get(d, 0) + t

    def _peak(self, entries: Entries) -> None:
        size = sum(map(len, entries.values()))
        if size > self.table_peak:
            self.table_peak = size


class PatternTable:
    """Explicit k-pattern counts for one root-path context.

    ``path`` lists the host vertices from the root down to the node;
    ``entries`` maps a boundary labeling to ``{interior key: count}``.  The
    interior key carries the interior mask in its low 8 bits and, when
    required colors are tracked, their mask above that.
    """

    __slots__ = ("hadj", "path", "entries")

    def __init__(self, hadj: tuple[int, ...], path: tuple[int, ...], entries: Entries | None = None):
        self.hadj = hadj
        self.path = path
        self.entries = entries if entries is not None else {}

    @property
    def depth(self) -> int:
        return len(self.path)

    def __len__(self) -> int:
        return sum(map(len, self.entries.values()))

    def items(self):
        for lam, inner in self.entries.items():
            for key, cnt in inner.items():
                yield lam, key, cnt

    def as_dict(self) -> dict[tuple[int, int], int]:
        return {(lam, key): cnt for lam, key, cnt in self.items()}

    def check_separator(self) -> None:
        """Assert that every interior vertex has all neighbours placed."""
        for lam, key, cnt in self.items():
            placed = boundary_of(lam) | (key & INTERIOR_MASK)
            for b in range(len(self.hadj)):
                if key >> b & 1 and self.hadj[b] & ~placed:
                    raise AssertionError(f"separator violated by motif vertex {b}")
            if cnt <= 0:
                raise AssertionError("stored count must be positive")


def _join_entries(a: Entries, b: Entries, stats: DpStats | None) -> Entries:
    if not a:
        return b
    if not b:
        return a
    out = dict(a)
    joins = 0
    for lam, inner_b in b.items():
        inner_a = out.get(lam)
        if inner_a is None:
            out[lam] = inner_b
            continue
        res = dict(inner_a)
        for key, cnt in inner_b.items():
            res[key] = res.get(key, 0) + cnt
        for ka, ca in inner_a.items():
            ia = ka & INTERIOR_MASK
            for kb, cb in inner_b.items():
                if ia & kb:
                    continue
                k = ka | kb
                res[k] = res.get(k, 0) + ca * cb
                joins += 1
        out[lam] = res
    if stats is not None:
        stats.joins += joins
    return out


def join(ta: PatternTable, tb: PatternTable, stats: DpStats | None = None) -> PatternTable:
    """Combine sibling tables: boundaries must agree and interiors be
    disjoint.  The implicit empty-interior entries act as identities."""
    if ta.path != tb.path or ta.hadj != tb.hadj:
        raise DecompositionError("join needs tables over the same root path and motif")
    return PatternTable(ta.hadj, ta.path, _join_entries(ta.entries, tb.entries, stats))


Made = list[tuple[int, tuple[int, ...]]]


def _leaf_entries(hadj: tuple[int, ...], parent_labelings: dict[int, int],
                  witness: dict[int, int]) -> Made:
    """``(labeling, motif-vertex bits)`` for every way the child vertex can be
    a freshly forgotten interior vertex: its motif neighbours are exactly the
    boundary vertices it is adjacent to in the host."""
    made = []
    for lam, bm in parent_labelings.items():
        w = witness[lam]
        bits = tuple(1 << b for b in range(len(hadj)) if not bm >> b & 1 and hadj[b] == w)
        if bits:
            made.append((lam, bits))
    return made


class _Level:
    """Consistent labelings of one root-path shape, with its extensions.

    Labelings depend only on the motif and on which ancestors each path
    vertex is adjacent to, so levels are shared across components through
    a trie keyed by those ancestor masks.
    """

    __slots__ = ("hadj", "depth", "labelings", "kids")

    def __init__(self, hadj: tuple[int, ...], depth: int, labelings: dict[int, int]):
        self.hadj = hadj
        self.depth = depth
        self.labelings = labelings
        self.kids: dict[int, tuple["_Level", Made]] = {}

    def child(self, anc: int) -> tuple["_Level", Made]:
        """Level one deeper whose new vertex is adjacent to the depths in
        ``anc``, plus the single-vertex entries its forget creates."""
        global _LEVELS_CACHED
        hit = self.kids.get(anc)
        if hit is None:
            witness = {lam: _witness(lam, anc) for lam in self.labelings}
            lc = extend_labelings(self.labelings, self.hadj, self.depth + 1, witness)
            hit = self.kids[anc] = (_Level(self.hadj, self.depth + 1, lc),
                                    _leaf_entries(self.hadj, self.labelings, witness))
            _LEVELS_CACHED += 1
        return hit


_ROOT_LEVELS: dict[tuple[int, ...], _Level] = {}
_LEVELS_CACHED = 0
_MAX_LEVELS = 200_000


def _root_level(hadj: tuple[int, ...]) -> _Level:
    global _LEVELS_CACHED
    if _LEVELS_CACHED > _MAX_LEVELS:
        _ROOT_LEVELS.clear()
        _LEVELS_CACHED = 0
    root = _ROOT_LEVELS.get(hadj)
    if root is None:
        root = _ROOT_LEVELS[hadj] = _Level(hadj, 0, {0: 0})
    return root


def _forget_entries(entries: Entries, hadj: tuple[int, ...], depth: int,
                    parent_labelings: dict[int, int], made: Made,
                    color_bit: int, stats: DpStats | None) -> Entries:
    """Move a child table at ``depth`` into its parent's context; ``made``
    lists the single-vertex entries that appear (see :func:`_leaf_entries`)."""
    shift = FIELD_BITS * (depth - 1)
    low = (1 << shift) - 1
    tag = color_bit << COLOR_SHIFT
    out: Entries = {}
    owned: set[int] = set()
    seen = 0

    def bucket(lam: int) -> Inner:
        inner = out.get(lam)
        if inner is None:
            inner = out[lam] = {}
            owned.add(lam)
        elif lam not in owned:
            inner = out[lam] = dict(inner)
            owned.add(lam)
        return inner

    for lam_c, inner in entries.items():
        seen += len(inner)
        f = (lam_c >> shift) & FIELD_MASK
        lam = lam_c & low
        if not f:
            if lam in out:
                dst = bucket(lam)
                for key, cnt in inner.items():
                    dst[key] = dst.get(key, 0) + cnt
            else:
                out[lam] = inner  # shared until written
            continue
        b = f - 1
        need = hadj[b] & ~parent_labelings[lam]
        bit = 1 << b
        dst = None
        for key, cnt in inner.items():
            if need & ~key:
                continue  # a neighbour of b is still unplaced
            if dst is None:
                dst = bucket(lam)
            k = key | bit | tag
            dst[k] = dst.get(k, 0) + cnt

    created = 0
    for lam, bits in made:
        created += len(bits)
        if lam not in out:
            out[lam] = {bit | tag: 1 for bit in bits}
            owned.add(lam)
            continue
        dst = bucket(lam)
        for bit in bits:
            k = bit | tag
            dst[k] = dst.get(k, 0) + 1
    if stats is not None:
        stats.forgets += seen + created
    return out


def consistent_labelings(hadj: tuple[int, ...], anc_masks: Iterable[int]) -> list[dict[int, int]]:
    """Consistent labelings for each prefix of a root path.

    ``anc_masks[i]`` is the bitmask of depths ``< i+1`` whose path vertex is
    adjacent to path vertex ``i+1``.  Element ``k`` of the result covers
    depths ``1..k``.
    """
    levels = [{0: 0}]
    for d, a in enumerate(anc_masks, 1):
        prev = levels[-1]
        levels.append(extend_labelings(prev, hadj, d, {lam: _witness(lam, a) for lam in prev}))
    return levels


def path_masks(g: Graph, path: tuple[int, ...]) -> list[int]:
    out = []
    for i, v in enumerate(path):
        nb = g.adj_sets[v]
        out.append(sum(1 << j for j in range(i) if path[j] in nb))
    return out


def forget(t: PatternTable, depth_label: int, g: Graph, color_bit: int = 0,
           stats: DpStats | None = None) -> PatternTable:
    """Forget the deepest label of ``t``: the motif vertex there (if any)
    joins the interior, provided its motif neighbours are all placed."""
    if depth_label != t.depth or depth_label < 1:
        raise DecompositionError(f"can only forget the deepest label {t.depth}, got {depth_label}")
    masks = path_masks(g, t.path)
    levels = consistent_labelings(t.hadj, masks[:-1])
    parent = levels[-1]
    a = masks[-1]
    witness = {lam: _witness(lam, a) for lam in parent}
    made = _leaf_entries(t.hadj, parent, witness)
    entries = _forget_entries(t.entries, t.hadj, depth_label, parent, made, color_bit, stats)
    return PatternTable(t.hadj, t.path[:-1], entries)


def _validate(g: Graph, tdd, inside: set[int]) -> None:
    depth = tdd.depth
    for v in tdd.vertices:
        p = tdd.parent[v]
        if p is None:
            if depth[v] != 1:
                raise DecompositionError(f"root {v} must have depth 1")
        elif p not in inside or depth[v] != depth[p] + 1:
            raise DecompositionError(f"bad parent link {v} -> {p}")


def count_in_decomposition(g: Graph, tdd, H: Graph, *, colors=None, required: Iterable[int] = (),
                           stats: DpStats | None = None, check: bool = False) -> tuple[int, DpStats]:
    """Number of induced embeddings of ``H`` into the vertices of ``tdd``.

    Every mapping is counted, so a motif contributes ``|Aut(H)|`` per
    placement.  With ``required`` (color ids, needs ``colors``) only
    embeddings whose image uses all of those colors are counted.  Raises
    :class:`DecompositionError` on an edge joining two different branches.
    """
    stats = stats if stats is not None else DpStats()
    if H.n < 2 or not H.is_connected():
        raise ValueError("motif must be connected with at least 2 vertices")
    hadj = motif_masks(H)
    full = (1 << H.n) - 1
    req = sorted(set(required))
    if req and colors is None:
        raise ValueError("required colors need a coloring")
    if len(req) > 8:
        raise ValueError("at most 8 required colors")
    req_bit = {c: 1 << i for i, c in enumerate(req)}
    goal = full | (sum(req_bit.values()) << COLOR_SHIFT)
    if len(tdd.vertices) < H.n:
        return 0, stats

    inside = set(tdd.vertices)
    _validate(g, tdd, inside)
    children: dict = {}
    for v in tdd.vertices:
        children.setdefault(tdd.parent[v], []).append(v)
    sub_min: dict[int, int] = {}
    for v in sorted(tdd.vertices, key=lambda v: -tdd.depth[v]):
        m = min(v, sub_min.get(v, v))
        sub_min[v] = m
        p = tdd.parent[v]
        if p is not None:
            sub_min[p] = min(sub_min.get(p, p), m)
    for lst in children.values():
        lst.sort(key=sub_min.__getitem__)
    adj = g.adj_sets
    depth = tdd.depth
    cbit = (lambda v: req_bit.get(int(colors[v]), 0)) if req else (lambda v: 0)
    per_depth = stats.per_depth_time

    clock = time.perf_counter_ns

    def forget_into(tc: Entries, d: int, lv, made, c: int) -> Entries:
        t0 = clock()
        out = _forget_entries(tc, hadj, d + 1, lv, made, cbit(c), stats)
        dt = clock() - t0
        stats.forget_calls += 1
        stats.forget_ns += dt
        per_depth[d] = per_depth.get(d, 0) + dt
        stats._peak(out)
        return out

    def join_into(table: Entries, fc: Entries, d: int) -> Entries:
        if not table:
            return fc
        t0 = clock()
        out = _join_entries(table, fc, stats)
        dt = clock() - t0
        stats.join_calls += 1
        stats.join_ns += dt
        per_depth[d] = per_depth.get(d, 0) + dt
        stats._peak(out)
        return out

    def visit(v: int, d: int, path_index: dict[int, int], level: _Level) -> Entries:
        table: Entries = {}
        path_index[v] = d - 1
        for c in children.get(v, ()):
            anc = 0
            below = 0
            for u in adj[c]:
                if u in inside and depth[u] <= d + 1:
                    below += 1
                    i = path_index.get(u)
                    if i is not None:
                        anc |= 1 << i
            if below != anc.bit_count():
                raise DecompositionError(f"vertex {c} has a neighbour outside its root path")
            child, made = level.child(anc)
            tc = visit(c, d + 1, path_index, child)
            table = join_into(table, forget_into(tc, d, level.labelings, made, c), d)
        del path_index[v]
        return table

    roots = children.get(None, [])
    total: Entries = {}
    top = _root_level(hadj)
    first, made = top.child(0)
    for r in roots:
        if any(u in inside and depth[u] == 1 for u in adj[r]):
            raise DecompositionError(f"root {r} is adjacent to another root")
        tr = visit(r, 1, {}, first)
        total = join_into(total, forget_into(tr, 0, top.labelings, made, r), 0)
    if check:
        PatternTable(hadj, (), total).check_separator()
    count = total.get(0, {}).get(goal, 0)
    if count > UINT64_MAX:
        raise CountOverflowError(f"count {count} does not fit in 64 bits")
    return count, stats


def pattern_labeling_count(H: Graph, t: int) -> int:
    """Number of k-patterns of ``H`` with labels in ``1..t``: a vertex subset
    plus an injective depth labeling of a boundary inside it that contains
    every subset vertex with a neighbour outside the subset."""
    if t < 1:
        raise ValueError("t must be >= 1")
    hadj = motif_masks(H)
    h = H.n
    total = 0
    for subset in range(1 << h):
        must = 0
        for b in range(h):
            if subset >> b & 1 and hadj[b] & ~subset:
                must |= 1 << b
        free = [b for b in range(h) if subset >> b & 1 and not must >> b & 1]
        for extra in range(1 << len(free)):
            size = must.bit_count() + extra.bit_count()
            if size <= t:
                total += math.perm(t, size)
    return total
