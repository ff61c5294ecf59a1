"""The orient / augment / color / check loop and its pre- and post-passes."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from ..errors import ColoringError
from ..graph import Graph
from .arcs import ArcGraph, augment_step, orient_degeneracy, orient_sandpile
from .check import is_p_centered, uncentered_color_set
from .coloring import Coloring
from .greedy import PRIORITIZATIONS, greedy_color

ORIENTATIONS = ("degeneracy", "sandpile")
AUGMENTATIONS = ("tfa", "dtfa")


@dataclass(frozen=True)
class ColorConfig:
    orientation: str = "degeneracy"
    augmentation: str = "tfa"
    prioritization: str = "low-degree"
    preprocess_high_degree: bool = False
    postprocess_degree_one: bool = False
    recolor_attempts: int = 3
    merge_classes: bool = True
    max_iterations: int = 20

    def __post_init__(self):
        if self.orientation not in ORIENTATIONS:
            raise ValueError(f"orientation must be one of {ORIENTATIONS}")
        if self.augmentation not in AUGMENTATIONS:
            raise ValueError(f"augmentation must be one of {AUGMENTATIONS}")
        if self.prioritization not in PRIORITIZATIONS:
            raise ValueError(f"prioritization must be one of {PRIORITIZATIONS}")
        if self.recolor_attempts < 0:
            raise ValueError("recolor_attempts must be >= 0")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")


@dataclass
class ColorStats:
    iterations: int = 0
    colors_loop: int = 0
    colors_recolor: int = 0
    colors_assembled: int = 0
    colors_final: int = 0
    high_degree_removed: int = 0
    degree_one_removed: int = 0
    phase_ns: dict[str, int] = field(default_factory=dict)

    def add_time(self, phase: str, start_ns: int) -> None:
        self.phase_ns[phase] = self.phase_ns.get(phase, 0) + time.perf_counter_ns() - start_ns


def high_degree_threshold(n: int) -> int:
    """Smallest integer t with t**4 >= n, i.e. ceil of the 4th root."""
    t = max(1, math.isqrt(math.isqrt(n)))
    while t ** 4 < n:
        t += 1
    while t > 1 and (t - 1) ** 4 >= n:
        t -= 1
    return t


def _color_loop(g: Graph, p: int, cfg: ColorConfig, rng: np.random.Generator,
                stats: ColorStats) -> Coloring:
    if g.n == 0:
        stats.iterations = 1
        return Coloring([])
    t0 = time.perf_counter_ns()
    arcs = orient_degeneracy(g) if cfg.orientation == "degeneracy" else orient_sandpile(g)
    stats.add_time("orient", t0)
    prev: ArcGraph | None = None
    for it in range(1, cfg.max_iterations + 1):
        if it > 1:
            t0 = time.perf_counter_ns()
            prev, arcs = arcs, augment_step(arcs, cfg.augmentation, it)
            stats.add_time("augment", t0)
        t0 = time.perf_counter_ns()
        phi = greedy_color(arcs, cfg.prioritization)
        stats.add_time("color", t0)
        t0 = time.perf_counter_ns()
        ok = is_p_centered(g, phi, p)
        stats.add_time("check", t0)
        if ok:
            break
    else:
        raise ColoringError(
            f"no {p}-centered coloring after {cfg.max_iterations} iterations"
        )
    stats.iterations = it
    stats.colors_loop = phi.size

    if prev is not None and cfg.recolor_attempts:
        t0 = time.perf_counter_ns()
        phi = _recolor(g, p, cfg, rng, prev, arcs, phi)
        stats.add_time("recolor", t0)
    stats.colors_recolor = phi.size
    return phi


def _recolor(g, p, cfg, rng, prev: ArcGraph, final: ArcGraph, phi: Coloring) -> Coloring:
    """Grow the last non-p-centered arc graph by random batches of the arcs
    the final augmentation added, recoloring after each batch and keeping
    any smaller p-centered result."""
    added = [(u, v, w) for u, v, w in final.arcs() if not prev.has_arc(u, v)]
    if not added:
        return phi
    batch = max(1, math.ceil(prev.num_arcs / 20))
    perm = rng.permutation(len(added))
    trial = prev.copy()
    best = phi
    for attempt in range(cfg.recolor_attempts):
        chunk = perm[attempt * batch:(attempt + 1) * batch]
        if chunk.size == 0:
            break
        for i in chunk.tolist():
            u, v, w = added[i]
            trial.add_arc(u, v, w)
        cand = greedy_color(trial, cfg.prioritization)
        if cand.size < best.size and is_p_centered(g, cand, p):
            best = cand
    return best


def compute_p_centered_coloring(g: Graph, p: int, cfg: ColorConfig | None = None,
                                seed=0) -> tuple[Coloring, ColorStats]:
    """Compute a p-centered coloring of ``g``.

    Optional preprocessing gives every vertex of degree at least
    ``ceil(n ** 0.25)`` its own color; optional degree-one handling colors
    the leaves of components with more than two vertices with one shared
    color.  The loop runs on what is left, followed by the recolor attempts
    and pairwise class merging.  Raises :class:`ColoringError` when the loop
    hits ``max_iterations``.
    """
    cfg = cfg or ColorConfig()
    if p < 2:
        raise ValueError("p must be >= 2")
    stats = ColorStats()
    rng = np.random.default_rng(seed)
    if g.n <= 1:
        stats.iterations = 1
        phi = Coloring([0] * g.n)
        stats.colors_loop = stats.colors_recolor = stats.colors_assembled = stats.colors_final = phi.size
        return phi, stats

    t0 = time.perf_counter_ns()
    hub = []
    if cfg.preprocess_high_degree:
        thr = high_degree_threshold(g.n)
        hub = [v for v in range(g.n) if g.degree(v) >= thr]
    hub_set = set(hub)
    rest = [v for v in range(g.n) if v not in hub_set]
    leaves: list[int] = []
    if cfg.postprocess_degree_one:
        sub, ids = g.induced_subgraph(rest)
        for comp in sub.components():
            if len(comp) > 2:
                leaves.extend(ids[v] for v in comp if sub.degree(v) == 1)
    leaf_set = set(leaves)
    core_graph, core_ids = g.induced_subgraph(v for v in rest if v not in leaf_set)
    stats.high_degree_removed = len(hub)
    stats.degree_one_removed = len(leaves)
    stats.add_time("preprocess", t0)

    core_phi = _color_loop(core_graph, p, cfg, rng, stats)

    labels = [-1] * g.n
    for i, v in enumerate(core_ids):
        labels[v] = int(core_phi.color[i])
    nxt = core_phi.size
    if leaves:
        for v in leaves:
            labels[v] = nxt
        nxt += 1
    for v in hub:
        labels[v] = nxt
        nxt += 1
    phi = Coloring.from_colors(labels)
    stats.colors_assembled = phi.size

    if cfg.merge_classes:
        t0 = time.perf_counter_ns()
        phi = merge_color_classes(g, phi, p)
        stats.add_time("merge", t0)
    stats.colors_final = phi.size
    if not is_p_centered(g, phi, p):
        raise ColoringError("internal error: final coloring is not p-centered")
    return phi, stats


def merge_color_classes(g: Graph, phi: Coloring, p: int) -> Coloring:
    """Greedily merge pairs of color classes while the coloring stays
    p-centered.

    Candidate pairs are tried in ascending combined size (ties by color
    ids).  Pairs joined by an edge are never candidates.  A rejected pair
    stays rejected after later merges, since merging more classes cannot
    restore a unique color.
    """
    if not is_p_centered(g, phi, p):
        raise ColoringError("merge_color_classes needs a p-centered coloring")
    k = phi.size
    labels = phi.color.copy()
    members = {c: list(cls) for c, cls in enumerate(phi.classes)}
    touching = {c: set() for c in range(k)}
    for u, v in g.edges():
        a, b = int(labels[u]), int(labels[v])
        if a != b:
            touching[a].add(b)
            touching[b].add(a)
    rejected: set[tuple[int, int]] = set()

    while True:
        alive = sorted(members)
        pairs = sorted(
            (len(members[a]) + len(members[b]), a, b)
            for i, a in enumerate(alive) for b in alive[i + 1:]
            if b not in touching[a] and (a, b) not in rejected
        )
        merged = False
        for _, a, b in pairs:
            trial = labels.copy()
            trial[np.asarray(members[b], dtype=np.int64)] = a
            cand = Coloring.from_colors(trial)
            if uncentered_color_set(g, cand, p, must=int(cand.color[members[a][0]])) is None:
                labels = trial
                members[a].extend(members.pop(b))
                for c in touching.pop(b):
                    touching[c].discard(b)
                    if c != a:
                        touching[c].add(a)
                        touching[a].add(c)
                rejected = {
                    (min(x if x != b else a, y if y != b else a), max(x if x != b else a, y if y != b else a))
                    for x, y in rejected
                }
                merged = True
                break
            rejected.add((a, b))
        if not merged:
            return Coloring.from_colors(labels)


SPLIT_HEURISTICS = ("min", "med", "max")


def split_color_class(phi: Coloring, heuristic: str, rng: np.random.Generator) -> Coloring:
    """Move a random half (``floor(size/2)`` vertices) of one class into a
    new color ``phi.size``.

    ``max`` splits the largest class; ``min`` and ``med`` consider only
    classes with at least two vertices and take the smallest or the lower
    median.  Ties go to the smaller color id.
    """
    if heuristic not in SPLIT_HEURISTICS:
        raise ValueError(f"heuristic must be one of {SPLIT_HEURISTICS}")
    sizes = phi.class_sizes()
    ranked = sorted((s, c) for c, s in enumerate(sizes) if s >= 2)
    if not ranked:
        raise ColoringError("no color class with at least two vertices to split")
    if heuristic == "min":
        target = ranked[0][1]
    elif heuristic == "max":
        target = min(c for s, c in ranked if s == ranked[-1][0])
    else:
        target = ranked[(len(ranked) - 1) // 2][1]
    members = np.asarray(phi.classes[target], dtype=np.int64)
    moved = rng.choice(members, size=len(members) // 2, replace=False)
    labels = phi.color.copy()
    labels[moved] = phi.size
    return Coloring(labels)
