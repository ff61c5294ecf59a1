"""Color, decompose, compute, combine: one counting run end to end."""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from typing import Callable

from ..baseline import baseline_count
from ..color.coloring import Coloring
from ..color.pcentered import ColorStats, compute_p_centered_coloring
from ..combine import combine_hybrid, combine_inclusion_exclusion, hybrid_required
from ..decompose import TreedepthDecomposition, color_set_batches, treedepth_decomposition
from ..errors import CountOverflowError, GraphError
from ..graph import MAX_MOTIF_ORDER, Graph
from ..patterns import UINT64_MAX, DpStats, count_in_decomposition
from .config import PipelineConfig

Inspector = Callable[[tuple[int, ...], TreedepthDecomposition], None]


@dataclass
class CountDetail:
    """What the decompose / compute / combine stages did for one coloring."""

    sets_visited: int = 0
    sets_counted: int = 0
    components: int = 0
    dp_runs: int = 0
    decompose_ns: int = 0
    compute_ns: int = 0
    combine_ns: int = 0
    dp: DpStats = field(default_factory=DpStats)
    per_set: dict[tuple[int, ...], int] = field(default_factory=dict)


@dataclass
class RunMetrics:
    count: int = 0
    colors_used: int = 0
    iterations: int = 0
    colors_loop: int = 0
    colors_recolor: int = 0
    colors_assembled: int = 0
    sets_visited: int = 0
    components: int = 0
    joins: int = 0
    forgets: int = 0
    table_peak: int = 0
    color_ns: int = 0
    decompose_ns: int = 0
    compute_ns: int = 0
    combine_ns: int = 0
    total_ns: int = 0

    def as_row(self) -> dict:
        return asdict(self)


def _check_motif(H: Graph) -> None:
    if not 2 <= H.n <= MAX_MOTIF_ORDER or not H.is_connected():
        raise GraphError(f"motif must be connected with 2..{MAX_MOTIF_ORDER} vertices")


def count_with_coloring(g: Graph, phi: Coloring, H: Graph, combine: str = "inclusion-exclusion", *,
                        cache: bool = True, inspect: Inspector | None = None) -> tuple[int, CountDetail]:
    """Count ``H`` in ``g`` given an ``(|H|+1)``-centered coloring ``phi``.

    Color sets are walked in DFS order; only components with at least
    ``|H|`` vertices are decomposed, since smaller ones cannot host the
    motif.  With ``cache`` a component seen in several color sets is
    counted once.  ``inspect(colors, tdd)`` sees every decomposition built.
    """
    _check_motif(H)
    detail = CountDetail()
    if phi.n != g.n:
        raise ValueError("coloring and graph sizes differ")
    if g.n < H.n:
        return 0, detail
    h = H.n
    k = phi.size
    hybrid = combine == "hybrid"
    if combine not in ("inclusion-exclusion", "hybrid"):
        raise ValueError(f"unknown combine method {combine!r}")

    t0 = time.perf_counter_ns()
    batch = color_set_batches(g, phi, h, min_size=h, exact=hybrid)
    detail.decompose_ns += time.perf_counter_ns() - t0
    detail.sets_visited = batch.visited
    memo: dict = {}
    colors = phi.color

    for i in range(len(batch)):
        S = batch.color_set(i)
        req = hybrid_required(S, k) if hybrid else ()
        f = 0
        for comp in batch.components(i):
            detail.components += 1
            verts = tuple(comp.tolist())
            if req:
                present = {int(c) for c in colors[comp]}
                if not present.issuperset(req):
                    continue
                key = (verts, req)
            else:
                key = verts
            if cache and key in memo:
                f += memo[key]
                continue
            t1 = time.perf_counter_ns()
            tdd = treedepth_decomposition(g, verts, phi)
            t2 = time.perf_counter_ns()
            detail.decompose_ns += t2 - t1
            if inspect is not None:
                inspect(S, tdd)
            c, _ = count_in_decomposition(g, tdd, H, colors=colors, required=req, stats=detail.dp)
            detail.compute_ns += time.perf_counter_ns() - t2
            detail.dp_runs += 1
            if cache:
                memo[key] = c
            f += c
        if f:
            detail.per_set[S] = f
    detail.sets_counted = len(batch)

    t0 = time.perf_counter_ns()
    if hybrid:
        total = combine_hybrid(detail.per_set)
    else:
        total = combine_inclusion_exclusion(detail.per_set, k, h, missing_is_zero=True)
    detail.combine_ns = time.perf_counter_ns() - t0
    if not 0 <= total <= UINT64_MAX:
        raise CountOverflowError(f"total {total} is outside the unsigned 64-bit range")
    return total, detail


def color_for_motif(g: Graph, H: Graph, cfg: PipelineConfig) -> tuple[Coloring, ColorStats]:
    """The ``(|H|+1)``-centered coloring the pipeline counts with."""
    return compute_p_centered_coloring(g, H.n + 1, cfg.color, seed=cfg.seed)


def run_pipeline(g: Graph, H: Graph, cfg: PipelineConfig | None = None, *, cache: bool = True,
                 inspect: Inspector | None = None) -> tuple[int, RunMetrics]:
    """Count induced embeddings of ``H`` in ``g`` with the chosen engine."""
    cfg = cfg or PipelineConfig()
    _check_motif(H)
    m = RunMetrics()
    start = time.perf_counter_ns()
    if cfg.engine == "baseline":
        m.count = baseline_count(g, H)
        m.total_ns = time.perf_counter_ns() - start
        return m.count, m

    phi, cstats = color_for_motif(g, H, cfg)
    m.color_ns = time.perf_counter_ns() - start
    m.colors_used = phi.size
    m.iterations = cstats.iterations
    m.colors_loop = cstats.colors_loop
    m.colors_recolor = cstats.colors_recolor
    m.colors_assembled = cstats.colors_assembled

    m.count, d = count_with_coloring(g, phi, H, cfg.combine, cache=cache, inspect=inspect)
    m.sets_visited = d.sets_visited
    m.components = d.components
    m.joins = d.dp.joins
    m.forgets = d.dp.forgets
    m.table_peak = d.dp.table_peak
    m.decompose_ns = d.decompose_ns
    m.compute_ns = d.compute_ns
    m.combine_ns = d.combine_ns
    m.total_ns = time.perf_counter_ns() - start
    return m.count, m
