"""Experiment drivers: configuration sweep, color-class splitting, and
color-set treedepth growth.  Each returns plain row dicts; see
:mod:`becount.harness.csvio` for writing them out."""

from __future__ import annotations

import itertools
import time
from collections import defaultdict
from typing import Iterable, Sequence

import numpy as np

from ..color.check import is_p_centered
from ..color.coloring import Coloring
from ..color.pcentered import AUGMENTATIONS, ORIENTATIONS, split_color_class
from ..color.greedy import PRIORITIZATIONS
from ..decompose import color_set_batches, treedepth_decomposition
from ..errors import ColoringError
from ..generators import SB_MATRIX, gen_chung_lu, gen_chung_lu_households, gen_sbm
from ..graph import Graph, path_graph
from ..patterns import DpStats, count_in_decomposition
from .config import COMBINE_METHODS, PipelineConfig
from .metrics import diff_sum_ratio
from .pipeline import RunMetrics, color_for_motif, count_with_coloring, run_pipeline

GRID_OPTIONS = ("orientation", "augmentation", "prioritization", "combine")
DESK_N = 256
DESK_AVG_DEGREE = 6.0


def config_grid() -> list[dict[str, str]]:
    """All 24 combinations of the four swept options."""
    return [dict(zip(GRID_OPTIONS, combo))
            for combo in itertools.product(ORIENTATIONS, AUGMENTATIONS, PRIORITIZATIONS, COMBINE_METHODS)]


def desk_instances(models: Sequence[str] = ("chung-lu-households", "sbm"), per_model: int = 3,
                   n: int = DESK_N, avg_degree: float = DESK_AVG_DEGREE, seed: int = 0) -> list[tuple[str, Graph]]:
    """Desk-scale stand-ins for 1024-vertex random instances."""
    out = []
    for model in models:
        for i in range(per_model):
            s = seed + i
            if model == "chung-lu":
                g = gen_chung_lu(n, avg_degree, seed=s)
            elif model == "chung-lu-households":
                g = gen_chung_lu_households(n, avg_degree, seed=s)
            elif model == "sbm":
                g = gen_sbm(n, SB_MATRIX, avg_degree, seed=s)
            else:
                raise ValueError(f"no desk instances for model {model!r}")
            out.append((f"{model}-n{n}-s{s}", g))
    return out


def run_config_sweep(instances: Iterable[tuple[str, Graph]], grid: Sequence[dict] | None = None,
                     repetitions: int = 3, motif: Graph | None = None,
                     base: PipelineConfig | None = None, seed: int = 0,
                     color_only: bool = False) -> list[dict]:
    """One row per (instance, configuration, repetition).

    Repetition ``r`` runs with seed ``seed + r``.  With ``color_only`` the
    count stages are skipped and ``count`` is reported as -1.
    """
    motif = motif if motif is not None else path_graph(4)
    base = base or PipelineConfig()
    grid = list(grid) if grid is not None else config_grid()
    rows = []
    for name, g in instances:
        for opts in grid:
            for rep in range(repetitions):
                cfg = base.with_options(**opts, seed=seed + rep)
                if color_only:
                    t0 = time.perf_counter_ns()
                    phi, st = color_for_motif(g, motif, cfg)
                    m = RunMetrics(count=-1, colors_used=phi.size, iterations=st.iterations,
                                   colors_loop=st.colors_loop, colors_recolor=st.colors_recolor,
                                   colors_assembled=st.colors_assembled)
                    m.color_ns = m.total_ns = time.perf_counter_ns() - t0
                else:
                    _, m = run_pipeline(g, motif, cfg)
                rows.append({"instance": name, "n": g.n, "m": g.num_edges, "motif_order": motif.n,
                             "orientation": cfg.color.orientation,
                             "augmentation": cfg.color.augmentation,
                             "prioritization": cfg.color.prioritization,
                             "combine": cfg.combine,
                             "rep": rep, "seed": cfg.seed, **m.as_row()})
    return rows


def pairwise_ratios(rows: Sequence[dict], option: str, metric: str = "total_ns") -> list[dict]:
    """diff/sum ratios of ``metric`` between rows that differ only in
    ``option`` (same instance, repetition, and other swept options)."""
    if option not in GRID_OPTIONS:
        raise ValueError(f"option must be one of {GRID_OPTIONS}")
    fixed = [k for k in GRID_OPTIONS if k != option]
    groups: dict[tuple, dict[str, float]] = defaultdict(dict)
    for r in rows:
        key = (r.get("instance"), r.get("rep"), *(r.get(k) for k in fixed))
        groups[key][r[option]] = float(r[metric])
    out = []
    for key, by_value in groups.items():
        for a, b in itertools.combinations(sorted(by_value), 2):
            va, vb = by_value[a], by_value[b]
            if va + vb == 0:
                continue
            out.append({"instance": key[0], "rep": key[1], **dict(zip(fixed, key[2:])),
                        "option": option, "a": a, "b": b, "metric": metric,
                        "ratio": diff_sum_ratio(va, vb)})
    return out


def pad_coloring(phi: Coloring, target: int, heuristic: str, rng: np.random.Generator) -> Coloring:
    if target < phi.size:
        raise ValueError(f"target size {target} below coloring size {phi.size}")
    while phi.size < target:
        try:
            phi = split_color_class(phi, heuristic, rng)
        except ColoringError:
            raise ColoringError(f"cannot split coloring of size {phi.size} up to {target}") from None
    return phi


def run_split_experiment(g: Graph, colorings: Sequence[Coloring], target_size: int | None,
                         heuristic: str, reps: int = 3, motif: Graph | None = None,
                         seed: int = 0, instance: str = "") -> list[dict]:
    """Pad every coloring to ``target_size`` (default: the largest) by
    splitting classes with ``heuristic``, then count with inclusion-exclusion
    and no component cache.  One row per (coloring, repetition)."""
    motif = motif if motif is not None else path_graph(4)
    target = target_size if target_size is not None else max(c.size for c in colorings)
    rows = []
    for ci, phi in enumerate(colorings):
        for rep in range(reps):
            rng = np.random.default_rng([seed, ci, rep])
            padded = pad_coloring(phi, target, heuristic, rng)
            t0 = time.perf_counter_ns()
            count, d = count_with_coloring(g, padded, motif, "inclusion-exclusion", cache=False)
            rows.append({
                "instance": instance, "coloring": ci, "heuristic": heuristic, "rep": rep,
                "size_before": phi.size, "size_after": padded.size,
                "largest_class": max(padded.class_sizes()), "count": count,
                "joins": d.dp.joins, "forgets": d.dp.forgets,
                "join_calls": d.dp.join_calls, "forget_calls": d.dp.forget_calls,
                "components": d.components,
                "decompose_ns": d.decompose_ns, "compute_ns": d.compute_ns,
                "combine_ns": d.combine_ns, "total_ns": time.perf_counter_ns() - t0,
            })
    return rows


def predicted_growth(t: int) -> int:
    """Labeling-count prediction for P_3 at treedepth ``t``."""
    return t ** 3 + 3 * t ** 2 + t


def run_treedepth_experiment(g: Graph, phi: Coloring, p: int = 6, ts: Sequence[int] = (3, 4, 5),
                             motif: Graph | None = None, instance: str = "",
                             max_sets: int | None = None) -> list[dict]:
    """Count ``motif`` (P_3 by default) in every set of exactly ``t`` colors
    for each ``t`` and report DP time per operation against the prediction
    normalized at the first ``t``.

    ``max_sets`` caps the work per ``t`` by taking evenly spaced sets from
    the enumeration (all of them by default).
    """
    motif = motif if motif is not None else path_graph(3)
    if max(ts) > p - 1:
        raise ValueError(f"sets of {max(ts)} colors need p > {max(ts)}")
    if not is_p_centered(g, phi, p):
        raise ColoringError(f"coloring is not {p}-centered")
    rows = []
    for t in ts:
        stats = DpStats()
        if t > phi.size:
            raise ValueError(f"coloring has only {phi.size} colors, cannot form sets of {t}")
        batch = color_set_batches(g, phi, t, min_size=motif.n, exact=True)
        depth_sum = nodes = comps = total = 0
        decompose_ns = 0
        picked = range(len(batch))
        if max_sets is not None and len(batch) > max_sets:
            picked = np.linspace(0, len(batch) - 1, max_sets).round().astype(int).tolist()
        for i in picked:
            for comp in batch.components(i):
                t1 = time.perf_counter_ns()
                tdd = treedepth_decomposition(g, comp.tolist(), phi)
                decompose_ns += time.perf_counter_ns() - t1
                depth_sum += sum(tdd.depth.values())
                nodes += len(tdd.vertices)
                comps += 1
                total += count_in_decomposition(g, tdd, motif, stats=stats)[0]
        ops = stats.join_calls + stats.forget_calls
        rows.append({
            "instance": instance, "t": t, "color_sets": len(batch), "sets_counted": len(picked),
            "components": comps, "count_sum": total,
            "join_calls": stats.join_calls, "forget_calls": stats.forget_calls,
            "joins": stats.joins, "forgets": stats.forgets,
            "avg_depth": round(depth_sum / nodes, 6) if nodes else 0.0,
            "join_ns": stats.join_ns, "forget_ns": stats.forget_ns, "decompose_ns": decompose_ns,
            "per_join_ns": stats.join_ns // stats.join_calls if stats.join_calls else 0,
            "per_forget_ns": stats.forget_ns // stats.forget_calls if stats.forget_calls else 0,
            "per_op_ns": (stats.join_ns + stats.forget_ns) // ops if ops else 0,
            "predicted_ratio": round(predicted_growth(t) / predicted_growth(ts[0]), 6),
        })
    anchor = rows[0]
    for r in rows:
        for col in ("per_op_ns", "per_join_ns", "per_forget_ns"):
            base = anchor[col]
            stem = col[:-3]
            r[f"{stem}_observed_ns_ratio"] = round(r[col] / base, 6) if base else 0.0
            r[f"{stem}_predicted_ns"] = round(base * r["predicted_ratio"])
    return rows
