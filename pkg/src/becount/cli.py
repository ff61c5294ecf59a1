"""Command-line entry point: ``becount <command> ...``.

Exit status is 0 on success, 1 when ``verify`` finds the coloring is not
p-centered, and 2 with a message on stderr for any error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .color import read_coloring, uncentered_color_set, write_coloring
from .color.pcentered import SPLIT_HEURISTICS, compute_p_centered_coloring
from .decompose import induced_components, treedepth_decomposition
from .errors import BecountError
from .generators import MODELS, GeneratorParams, generate
from .graph import build_motif, format_edge_list, load_edge_list, write_edge_list
from .harness import (PipelineConfig, config_grid, desk_instances, load_config, pairwise_ratios,
                      run_config_sweep, run_pipeline, run_split_experiment,
                      run_treedepth_experiment, write_csv)
from .harness.experiments import GRID_OPTIONS


def _config(args) -> PipelineConfig:
    cfg = load_config(args.config) if getattr(args, "config", None) else PipelineConfig()
    over = {}
    if getattr(args, "seed", None) is not None:
        over["seed"] = args.seed
    if getattr(args, "engine", None) is not None:
        over["engine"] = args.engine
    return cfg.with_options(**over) if over else cfg


def _emit(text: str, out) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _instances(args):
    if args.graph:
        return [(Path(p).stem, load_edge_list(p)) for p in args.graph]
    return desk_instances(per_model=args.instances, n=args.n, avg_degree=args.avg_degree,
                          seed=args.seed or 0)


def cmd_count(args) -> int:
    g = load_edge_list(args.graph)
    H = build_motif(args.motif)
    cfg = _config(args)
    count, m = run_pipeline(g, H, cfg)
    _emit(f"{count}\n", args.out)
    if args.metrics:
        write_csv([{"engine": cfg.engine, "combine": cfg.combine, "seed": cfg.seed, **m.as_row()}],
                  args.metrics)
    return 0


def cmd_color(args) -> int:
    g = load_edge_list(args.graph)
    cfg = _config(args)
    p = args.p if args.p is not None else build_motif(args.motif).n + 1
    phi, st = compute_p_centered_coloring(g, p, cfg.color, seed=cfg.seed)
    if args.out:
        write_coloring(phi, args.out)
    else:
        sys.stdout.write("".join(f"{v} {c}\n" for v, c in enumerate(phi.color.tolist())))
    if args.metrics:
        row = {"p": p, "colors": phi.size, "iterations": st.iterations,
               "colors_loop": st.colors_loop, "colors_recolor": st.colors_recolor,
               "colors_assembled": st.colors_assembled,
               "high_degree_removed": st.high_degree_removed,
               "degree_one_removed": st.degree_one_removed,
               **{f"{k}_ns": v for k, v in sorted(st.phase_ns.items())}}
        write_csv([row], args.metrics)
    return 0


def cmd_verify(args) -> int:
    g = load_edge_list(args.graph)
    phi = read_coloring(args.coloring, g.n)
    bad = uncentered_color_set(g, phi, args.p)
    if bad is None:
        print(f"ok: {phi.size} colors, {args.p}-centered")
    else:
        print(f"not {args.p}-centered: colors {list(bad)} induce a component without a center")
    if args.dump:
        colors = [int(c) for c in args.dump.split(",")]
        parts = []
        for comp in induced_components(g, phi, colors):
            tdd = treedepth_decomposition(g, comp, phi)
            parts.append(f"# component of {len(comp)} vertices, height {tdd.height}\n{tdd.format()}")
        _emit("".join(parts), args.out)
    return 0 if bad is None else 1


def cmd_generate(args) -> int:
    params = GeneratorParams(model=args.model, n=args.n, avg_degree=args.avg_degree,
                             household_size=args.household_size, d=args.d, s=args.s,
                             ell=args.ell, seed=args.seed or 0)
    g = generate(params)
    if args.out:
        write_edge_list(g, args.out)
    else:
        sys.stdout.write(format_edge_list(g))
    return 0


def cmd_sweep(args) -> int:
    base = _config(args)
    rows = run_config_sweep(_instances(args), config_grid(), args.reps, build_motif(args.motif),
                            base, seed=base.seed, color_only=args.color_only)
    write_csv(rows, args.out or sys.stdout)
    if args.metrics:
        ratios = [r for opt in GRID_OPTIONS for r in pairwise_ratios(rows, opt, args.ratio_metric)]
        write_csv(ratios, args.metrics)
    return 0


def cmd_split(args) -> int:
    H = build_motif(args.motif)
    base = _config(args)
    rows = []
    for name, g in _instances(args):
        colorings = []
        for opts in config_grid():
            if opts["combine"] != "inclusion-exclusion":
                continue  # the coloring does not depend on the combine method
            cfg = base.with_options(**opts)
            colorings.append(compute_p_centered_coloring(g, H.n + 1, cfg.color, seed=cfg.seed)[0])
        for heuristic in args.heuristics.split(","):
            rows += run_split_experiment(g, colorings, args.target, heuristic, args.reps, H,
                                         seed=base.seed, instance=name)
    write_csv(rows, args.out or sys.stdout)
    return 0


def cmd_td(args) -> int:
    base = _config(args)
    rows = []
    for name, g in _instances(args):
        phi, _ = compute_p_centered_coloring(g, args.p, base.color, seed=base.seed)
        rows += run_treedepth_experiment(g, phi, args.p, instance=name, max_sets=args.max_sets)
    write_csv(rows, args.out or sys.stdout)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="becount", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, graph=True, many=False):
        if graph and many:
            p.add_argument("--graph", nargs="*", default=[], help="edge-list files (default: generated instances)")
        elif graph:
            p.add_argument("--graph", required=True, help="edge-list file")
        p.add_argument("--motif", default="path:4", help="path:N, star:N, clique:N, cycle:N or file:PATH")
        p.add_argument("--config", help="key = value configuration file")
        p.add_argument("--out", help="output file (default: stdout)")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--engine", choices=("pipeline", "baseline"), default=None)
        p.add_argument("--metrics", help="write metrics CSV here")

    def generated(p):
        p.add_argument("--instances", type=int, default=3, help="generated instances per model")
        p.add_argument("--n", type=int, default=256)
        p.add_argument("--avg-degree", type=float, default=6.0)

    p = sub.add_parser("count", help="count induced embeddings of a motif")
    common(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("color", help="compute a p-centered coloring")
    common(p)
    p.add_argument("--p", type=int, default=None, help="default: motif order + 1")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check a coloring for p-centeredness")
    common(p)
    p.add_argument("--coloring", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--dump", help="comma-separated colors: write 'vertex parent depth' decompositions")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="write a random graph as an edge list")
    common(p, graph=False)
    p.add_argument("--model", choices=MODELS, required=True)
    p.add_argument("--n", type=int, default=256)
    p.add_argument("--avg-degree", type=float, default=6.0)
    p.add_argument("--household-size", type=int, default=4)
    p.add_argument("--d", type=int, default=4)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--ell", type=int, default=1)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("sweep", help="run the 24-configuration sweep")
    common(p, many=True)
    generated(p)
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--color-only", action="store_true", help="skip the counting stages")
    p.add_argument("--ratio-metric", default="total_ns", help="metric for --metrics diff/sum ratios")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("split-exp", help="color-class splitting experiment")
    common(p, many=True)
    generated(p)
    p.add_argument("--heuristics", default=",".join(SPLIT_HEURISTICS))
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--target", type=int, default=None, help="default: largest coloring")
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("td-exp", help="color-set treedepth growth experiment")
    common(p, many=True)
    generated(p)
    p.add_argument("--p", type=int, default=6)
    p.add_argument("--max-sets", type=int, default=None)
    p.set_defaults(func=cmd_td)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (BecountError, ValueError, OSError) as exc:
        print(f"becount {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
