"""Time each numba kernel against its plain-Python body on one instance.

    python3 benchmarks/bench_kernels.py [--n 128] [--repeat 3]

Prints one line per kernel with the best-of-``repeat`` wall time (ms) of the
compiled kernel and of the pure-Python fallback, plus the speedup.  The
fallback is timed in a child process started with ``BECOUNT_DISABLE_JIT=1``,
so helper kernels run interpreted too.  The first compiled call is made
before timing so compilation is excluded.
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time

import numpy as np

from becount import _jit, compute_p_centered_coloring, gen_chung_lu_households, path_graph
from becount.baseline import _plan
from becount.color.check import class_quotient
from becount.kernels import (backtrack_count, centered_forest, color_set_components,
                             first_uncentered_set)


def workloads(n: int, seed: int):
    g = gen_chung_lu_households(n, 6.0, seed=seed)
    phi, _ = compute_p_centered_coloring(g, 5, seed=seed)
    indptr, indices = g.csr
    ptr, verts = phi.class_arrays
    qptr, qidx = class_quotient(g, phi)
    parent, hadj, hdeg = _plan(path_graph(4))
    # a centered component: the vertices of the two largest classes
    two = max(g.components([v for c in (0, 1) for v in phi.classes[c]]), key=len)
    return {
        "centered_forest": (centered_forest,
                            (indptr, indices, phi.color, np.array(two, dtype=np.int64), phi.size)),
        "first_uncentered_set": (first_uncentered_set,
                                 (indptr, indices, phi.color, ptr, verts, qptr, qidx,
                                  phi.size, 4, -1)),
        "color_set_components": (color_set_components,
                                 (indptr, indices, ptr, verts, phi.size, 4, False, 4)),
        "backtrack_count": (backtrack_count, (indptr, indices, parent, hadj, hdeg)),
    }


def best_time(fn, args, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def measure(n: int, seed: int, repeat: int) -> dict[str, float]:
    times = {}
    for name, (kernel, kargs) in workloads(n, seed).items():
        kernel(*kargs)  # compile / warm up
        times[name] = best_time(kernel, kargs, repeat)
    return times


def fallback_times(n: int, seed: int, repeat: int) -> dict[str, float]:
    env = dict(os.environ, BECOUNT_DISABLE_JIT="1")
    cmd = [sys.executable, __file__, "--n", str(n), "--seed", str(seed),
           "--repeat", str(repeat), "--json"]
    out = subprocess.run(cmd, env=env, capture_output=True, text=True, check=True).stdout
    return json.loads(out)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=128)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true", help="print this process's timings as JSON")
    args = ap.parse_args(argv)
    if args.json:
        print(json.dumps(measure(args.n, args.seed, args.repeat)))
        return 0
    if not _jit.JIT_ENABLED:
        print("numba JIT is disabled in this process; unset BECOUNT_DISABLE_JIT to compare")
        return 1
    jit = measure(args.n, args.seed, args.repeat)
    py = fallback_times(args.n, args.seed, args.repeat)
    print(f"{'kernel':<22} {'jit ms':>10} {'python ms':>10} {'speedup':>9}")
    for name, t_jit in jit.items():
        t_py = py[name]
        print(f"{name:<22} {1e3 * t_jit:>10.3f} {1e3 * t_py:>10.3f} {t_py / t_jit:>8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
