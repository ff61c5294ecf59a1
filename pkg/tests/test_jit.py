"""Compiled kernels and their plain-Python bodies must agree exactly."""

import os
import subprocess
import sys

import numpy as np

from becount import _jit, compute_p_centered_coloring, gen_chung_lu_households, path_graph
from becount.baseline import _plan
from becount.color.check import class_quotient
from becount.kernels import (backtrack_count, centered_forest, color_set_components,
                             first_uncentered_set)

from conftest import random_coloring, random_graph


def same(a, b):
    if isinstance(a, tuple):
        return len(a) == len(b) and all(same(x, y) for x, y in zip(a, b))
    return np.array_equal(np.asarray(a), np.asarray(b))


def test_every_kernel_exposes_py_func():
    for k in (backtrack_count, centered_forest, color_set_components, first_uncentered_set):
        assert callable(k.py_func)


def test_kernels_agree(rng):
    for i in range(40):
        n = int(rng.integers(2, 30))
        g = random_graph(rng, n, float(rng.uniform(0.05, 0.4)))
        phi = random_coloring(rng, n, int(rng.integers(1, 10))) if i % 2 else \
            compute_p_centered_coloring(g, 4, seed=i)[0]
        indptr, indices = g.csr
        ptr, verts = phi.class_arrays
        qptr, qidx = class_quotient(g, phi)
        comp = np.array(g.components()[0], dtype=np.int64)
        args = (indptr, indices, phi.color, comp, phi.size)
        assert same(centered_forest(*args), centered_forest.py_func(*args))
        for size in (2, 3):
            for must in (-1, 0):
                args = (indptr, indices, phi.color, ptr, verts, qptr, qidx, phi.size, size, must)
                assert same(first_uncentered_set(*args), first_uncentered_set.py_func(*args))
        args = (indptr, indices, ptr, verts, phi.size, min(3, phi.size), bool(i % 3 == 0), 2)
        assert same(color_set_components(*args), color_set_components.py_func(*args))
        parent, hadj, hdeg = _plan(path_graph(4))
        args = (indptr, indices, parent, hadj, hdeg)
        assert int(backtrack_count(*args)) == int(backtrack_count.py_func(*args))


def test_disabled_jit_end_to_end():
    code = ("from becount import _jit, run_pipeline, baseline_count, gen_tree_paths, path_graph\n"
            "assert not _jit.JIT_ENABLED\n"
            "g = gen_tree_paths(3, 1, 2, seed=1)\n"
            "assert run_pipeline(g, path_graph(4))[0] == baseline_count(g, path_graph(4))\n"
            "print('ok')\n")
    env = dict(os.environ, BECOUNT_DISABLE_JIT="1")
    res = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert res.returncode == 0, res.stderr
    assert res.stdout.strip() == "ok"


def test_jit_flag_parsing():
    assert isinstance(_jit.JIT_ENABLED, bool)
    assert _jit.DISABLE_JIT == (os.environ.get("BECOUNT_DISABLE_JIT", "").strip().lower()
                                not in ("", "0", "false", "no"))


def test_realistic_instance_agrees():
    g = gen_chung_lu_households(64, 6, seed=0)
    phi, _ = compute_p_centered_coloring(g, 4)
    indptr, indices = g.csr
    ptr, verts = phi.class_arrays
    args = (indptr, indices, ptr, verts, phi.size, 3, False, 3)
    assert same(color_set_components(*args), color_set_components.py_func(*args))
