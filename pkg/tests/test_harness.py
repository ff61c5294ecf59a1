import io

import numpy as np
import pytest

from becount import (ColorConfig, Graph, baseline_count, compute_p_centered_coloring,
                     gen_tree_paths, path_graph, star_graph)
from becount.errors import ColoringError, ParseError
from becount.harness import (PipelineConfig, config_grid, pad_coloring, pairwise_ratios,
                             parse_config, predicted_growth, read_csv, rows_to_csv,
                             run_config_sweep, run_pipeline, run_split_experiment,
                             run_treedepth_experiment, strip_timing, timing_column)
from becount.harness.metrics import diff_sum_ratio

from conftest import random_graph


def test_diff_sum_ratio():
    assert diff_sum_ratio(3, 1) == 0.5
    assert diff_sum_ratio(2.5, 2.5) == 0
    assert diff_sum_ratio(0, 5) == -1
    with pytest.raises(ZeroDivisionError):
        diff_sum_ratio(0, 0)
    with pytest.raises(ValueError):
        diff_sum_ratio(-1, 1)


def test_config_parse_round_trip():
    cfg = parse_config("orientation = sandpile\naugmentation=dtfa # note\n"
                       "prioritization = dsatur\ncombine = hybrid\nseed = 9\n"
                       "postprocess_degree_one = yes\nrecolor_attempts = 1\n")
    assert cfg.color == ColorConfig("sandpile", "dtfa", "dsatur", postprocess_degree_one=True,
                                    recolor_attempts=1)
    assert cfg.combine == "hybrid" and cfg.seed == 9
    assert parse_config(cfg.to_text()) == cfg


@pytest.mark.parametrize("text", ["colour = x", "seed = 1\nseed = 2", "orientation sandpile",
                                  "seed = one", "combine = average", "merge_classes = maybe"])
def test_config_errors(text):
    with pytest.raises(ParseError):
        parse_config(text)


def test_grid():
    grid = config_grid()
    assert len(grid) == 24
    assert len({tuple(sorted(o.items())) for o in grid}) == 24


def test_run_pipeline_examples():
    assert run_pipeline(path_graph(4), path_graph(4))[0] == 2
    g = gen_tree_paths(4, 2, 1, seed=0)
    assert run_pipeline(g, star_graph(4))[0] == baseline_count(g, star_graph(4))
    assert run_pipeline(Graph.empty(6), path_graph(3))[0] == 0
    count, m = run_pipeline(g, star_graph(4), PipelineConfig(engine="baseline"))
    assert count == m.count == baseline_count(g, star_graph(4))


def test_run_pipeline_metrics():
    g = gen_tree_paths(4, 2, 2, seed=1)
    count, m = run_pipeline(g, path_graph(4))
    assert m.count == count and m.colors_used > 0 and m.iterations >= 1
    row = m.as_row()
    for key in ("color_ns", "decompose_ns", "compute_ns", "combine_ns", "total_ns"):
        assert row[key] >= 0
    assert m.total_ns >= m.color_ns


def test_run_pipeline_inspect_hook():
    g = gen_tree_paths(3, 1, 2, seed=2)
    seen = []
    run_pipeline(g, path_graph(3), inspect=lambda S, tdd: seen.append((S, tdd)))
    assert seen
    assert all(tdd.height <= len(S) and not tdd.vertical_violations(g) for S, tdd in seen)


def test_run_pipeline_rejects_bad_motif():
    with pytest.raises(ValueError):
        run_pipeline(path_graph(4), Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_sweep_rows():
    insts = [(f"g{i}", gen_tree_paths(2, 1, 1, seed=i)) for i in range(3)]
    rows = run_config_sweep(insts, config_grid(), 3)
    assert len(rows) == 216
    assert {r["motif_order"] for r in rows} == {4}
    truth = {name: baseline_count(g, path_graph(4)) for name, g in insts}
    assert all(r["count"] == truth[r["instance"]] for r in rows)


def test_pairwise_helper():
    rows = [{"instance": "x", "rep": 0, "orientation": "degeneracy", "augmentation": "tfa",
             "prioritization": "low-degree", "combine": "hybrid", "t_ns": 3},
            {"instance": "x", "rep": 0, "orientation": "sandpile", "augmentation": "tfa",
             "prioritization": "low-degree", "combine": "hybrid", "t_ns": 1}]
    out = pairwise_ratios(rows, "orientation", "t_ns")
    assert len(out) == 1 and out[0]["ratio"] == 0.5
    assert out[0]["a"] == "degeneracy" and out[0]["b"] == "sandpile"
    with pytest.raises(ValueError):
        pairwise_ratios(rows, "motif")


def test_csv_helpers():
    rows = [{"a": 1, "x_ns": 5, "r_ns_ratio": 0.5}]
    text = rows_to_csv(rows)
    assert text.splitlines()[0] == "schema_version,a,x_ns,r_ns_ratio"
    assert read_csv(io.StringIO(text)) == [{"schema_version": "1", "a": "1", "x_ns": "5", "r_ns_ratio": "0.5"}]
    assert strip_timing(rows) == [{"a": 1}]
    assert timing_column("total_ns") and not timing_column("nsets")


def test_split_experiment_invariants():
    rng = np.random.default_rng(4)
    g = random_graph(rng, 30, 0.12)
    phi, _ = compute_p_centered_coloring(g, 5)
    target = phi.size + 3
    truth = baseline_count(g, path_graph(4))
    for h in ("min", "med", "max"):
        rows = run_split_experiment(g, [phi, phi], target, h, reps=2)
        assert len(rows) == 4
        assert {r["size_after"] for r in rows} == {target}
        assert {r["count"] for r in rows} == {truth}
    with pytest.raises(ValueError):
        pad_coloring(phi, phi.size - 1, "max", rng)


def test_split_experiment_unsplittable():
    g = path_graph(3)
    with pytest.raises(ColoringError):
        run_split_experiment(g, [compute_p_centered_coloring(g, 3)[0]], 10, "max", reps=1)


def test_treedepth_experiment_anchor():
    g = gen_tree_paths(4, 2, 2, seed=0)
    phi, _ = compute_p_centered_coloring(g, 6)
    rows = run_treedepth_experiment(g, phi, 6)
    assert [r["t"] for r in rows] == [3, 4, 5]
    assert rows[0]["per_op_predicted_ns"] == rows[0]["per_op_ns"]
    assert rows[0]["per_op_observed_ns_ratio"] in (0.0, 1.0)
    assert [r["predicted_ratio"] for r in rows] == [1.0, round(116 / 57, 6), round(205 / 57, 6)]
    assert [predicted_growth(t) for t in (3, 4, 5)] == [57, 116, 205]
    capped = run_treedepth_experiment(g, phi, 6, max_sets=3)
    assert all(r["sets_counted"] <= 3 for r in capped)
    with pytest.raises(ValueError):
        run_treedepth_experiment(g, phi, 5)
