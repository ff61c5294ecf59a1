import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from becount import (ColorConfig, Coloring, Graph, compute_p_centered_coloring, gen_tree_paths,
                     is_centered, is_p_centered, merge_color_classes, path_graph,
                     split_color_class)
from becount.color import (format_coloring, high_degree_threshold, parse_coloring,
                           uncentered_color_set)
from becount.errors import ColoringError, ParseError
from becount.graph import complete_graph

from conftest import connected_subsets, p_centered_oracle, random_coloring, random_graph

P4 = path_graph(4)


def test_coloring_normalizes_and_partitions():
    phi = Coloring.from_colors([7, 3, 7, 9])
    assert phi.color.tolist() == [1, 0, 1, 2]
    assert phi.size == 3
    assert phi.classes == ((1,), (0, 2), (3,))
    with pytest.raises(ColoringError):
        Coloring([0, 2])


def test_coloring_text_round_trip():
    phi = Coloring([0, 1, 1, 2])
    assert parse_coloring(format_coloring(phi), 4) == phi
    with pytest.raises((ParseError, ColoringError)):
        parse_coloring("0 0\n", 2)


def test_is_centered_examples():
    assert is_centered(P4, Coloring.from_colors([1, 2, 3, 1]), range(4))
    assert not is_centered(P4, Coloring.from_colors([1, 2, 1, 2]), range(4))


def test_is_centered_matches_enumeration(rng):
    for _ in range(200):
        n = int(rng.integers(1, 9))
        g = random_graph(rng, n, float(rng.uniform(0.2, 0.7)))
        phi = random_coloring(rng, n, int(rng.integers(1, n + 1)))
        for comp in g.components():
            expected = all(
                any([int(phi.color[v]) for v in sub].count(int(phi.color[v])) == 1 for v in sub)
                for sub in connected_subsets(g) if set(sub) <= set(comp))
            assert is_centered(g, phi, comp) == expected


def test_is_p_centered_examples():
    assert is_p_centered(P4, Coloring.from_colors([1, 2, 1, 2]), 2)
    assert not is_p_centered(P4, Coloring.from_colors([1, 2, 1, 2]), 3)
    assert uncentered_color_set(P4, Coloring.from_colors([1, 2, 1, 2]), 3) == (0, 1)


def test_is_p_centered_six_vertex_oracle(rng):
    for _ in range(300):
        g = random_graph(rng, 6, float(rng.uniform(0.2, 0.8)))
        phi = random_coloring(rng, 6, int(rng.integers(1, 7)))
        for p in (2, 3, 4):
            assert is_p_centered(g, phi, p) == p_centered_oracle(g, phi, p)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 8), st.floats(0.1, 0.9), st.integers(1, 8), st.integers(2, 5),
       st.integers(0, 10 ** 6))
def test_is_p_centered_property(n, dens, k, p, seed):
    r = np.random.default_rng(seed)
    g = random_graph(r, n, dens)
    phi = random_coloring(r, n, k)
    assert is_p_centered(g, phi, p) == p_centered_oracle(g, phi, p)


def test_compute_examples():
    phi, st_ = compute_p_centered_coloring(Graph.empty(7), 5)
    assert phi.size == 1 and st_.iterations == 1
    phi, _ = compute_p_centered_coloring(P4, 5)
    assert is_p_centered(P4, phi, 5) and is_centered(P4, phi, range(4))
    assert phi.size >= 3


def test_compute_degenerate_inputs():
    assert compute_p_centered_coloring(Graph.empty(0), 3)[0].size == 0
    assert compute_p_centered_coloring(Graph.empty(1), 3)[0].size == 1
    with pytest.raises(ValueError):
        compute_p_centered_coloring(P4, 1)


@pytest.mark.parametrize("cfg", [
    ColorConfig(),
    ColorConfig(orientation="sandpile", augmentation="dtfa", prioritization="dsatur"),
    ColorConfig(prioritization="high-degree", recolor_attempts=0, merge_classes=False),
    ColorConfig(preprocess_high_degree=True, postprocess_degree_one=True),
])
def test_compute_is_p_centered(rng, cfg):
    for _ in range(25):
        n = int(rng.integers(2, 9))
        g = random_graph(rng, n, float(rng.uniform(0.2, 0.7)))
        for p in (2, 3, 4):
            phi, stats = compute_p_centered_coloring(g, p, cfg, seed=int(rng.integers(100)))
            assert p_centered_oracle(g, phi, p)
            assert stats.colors_final == phi.size <= stats.colors_assembled


def test_compute_larger_graphs_and_options(rng):
    cfg = ColorConfig(preprocess_high_degree=True, postprocess_degree_one=True)
    for seed in range(4):
        g = gen_tree_paths(4, 2, 2, seed=seed)
        phi, stats = compute_p_centered_coloring(g, 4, cfg, seed=seed)
        assert is_p_centered(g, phi, 4)
        assert stats.degree_one_removed > 0
    g = random_graph(rng, 40, 0.15)
    phi, stats = compute_p_centered_coloring(g, 4, cfg)
    assert is_p_centered(g, phi, 4)
    assert stats.high_degree_removed == sum(g.degree(v) >= high_degree_threshold(40) for v in range(40))


def test_compute_determinism(rng):
    g = random_graph(rng, 40, 0.12)
    a = compute_p_centered_coloring(g, 5, seed=3)[0]
    b = compute_p_centered_coloring(g, 5, seed=3)[0]
    assert a == b


def test_iteration_cap(rng):
    g = random_graph(rng, 30, 0.3)
    with pytest.raises(ColoringError, match="iteration"):
        compute_p_centered_coloring(g, 5, ColorConfig(max_iterations=1))


def test_high_degree_threshold():
    assert [high_degree_threshold(n) for n in (1, 2, 16, 17, 81, 82, 1024)] == [1, 2, 2, 3, 3, 4, 6]


def test_config_validation():
    for bad in ({"orientation": "x"}, {"augmentation": "x"}, {"prioritization": "x"},
                {"recolor_attempts": -1}, {"max_iterations": 0}):
        with pytest.raises(ValueError):
            ColorConfig(**bad)


def test_merge_examples():
    k3 = complete_graph(3)
    assert merge_color_classes(k3, Coloring([0, 1, 2]), 2).size == 3
    assert merge_color_classes(Graph.empty(5), Coloring([0, 1, 2, 3, 4]), 3).size == 1


def test_merge_on_k3_exhaustive():
    k3 = complete_graph(3)
    for labels in ([0, 0, 1], [0, 1, 0], [1, 0, 0], [0, 0, 0]):
        assert not is_p_centered(k3, Coloring.from_colors(labels), 2)
    with pytest.raises(ColoringError):
        merge_color_classes(k3, Coloring.from_colors([0, 0, 1]), 2)


def test_merge_keeps_p_centered(rng):
    for _ in range(60):
        n = int(rng.integers(2, 9))
        g = random_graph(rng, n, float(rng.uniform(0.1, 0.6)))
        p = int(rng.integers(2, 5))
        merged = merge_color_classes(g, Coloring(list(range(n))), p)
        assert p_centered_oracle(g, merged, p)


def sizes(phi):
    return sorted(phi.class_sizes(), reverse=True)


def test_split_examples():
    rng = np.random.default_rng(0)
    phi = Coloring.from_colors([0, 0, 0, 0, 1, 1, 2, 2, 3])
    assert sizes(split_color_class(phi, "max", rng)) == [2, 2, 2, 2, 1]
    # A class of 3 halves into 2 + 1; see the decisions ledger.
    phi = Coloring.from_colors([0, 0, 0, 1])
    assert sizes(split_color_class(phi, "min", rng)) == [2, 1, 1]


def test_split_selection_rules():
    rng = np.random.default_rng(0)
    phi = Coloring.from_colors([0] * 6 + [1] * 4 + [2] * 2 + [3])
    assert sizes(split_color_class(phi, "min", rng)) == [6, 4, 1, 1, 1]
    assert sizes(split_color_class(phi, "med", rng)) == [6, 2, 2, 2, 1]
    assert sizes(split_color_class(phi, "max", rng)) == [4, 3, 3, 2, 1]
    with pytest.raises(ColoringError):
        split_color_class(Coloring([0, 1, 2]), "max", rng)
    with pytest.raises(ValueError):
        split_color_class(phi, "mean", rng)


def test_split_partition_invariants():
    rng = np.random.default_rng(1)
    phi = Coloring.from_colors(rng.integers(0, 5, size=200).tolist())
    for i in range(1000):
        before = phi
        phi = split_color_class(phi, ("min", "med", "max")[i % 3], rng)
        assert phi.n == 200 and phi.size == before.size + 1
        assert sorted(set(phi.color.tolist())) == list(range(phi.size))
        assert all(phi.class_sizes())
        for cls in phi.classes:
            assert len({int(before.color[v]) for v in cls}) == 1
        if max(phi.class_sizes()) < 2:
            break


def test_split_preserves_p_centered(rng):
    for _ in range(40):
        g = random_graph(rng, 8, 0.35)
        phi, _ = compute_p_centered_coloring(g, 3)
        if max(phi.class_sizes()) < 2:
            continue
        for h in ("min", "med", "max"):
            assert p_centered_oracle(g, split_color_class(phi, h, rng), 3)
