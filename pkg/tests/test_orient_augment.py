import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from becount import ArcGraph, Graph, gen_tree_paths
from becount.color import (augment_step, augmentation_candidates, degeneracy_order, greedy_color,
                           orient_degeneracy, orient_sandpile)
from becount.color.greedy import PRIORITIZATIONS
from becount.graph import complete_graph

from conftest import random_graph


def peel_degeneracy(g: Graph) -> int:
    """Independent degeneracy: repeatedly delete a minimum-degree vertex."""
    alive = set(range(g.n))
    best = 0
    while alive:
        deg = {v: sum(1 for u in g.adjacency[v] if u in alive) for v in alive}
        v = min(alive, key=deg.__getitem__)
        best = max(best, deg[v])
        alive.remove(v)
    return best


def arcs_match_edges(a: ArcGraph, g: Graph) -> bool:
    pairs = {(min(u, v), max(u, v)) for u, v, _ in a.arcs()}
    return pairs == set(g.edges()) and a.num_arcs == g.num_edges


def test_degeneracy_examples():
    assert orient_degeneracy(gen_tree_paths(3, 2, 2, seed=1)).max_indegree() == 1
    assert orient_degeneracy(complete_graph(4)).max_indegree() == 3


def test_degeneracy_matches_peeling(rng):
    for _ in range(50):
        g = random_graph(rng, int(rng.integers(2, 40)), float(rng.uniform(0.05, 0.5)))
        a = orient_degeneracy(g)
        assert a.is_acyclic()
        assert arcs_match_edges(a, g)
        assert a.max_indegree() == peel_degeneracy(g) == degeneracy_order(g)[1]


def test_sandpile_examples():
    assert orient_sandpile(gen_tree_paths(3, 2, 2, seed=1)).max_indegree() <= 2
    empty = orient_sandpile(Graph.empty(5))
    assert empty.num_arcs == 0


def test_sandpile_bounds(rng):
    for _ in range(50):
        g = random_graph(rng, int(rng.integers(2, 40)), float(rng.uniform(0.05, 0.5)))
        a = orient_sandpile(g)
        assert a.is_acyclic()
        assert arcs_match_edges(a, g)
        assert all(w == 1 for _, _, w in a.arcs())
        assert a.max_indegree() <= 2 * peel_degeneracy(g)


def build(n, arcs):
    a = ArcGraph(n)
    for u, v, w in arcs:
        a.add_arc(u, v, w)
    return a


def test_transitive_example():
    a = build(3, [(0, 1, 1), (1, 2, 1)])
    out = augment_step(a, "tfa", 2)
    assert out.has_arc(0, 2) and out.weight(0, 2) == 2
    assert out.num_arcs == 3
    trans, frat = augmentation_candidates(a, "tfa", 2)
    assert trans == {(0, 2)} and frat == set()


def test_fraternal_example():
    a = build(3, [(0, 2, 1), (1, 2, 1)])
    out = augment_step(a, "tfa", 2)
    assert out.adjacent(0, 1)
    assert out.has_arc(0, 1) != out.has_arc(1, 0)
    assert out.is_acyclic()


def test_dtfa_weight_truncation():
    a = build(3, [(0, 2, 2), (2, 1, 2)])
    assert not augment_step(a, "dtfa", 3).adjacent(0, 1)
    assert augment_step(a, "dtfa", 4).has_arc(0, 1)
    assert augment_step(a, "tfa", 3).has_arc(0, 1)


def test_augment_errors():
    a = build(2, [(0, 1, 1)])
    with pytest.raises(ValueError):
        augment_step(a, "xfa", 2)
    with pytest.raises(ValueError):
        augment_step(a, "tfa", 1)


def test_augment_monotone_and_fixpoint(rng):
    for _ in range(20):
        g = random_graph(rng, 12, 0.25)
        a = orient_degeneracy(g)
        for it in range(2, 12):
            b = augment_step(a, "tfa", it)
            assert b.is_acyclic()
            assert set((u, v) for u, v, _ in a.arcs()) <= set((u, v) for u, v, _ in b.arcs())
            if b.num_arcs == a.num_arcs:
                again = augment_step(b, "tfa", it + 1)
                assert again.num_arcs == b.num_arcs
                break
            a = b
        else:
            pytest.fail("augmentation did not reach a fixpoint")


def test_augment_leaves_input_untouched():
    a = build(3, [(0, 1, 1), (1, 2, 1)])
    augment_step(a, "tfa", 2)
    assert a.num_arcs == 2


@pytest.mark.parametrize("prio", PRIORITIZATIONS)
def test_greedy_examples(prio):
    assert greedy_color(orient_degeneracy(Graph.empty(6)), prio).size == 1
    assert greedy_color(orient_degeneracy(complete_graph(4)), prio).size == 4


@pytest.mark.parametrize("prio", PRIORITIZATIONS)
def test_greedy_proper(rng, prio):
    for _ in range(100):
        g = random_graph(rng, int(rng.integers(1, 25)), float(rng.uniform(0.05, 0.6)))
        a = augment_step(orient_degeneracy(g), "tfa", 2)
        phi = greedy_color(a, prio)
        assert all(phi.color[u] != phi.color[v] for u, v, _ in a.arcs())
        assert sorted(set(phi.color.tolist())) == list(range(phi.size))


def test_greedy_unknown():
    with pytest.raises(ValueError):
        greedy_color(ArcGraph(2), "random")


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 14), st.floats(0.0, 0.7), st.integers(0, 10 ** 6))
def test_orientations_acyclic_property(n, p, seed):
    g = random_graph(np.random.default_rng(seed), n, p)
    for orient in (orient_degeneracy, orient_sandpile):
        a = orient(g)
        assert a.is_acyclic()
        assert arcs_match_edges(a, g)
