import itertools
import math

import numpy as np
import pytest

from becount import Graph, baseline_count, exhaustive_count, iter_embeddings, path_graph, star_graph
from becount.errors import GraphError
from becount.graph import complete_graph, cycle_graph

from conftest import random_graph

P3, P4, S4 = path_graph(3), path_graph(4), star_graph(4)


def test_edge_motif(rng):
    for _ in range(10):
        g = random_graph(rng, 15, 0.3)
        assert baseline_count(g, path_graph(2)) == 2 * g.num_edges


def test_examples():
    assert baseline_count(complete_graph(3), P3) == 0
    assert baseline_count(star_graph(4), S4) == 6
    assert exhaustive_count(complete_graph(4), complete_graph(3)) == 24
    assert exhaustive_count(cycle_graph(4), P4) == 0


def test_all_graphs_up_to_five_vertices():
    for n in range(1, 6):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            g = Graph.from_edges(n, [e for i, e in enumerate(pairs) if mask >> i & 1])
            for H in (P3, P4, S4):
                assert baseline_count(g, H) == exhaustive_count(g, H)


def test_random_graphs_up_to_eight_vertices(rng):
    for _ in range(300):
        g = random_graph(rng, int(rng.integers(1, 9)), float(rng.uniform(0.1, 0.8)))
        for H in (P3, P4, S4):
            assert baseline_count(g, H) == exhaustive_count(g, H)


def test_relabel_invariant(rng):
    for _ in range(30):
        g = random_graph(rng, 10, 0.35)
        perm = rng.permutation(10).tolist()
        for H in (P3, P4, star_graph(5)):
            assert baseline_count(g, H) == baseline_count(g.relabel(perm), H)


def test_iter_embeddings_are_induced(rng):
    g = random_graph(rng, 9, 0.4)
    embs = list(iter_embeddings(g, P4))
    assert len(embs) == baseline_count(g, P4)
    for emb in embs:
        assert len(set(emb)) == 4
        for a, b in itertools.combinations(range(4), 2):
            assert P4.has_edge(a, b) == g.has_edge(emb[a], emb[b])


def test_stars_automorphisms():
    for n in range(3, 7):
        assert baseline_count(star_graph(n), star_graph(n)) == math.factorial(n - 1)


def test_errors():
    with pytest.raises(GraphError):
        baseline_count(path_graph(3), Graph.from_edges(3, [(0, 1)]))
    with pytest.raises(GraphError):
        exhaustive_count(path_graph(20), P3)


def test_small_host():
    assert baseline_count(path_graph(2), P3) == 0
    assert baseline_count(Graph.empty(0), P3) == 0
