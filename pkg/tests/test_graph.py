import io

import numpy as np
import pytest

from becount import Graph, MotifSpec, build_motif, load_edge_list, parse_edge_list, write_edge_list
from becount.errors import GraphError, ParseError
from becount.graph import complete_graph, cycle_graph, format_edge_list

from conftest import random_graph


def test_two_edge_path():
    g = load_edge_list(io.BytesIO(b"0 1\n1 2"))
    assert g.n == 3
    assert sorted(g.edges()) == [(0, 1), (1, 2)]


def test_duplicate_edge_is_error():
    with pytest.raises(GraphError, match="duplicate"):
        parse_edge_list("0 1\n0 1")
    with pytest.raises(GraphError, match="duplicate"):
        parse_edge_list("0 1\n1 0")


def test_isolated_vertex_line():
    g = parse_edge_list("5")
    assert g.n == 6
    assert g.num_edges == 0
    assert g.degree(5) == 0


@pytest.mark.parametrize("text", ["0 0", "1 2 3", "a b", "-1 2"])
def test_malformed_lines(text):
    with pytest.raises((GraphError, ParseError)):
        parse_edge_list(text)


def test_comments_and_blank_lines():
    g = parse_edge_list("# header\n\n0 1\n  \n# x\n2 1\n")
    assert sorted(g.edges()) == [(0, 1), (1, 2)]


def test_adjacency_invariants_rejected():
    with pytest.raises(GraphError):
        Graph(2, [[1], []])
    with pytest.raises(GraphError):
        Graph(2, [[0], []])
    with pytest.raises(GraphError):
        Graph(2, [[1, 1], [0, 0]])


def test_round_trip(tmp_path, rng):
    for _ in range(20):
        g = random_graph(rng, int(rng.integers(1, 15)), 0.3)
        path = tmp_path / "g.txt"
        write_edge_list(g, path)
        assert load_edge_list(path) == g
        assert parse_edge_list(format_edge_list(g)) == g


def test_csr_matches_adjacency(rng):
    g = random_graph(rng, 12, 0.4)
    indptr, indices = g.csr
    for v in range(g.n):
        assert indices[indptr[v]:indptr[v + 1]].tolist() == sorted(g.neighbors(v))
    assert g.degrees.tolist() == [g.degree(v) for v in range(g.n)]
    assert int(g.degrees.sum()) == 2 * g.num_edges


def test_motifs():
    p4 = build_motif("path:4")
    assert p4.n == 4 and sorted(p4.edges()) == [(0, 1), (1, 2), (2, 3)]
    s5 = build_motif("star:5")
    assert s5.n == 5 and s5.degree(0) == 4 and all(s5.degree(v) == 1 for v in range(1, 5))
    k3 = build_motif("clique:3")
    assert k3.n == 3 and k3.num_edges == 3
    assert build_motif(MotifSpec("cycle", 5)) == cycle_graph(5)


def test_motif_from_file(tmp_path):
    f = tmp_path / "m.txt"
    f.write_text("0 1\n1 2\n2 0\n")
    assert build_motif(f"file:{f}") == complete_graph(3)
    f.write_text("0 1\n2 3\n")
    with pytest.raises(GraphError):
        build_motif(f"file:{f}")


@pytest.mark.parametrize("spec", ["path", "tree:4", "path:x", "path:1", "cycle:2"])
def test_bad_motif_specs(spec):
    with pytest.raises((GraphError, ParseError)):
        build_motif(spec)


def test_components_and_relabel(rng):
    g = Graph.from_edges(6, [(0, 1), (2, 3), (3, 4)])
    assert g.components() == [[0, 1], [2, 3, 4], [5]]
    assert g.components([0, 2, 4]) == [[0], [2], [4]]
    perm = rng.permutation(6).tolist()
    h = g.relabel(perm)
    assert h.num_edges == g.num_edges
    assert all(h.has_edge(perm[u], perm[v]) for u, v in g.edges())


def test_induced_subgraph():
    g = cycle_graph(5)
    sub, old = g.induced_subgraph([0, 1, 2])
    assert old == [0, 1, 2]
    assert sorted(sub.edges()) == [(0, 1), (1, 2)]
    assert np.array_equal(sub.degrees, np.array([1, 2, 1]))
