"""Shared helpers: small random graphs, a definition-level p-centered oracle,
and the collector that prints one acceptance line per criterion."""

from __future__ import annotations

import itertools

import numpy as np
import pytest

from becount import Coloring, Graph

ACCEPTANCE_LINES: list[str] = []


def record(criterion: int, ok: bool, detail: str) -> None:
    line = f"criterion {criterion:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


def random_graph(rng: np.random.Generator, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_coloring(rng: np.random.Generator, n: int, k: int) -> Coloring:
    return Coloring.from_colors(rng.integers(0, max(1, k), size=n).tolist())


def connected_subsets(g: Graph):
    """Every non-empty vertex subset inducing a connected subgraph."""
    for r in range(1, g.n + 1):
        for sub in itertools.combinations(range(g.n), r):
            if len(g.components(sub)) == 1:
                yield sub


def p_centered_oracle(g: Graph, phi: Coloring, p: int) -> bool:
    """Definition check: every connected subgraph has a unique color or
    uses at least p colors."""
    for sub in connected_subsets(g):
        cols = [int(phi.color[v]) for v in sub]
        if len(set(cols)) >= p:
            continue
        if not any(cols.count(c) == 1 for c in set(cols)):
            return False
    return True


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
