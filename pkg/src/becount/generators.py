"""Random graph models used by the experiments.

All generators draw from numpy's PCG64 bit generator
(``numpy.random.default_rng(seed)``), so a ``(params, seed)`` pair yields the
same graph on every platform.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import GraphError
from .graph import Graph

# Stochastic block matrix of the SB instance family.
SB_MATRIX = (
    (0.40, 0.30, 0.20, 0.10),
    (0.30, 0.50, 0.13, 0.05),
    (0.20, 0.13, 0.35, 0.11),
    (0.10, 0.05, 0.11, 0.45),
)

MODELS = ("chung-lu", "chung-lu-households", "sbm", "tree-paths")


@dataclass(frozen=True)
class GeneratorParams:
    model: str
    n: int = 256
    avg_degree: float | None = 6.0
    household_size: int = 4
    block_matrix: tuple[tuple[float, ...], ...] = SB_MATRIX
    d: int = 4
    s: int = 1
    ell: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.model not in MODELS:
            raise GraphError(f"unknown model {self.model!r}; expected one of {MODELS}")
        if self.model == "tree-paths" and min(self.d, self.s, self.ell) < 1:
            raise GraphError("tree-paths needs d, s, ell >= 1")


def _rng(seed) -> np.random.Generator:
    return np.random.default_rng(seed)


def _bernoulli_upper(prob: np.ndarray, rng: np.random.Generator) -> Graph:
    """Sample each pair i<j independently with probability ``prob[i, j]``."""
    n = prob.shape[0]
    iu, ju = np.triu_indices(n, k=1)
    draws = rng.random(iu.shape[0])
    keep = draws < prob[iu, ju]
    return Graph.from_edges(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def _geometric_weights(n: int, mean: float, rng: np.random.Generator) -> np.ndarray:
    # Geometric(q) has mean 1/q; rescaling fixes the realised mean exactly.
    q = min(1.0, 1.0 / mean) if mean > 1.0 else 1.0
    w = rng.geometric(q, size=n).astype(np.float64)
    return w * (n * mean / w.sum())


def _chung_lu_prob(w: np.ndarray) -> np.ndarray:
    total = w.sum()
    if total <= 0:
        return np.zeros((w.shape[0], w.shape[0]))
    return np.minimum(1.0, np.outer(w, w) / total)


def gen_chung_lu(n: int, avg_degree: float, seed=0) -> Graph:
    """Chung-Lu graph with exponentially decaying expected degrees."""
    if n < 2:
        raise GraphError("chung-lu needs n >= 2")
    if not 0 < avg_degree < n - 1:
        raise GraphError(f"avg_degree must lie in (0, n-1), got {avg_degree}")
    rng = _rng(seed)
    w = _geometric_weights(n, avg_degree, rng)
    return _bernoulli_upper(_chung_lu_prob(w), rng)


def gen_chung_lu_households(n: int, avg_degree: float, household_size: int = 4, seed=0) -> Graph:
    """Disjoint household cliques plus Chung-Lu edges between households.

    Household ``i`` is the vertex block ``[i*size, (i+1)*size)``.  The
    Chung-Lu layer targets the average degree left over after the
    ``size - 1`` intra-household neighbours.
    """
    if household_size < 1 or n % household_size:
        raise GraphError(f"n={n} is not divisible by household_size={household_size}")
    rng = _rng(seed)
    house = np.arange(n) // household_size
    residual = max(0.0, avg_degree - (household_size - 1))
    if residual > 0:
        w = _geometric_weights(n, residual, rng)
        prob = _chung_lu_prob(w)
    else:
        prob = np.zeros((n, n))
    same = house[:, None] == house[None, :]
    prob = np.where(same, 1.0, prob)
    return _bernoulli_upper(prob, rng)


def gen_sbm(n: int, block_matrix, avg_degree: float | None = None, seed=0) -> Graph:
    """Stochastic block model with ``k`` equal blocks.

    When ``avg_degree`` is given the matrix is multiplied by one global factor
    so the expected average degree matches it (probabilities are then capped
    at 1).
    """
    m = np.asarray(block_matrix, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise GraphError("block matrix must be square")
    if not np.allclose(m, m.T):
        raise GraphError("block matrix must be symmetric")
    if (m < 0).any() or (m > 1).any():
        raise GraphError("block matrix entries must lie in [0, 1]")
    k = m.shape[0]
    if n % k:
        raise GraphError(f"n={n} is not divisible into {k} equal blocks")
    rng = _rng(seed)
    b = n // k
    if avg_degree is not None:
        pairs = np.full((k, k), float(b * b))
        np.fill_diagonal(pairs, b * (b - 1) / 2.0)
        expected = (2.0 / n) * np.triu(m * pairs).sum()
        m = m * (avg_degree / expected) if expected > 0 else m
    block = np.arange(n) // b
    prob = np.minimum(1.0, m[block[:, None], block[None, :]])
    return _bernoulli_upper(prob, rng)


def gen_erdos_renyi(n: int, p: float, seed=0) -> Graph:
    return gen_sbm(n, [[p]], None, seed)


def gen_tree_paths(d: int, s: int, ell: int, seed=0) -> Graph:
    """Complete binary tree of depth ``d`` with ``s * 2**d`` pendant paths.

    Tree vertices use heap numbering (children of ``i`` are ``2i+1, 2i+2``);
    each pendant ``P_ell`` is appended as a fresh block of ``ell`` ids and
    its first vertex is joined to a uniformly chosen tree vertex.
    """
    if min(d, s, ell) < 1:
        raise GraphError("tree-paths needs d, s, ell >= 1")
    rng = _rng(seed)
    tree_n = 2 ** (d + 1) - 1
    count = s * 2 ** d
    edges = [((i - 1) // 2, i) for i in range(1, tree_n)]
    anchors = rng.integers(0, tree_n, size=count)
    nxt = tree_n
    for a in anchors.tolist():
        edges.append((a, nxt))
        edges.extend((nxt + j, nxt + j + 1) for j in range(ell - 1))
        nxt += ell
    return Graph.from_edges(nxt, edges)


def generate(params: GeneratorParams) -> Graph:
    if params.model == "chung-lu":
        return gen_chung_lu(params.n, params.avg_degree, params.seed)
    if params.model == "chung-lu-households":
        return gen_chung_lu_households(params.n, params.avg_degree, params.household_size, params.seed)
    if params.model == "sbm":
        return gen_sbm(params.n, params.block_matrix, params.avg_degree, params.seed)
    return gen_tree_paths(params.d, params.s, params.ell, params.seed)
