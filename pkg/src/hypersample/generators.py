"""Hypergraph generators.

Every random generator takes an explicit integer seed and is deterministic
given it (numpy ``PCG64`` streams seeded through ``SeedSequence``).
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

import networkx as nx
import numpy as np

from .errors import GenerationRetriesExceededError, InfeasibleParametersError
from .hypergraph import Hypergraph, WalkHypergraph


def complete_uniform(n: int, k: int) -> Hypergraph:
    """All C(n, k) k-subsets of range(n), in lexicographic order."""
    if not 1 <= k <= n:
        raise InfeasibleParametersError(f"complete_uniform needs 1 <= k <= n, got n={n}, k={k}")
    return Hypergraph(n, tuple(combinations(range(n), k)))


def singleton_repeated(n: int, r: int) -> Hypergraph:
    """Edges {0}, ..., {n-1}, each repeated r times (average uniformity 1, sparsity r)."""
    if int(r) != r or r < 1:
        raise InfeasibleParametersError(f"repeat count must be a positive integer, got {r}")
    return Hypergraph(n, tuple((v,) for v in range(n) for _ in range(int(r))))


def random_regular_uniform(n: int, k: int, d: int, seed: int, max_retries: int = 10_000) -> Hypergraph:
    """d-regular k-uniform hypergraph from the configuration model.

    The n*d vertex stubs are shuffled and cut into consecutive groups of k;
    a pairing with a repeated vertex inside some group is thrown away and
    redrawn, which leaves the result uniform over duplicate-free pairings.
    """
    if k < 1 or d < 1 or n < k:
        raise InfeasibleParametersError(f"need 1 <= k <= n and d >= 1, got n={n}, k={k}, d={d}")
    if (n * d) % k:
        raise InfeasibleParametersError(f"n*d = {n * d} is not divisible by k = {k}")
    rng = np.random.default_rng(seed)
    stubs = np.repeat(np.arange(n, dtype=np.int64), d)
    for _ in range(max_retries):
        groups = rng.permutation(stubs).reshape(-1, k)
        srt = np.sort(groups, axis=1)
        if k == 1 or not np.any(srt[:, 1:] == srt[:, :-1]):
            return Hypergraph(n, tuple(map(tuple, srt.tolist())))
    raise GenerationRetriesExceededError(f"no duplicate-free pairing in {max_retries} attempts")


def random_uniform(n: int, k: int, m: int, seed: int) -> Hypergraph:
    """m independent uniformly random k-subsets (not regular in general)."""
    if not 1 <= k <= n or m < 1:
        raise InfeasibleParametersError(f"need 1 <= k <= n and m >= 1, got n={n}, k={k}, m={m}")
    rng = np.random.default_rng(seed)
    return Hypergraph(n, tuple(tuple(sorted(rng.choice(n, size=k, replace=False).tolist())) for _ in range(m)))


def random_irregular(n: int, m: int, max_size: int, seed: int, skew: float = 1.5) -> Hypergraph:
    """Edges of random size in [1, max_size] drawn with power-law vertex weights.

    Produces hubs and oversized edges; useful as input for the rewiring code.
    """
    if max_size < 1 or max_size > n or m < 1:
        raise InfeasibleParametersError("need 1 <= max_size <= n and m >= 1")
    rng = np.random.default_rng(seed)
    weights = 1.0 / np.arange(1, n + 1) ** skew
    weights = rng.permutation(weights / weights.sum())
    sizes = rng.integers(1, max_size + 1, size=m)
    return Hypergraph(n, tuple(tuple(sorted(rng.choice(n, size=int(s), replace=False, p=weights).tolist())) for s in sizes))


def cycle_adjacency(n: int) -> list[list[int]]:
    return [[(v - 1) % n, (v + 1) % n] for v in range(n)]


def random_regular_graph_adjacency(n: int, d: int, seed: int) -> list[list[int]]:
    g = nx.random_regular_graph(d, n, seed=seed)
    return [sorted(g.neighbors(v)) for v in range(n)]


def walk_hypergraph(adjacency: Sequence[Sequence[int]], k: int) -> WalkHypergraph:
    """Edges are all walks v_0 v_1 ... v_{k-1} in the graph given by adjacency lists.

    For a d-regular graph on n vertices this gives n * d**(k-1) edges, ordered
    lexicographically by (start vertex, neighbour positions).
    """
    n = len(adjacency)
    if k < 1:
        raise InfeasibleParametersError("walk length k must be >= 1")
    degs = {len(nb) for nb in adjacency}
    if len(degs) != 1 or 0 in degs:
        raise InfeasibleParametersError("walk_hypergraph expects a regular graph with positive degree")
    walks: list[tuple[int, ...]] = [(v,) for v in range(n)]
    for _ in range(k - 1):
        walks = [w + (u,) for w in walks for u in adjacency[w[-1]]]
    return WalkHypergraph(n, walks)
