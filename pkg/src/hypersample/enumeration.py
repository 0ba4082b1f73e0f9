"""Chunked enumeration of all fixed-size vertex subsets with their per-edge hit counts."""

from __future__ import annotations

from itertools import combinations, islice
from typing import Iterator

import numpy as np

from .distributions import binom
from .errors import BudgetExceededError
from .hypergraph import Hypergraph

DEFAULT_BUDGET = 10**7


def check_budget(n: int, size: int, budget: int) -> int:
    total = binom(n, size)
    if total > budget:
        raise BudgetExceededError(f"C({n}, {size}) = {total} subsets exceeds the enumeration budget {budget}")
    return total


def subset_hits(H: Hypergraph, size: int, budget: int = DEFAULT_BUDGET, chunk: int = 8192) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """Yield ``(combos, hits)`` blocks over all ``size``-subsets in lexicographic order.

    ``combos`` is (c, size) with the members of each subset; ``hits[a, e]`` is the
    number of vertex occurrences of edge e inside subset a. The block product is
    done in float64, which is exact for these small counts.
    """
    check_budget(H.n, size, budget)
    inc = H.incidence_matrix()
    it = combinations(range(H.n), size)
    while True:
        block = list(islice(it, chunk))
        if not block:
            return
        combos = np.array(block, dtype=np.int64).reshape(len(block), size)
        ind = np.zeros((len(block), H.n))
        ind[np.arange(len(block))[:, None], combos] = 1.0
        yield combos, np.rint(ind @ inc).astype(np.int64)


def hit_count_rows(hits: np.ndarray, kmax: int) -> np.ndarray:
    """Turn per-edge hits (c, m) into per-subset tallies (c, kmax + 1) of edges hit j times."""
    out = np.zeros((hits.shape[0], kmax + 1), dtype=np.int64)
    for j in range(kmax + 1):
        out[:, j] = np.count_nonzero(hits == j, axis=1)
    return out
