import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import hypergraphs
from hypersample import generators as gen
from hypersample.errors import DBelowCeilAvgError, KBelowCeilAvgError
from hypersample.hypergraph import Hypergraph, dual, edges_confined
from hypersample.rewiring import edge_rewire, incidence_multiset, vertex_rewire


def confined_set(H, A):
    A = set(A)
    return {i for i, e in enumerate(H.edges) if set(e) <= A}


def test_vertex_identity_when_capped():
    H = gen.random_regular_uniform(12, 3, 2, seed=1)
    H2, log, V0 = vertex_rewire(H, 2)
    assert H2 == H and log.count == 0 and not V0


def test_edge_identity_on_uniform():
    H = gen.complete_uniform(6, 3)
    H2, log, E0 = edge_rewire(H, 3)
    assert H2 == H and log.count == 0 and not E0


def test_star_hub_flattened():
    H = Hypergraph(7, [(0, i) for i in range(1, 7)])
    D = math.ceil(H.avg_degree)
    H2, log, V0 = vertex_rewire(H, D)
    assert V0 == {0}
    assert H2.max_degree <= D
    assert H2.incidences == H.incidences
    assert H2.sizes.tolist() == H.sizes.tolist()


def test_one_big_edge_flattened():
    H = Hypergraph(8, [tuple(range(8)), (0,), (1,), (2,), (3,)])
    K = math.ceil(H.avg_uniformity)
    H2, log, E0 = edge_rewire(H, K)
    assert E0 == {0}
    assert H2.max_uniformity <= K
    assert H2.degrees.tolist() == H.degrees.tolist()


def test_cap_below_average_rejected():
    H = gen.complete_uniform(5, 2)
    with pytest.raises(DBelowCeilAvgError):
        vertex_rewire(H, 3)
    with pytest.raises(KBelowCeilAvgError):
        edge_rewire(Hypergraph(4, [(0, 1, 2), (3,)]), 1)


def check_vertex(H, D, rng, samples=20):
    H2, log, V0 = vertex_rewire(H, D)
    assert H2.max_degree <= D
    assert H2.incidences == H.incidences
    assert H2.sizes.tolist() == H.sizes.tolist()
    assert not V0 or len(V0) < H.avg_degree / D * H.n
    for v in range(H.n):
        if v not in V0:
            assert H2.degrees[v] >= H.degrees[v]
    assert log.count <= log.initial_excess
    for _ in range(samples):
        A = np.flatnonzero(rng.random(H.n) < rng.random()).tolist()
        assert confined_set(H, set(A) | V0) >= confined_set(H2, A)
    return H2, log


def check_edge(H, K, rng, samples=20):
    H2, log, E0 = edge_rewire(H, K)
    assert H2.max_uniformity <= K
    assert H2.incidences == H.incidences
    assert H2.degrees.tolist() == H.degrees.tolist()
    assert not E0 or len(E0) < H.avg_uniformity / K * H.m
    for _ in range(samples):
        A = np.flatnonzero(rng.random(H.n) < rng.random()).tolist()
        assert confined_set(H, A) >= confined_set(H2, A) - E0
    return H2, log


@settings(max_examples=40)
@given(hypergraphs(max_n=10, max_m=12), st.integers(0, 3), st.integers(0, 2**32 - 1))
def test_vertex_rewire_properties(H, extra, seed):
    D = math.ceil(H.avg_degree) + extra
    check_vertex(H, D, np.random.default_rng(seed))


@settings(max_examples=40)
@given(hypergraphs(max_n=10, max_m=12, min_size=1), st.integers(0, 3), st.integers(0, 2**32 - 1))
def test_edge_rewire_properties(H, extra, seed):
    K = math.ceil(H.avg_uniformity) + extra
    check_edge(H, K, np.random.default_rng(seed))


@settings(max_examples=40)
@given(hypergraphs(max_n=10, max_m=12, min_size=1), st.integers(0, 2))
def test_edge_rewire_is_dual_vertex_rewire(H, extra):
    K = math.ceil(H.avg_uniformity) + extra
    E, _, E0 = edge_rewire(H, K)
    V, _, V0 = vertex_rewire(dual(H), K)
    assert E0 == V0
    assert incidence_multiset(E) == incidence_multiset(dual(V))


def test_irregular_instances():
    rng = np.random.default_rng(3)
    for seed in range(10):
        H = gen.random_irregular(40, 30, 6, seed)
        check_vertex(H, math.ceil(H.avg_degree), rng)
        check_edge(H, math.ceil(H.avg_uniformity), rng)
