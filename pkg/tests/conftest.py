import numpy as np
from hypothesis import settings
from hypothesis import strategies as st

from hypersample.hypergraph import Hypergraph

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@st.composite
def hypergraphs(draw, max_n=9, max_m=10, min_size=0, max_size=None, min_m=1):
    n = draw(st.integers(1, max_n))
    hi = n if max_size is None else min(n, max_size)
    lo = min(min_size, hi)
    m = draw(st.integers(min_m, max_m))
    edges = [tuple(sorted(draw(st.sets(st.integers(0, n - 1), min_size=lo, max_size=hi)))) for _ in range(m)]
    return Hypergraph(n, edges)


@st.composite
def uniform_hypergraphs(draw, max_n=9, max_m=10, k=None):
    n = draw(st.integers(2, max_n))
    kk = k if k is not None else draw(st.integers(1, min(4, n)))
    m = draw(st.integers(1, max_m))
    edges = [tuple(sorted(draw(st.sets(st.integers(0, n - 1), min_size=kk, max_size=kk)))) for _ in range(m)]
    return Hypergraph(n, edges)


def subset_of(draw, n):
    return sorted(draw(st.sets(st.integers(0, n - 1), max_size=n)))


def random_subset(rng: np.random.Generator, n: int, size: int):
    return sorted(rng.choice(n, size=size, replace=False).tolist())


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
