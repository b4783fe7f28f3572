import itertools

import numpy as np
import pytest
from hypothesis import strategies as st

from eccenergy.corpus import connected_corpus
from eccenergy.graph import Graph


@pytest.fixture(scope="session")
def small_corpus():
    """Connected graphs on 1..6 vertices, one per isomorphism class (143 graphs)."""
    return list(connected_corpus(6))


@st.composite
def graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, frozenset(p for p, keep in zip(pairs, mask) if keep))


@st.composite
def connected_graphs(draw, min_n=1, max_n=9):
    """Random spanning tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    pairs = list(itertools.combinations(range(n), 2))
    extra = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs))) if pairs else []
    edges.update(extra)
    return Graph(n, frozenset(edges))


def floyd_warshall(g: Graph) -> np.ndarray:
    """Independent all-pairs oracle; unreachable pairs stay at infinity."""
    d = np.full((g.n, g.n), np.inf)
    np.fill_diagonal(d, 0)
    for u, v in g.edges:
        d[u, v] = d[v, u] = 1
    for k in range(g.n):
        d = np.minimum(d, d[:, [k]] + d[[k], :])
    return d


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, status, secs in sorted(mod.RESULTS):
        terminalreporter.write_line(f"[{status}] criterion {number:2d}: {title} ({secs:.2f} s)")
