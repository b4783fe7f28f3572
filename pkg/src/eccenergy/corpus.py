"""Small-graph corpora: connected graphs up to isomorphism, and trees.

Graphs on at most 7 vertices come from the networkx graph atlas. Larger
orders are produced by adding a vertex to every connected graph one size
smaller (every connected graph has a non-cut vertex), deduplicated by
Weisfeiler-Lehman hash and an exact isomorphism test.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterator

import networkx as nx

from .graph import Graph

ATLAS_MAX_ORDER = 7


def from_networkx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph.from_edges(len(index), ((index[u], index[v]) for u, v in h.edges()))


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


@lru_cache(maxsize=None)
def _atlas_by_order() -> dict[int, tuple[Graph, ...]]:
    out: dict[int, list[Graph]] = {}
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() and nx.is_connected(h):
            out.setdefault(h.number_of_nodes(), []).append(from_networkx(h))
    return {k: tuple(v) for k, v in out.items()}


@lru_cache(maxsize=None)
def _augmented(n: int) -> tuple[Graph, ...]:
    buckets: dict[str, list[nx.Graph]] = {}
    found: list[Graph] = []
    for base in connected_graphs(n - 1):
        for r in range(1, n):
            for nbrs in combinations(range(n - 1), r):
                g = Graph(n, base.edges | {(u, n - 1) for u in nbrs})
                h = to_networkx(g)
                key = nx.weisfeiler_lehman_graph_hash(h, iterations=3)
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(h, other) for other in bucket):
                    continue
                bucket.append(h)
                found.append(g)
    return tuple(found)


def connected_graphs(n: int) -> tuple[Graph, ...]:
    """All connected graphs on exactly ``n`` vertices, one per isomorphism class."""
    if n < 1:
        return ()
    if n <= ATLAS_MAX_ORDER:
        return _atlas_by_order()[n]
    return _augmented(n)


def connected_corpus(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        yield from connected_graphs(n)


def trees(n: int) -> Iterator[Graph]:
    """Unlabelled trees on ``n`` vertices."""
    if n == 1:
        yield Graph(1, frozenset())
        return
    for t in nx.nonisomorphic_trees(n):
        yield from_networkx(t)
