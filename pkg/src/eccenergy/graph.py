"""Simple undirected graphs: construction, text formats and BFS distances.

Vertices are the contiguous integers ``0..n-1``. Distances are exact
integers; nothing in this module touches floating point.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import DisconnectedGraphError, DomainError, Graph6Error, GraphValidationError

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on ``n`` vertices.

    ``edges`` holds each unordered pair once as ``(min, max)``.
    """

    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        if self.n < 0:
            raise GraphValidationError(f"vertex count must be nonnegative, got {self.n}")
        for u, v in self.edges:
            if u == v:
                raise GraphValidationError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise GraphValidationError(f"edge ({u}, {v}) not normalised or outside 0..{self.n - 1}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        """Build a graph, rejecting self-loops, duplicates and bad indices."""
        seen: set[Edge] = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphValidationError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphValidationError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            e = _norm(u, v)
            if e in seen:
                raise GraphValidationError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbour tuples indexed by vertex."""
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(x)) for x in nbrs)

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


# -- constructors -----------------------------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(combinations(range(n), 2)))


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise DomainError("a cycle needs at least 3 vertices")
    return Graph(n, frozenset(_norm(i, (i + 1) % n) for i in range(n)))


def part_offsets(sizes: Sequence[int]) -> list[int]:
    """Index of the first vertex of each part under contiguous labelling."""
    offsets, acc = [], 0
    for s in sizes:
        offsets.append(acc)
        acc += s
    return offsets


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    """Complete k-partite graph with parts laid out as contiguous index blocks.

    Vertices ``0..n1-1`` form part 1, the next ``n2`` form part 2, and so on.
    """
    sizes = [int(s) for s in sizes]
    if len(sizes) < 2:
        raise DomainError(f"need at least 2 parts, got {len(sizes)}")
    if any(s < 1 for s in sizes):
        raise DomainError(f"part sizes must be positive, got {sizes}")
    label = [i for i, s in enumerate(sizes) for _ in range(s)]
    n = len(label)
    edges = frozenset((u, v) for u, v in combinations(range(n), 2) if label[u] != label[v])
    return Graph(n, edges)


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    """Copy of ``g`` without edge ``{u, v}``. Connectivity is not checked here."""
    e = _norm(u, v)
    if e not in g.edges:
        raise DomainError(f"edge {e} is not in the graph")
    return Graph(g.n, g.edges - {e})


def add_edge(g: Graph, u: int, v: int) -> Graph:
    e = _norm(u, v)
    if u == v or not (0 <= e[0] and e[1] < g.n):
        raise DomainError(f"cannot add edge {e} to a graph on {g.n} vertices")
    if e in g.edges:
        raise DomainError(f"edge {e} is already present")
    return Graph(g.n, g.edges | {e})


# -- distances ----------------------------------------------------------------


def _bfs(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return min(_bfs(g, 0)) >= 0


def bfs_all_pairs(g: Graph) -> np.ndarray:
    """All-pairs shortest path lengths as an ``n x n`` int64 array.

    Raises :class:`DisconnectedGraphError` naming the first unreachable pair.
    """
    d = np.empty((g.n, g.n), dtype=np.int64)
    for s in range(g.n):
        row = _bfs(g, s)
        if min(row, default=0) < 0:
            raise DisconnectedGraphError(s, row.index(-1))
        d[s] = row
    return d


def eccentricities(d: np.ndarray) -> np.ndarray:
    """Row maxima of a distance matrix."""
    d = np.asarray(d)
    if d.size == 0:
        return np.zeros(0, dtype=np.int64)
    return d.max(axis=1)


# -- text formats -------------------------------------------------------------


def _g6_size(data: bytes, base: int) -> tuple[int, int]:
    """Decode the vertex-count header; return ``(n, header_length)``."""
    if not data:
        raise Graph6Error("empty graph6 string", base)
    for i, b in enumerate(data[:8]):
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b!r} outside the graph6 range 63..126", base + i)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated 8-byte size header", base + len(data))
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise Graph6Error("truncated 4-byte size header", base + len(data))
    return ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63), 4


def parse_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 record (an optional ``>>graph6<<`` header is allowed)."""
    if isinstance(text, str):
        try:
            data = text.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error("non-ASCII character", exc.start) from None
    else:
        data = bytes(text)
    data = data.rstrip(b"\r\n")
    base = 0
    if data.startswith(b">>graph6<<"):
        base = 10
        data = data[10:]
    n, hlen = _g6_size(data, base)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[hlen:]
    for i, b in enumerate(body):
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b!r} outside the graph6 range 63..126", base + hlen + i)
    if len(body) < nbytes:
        raise Graph6Error(f"expected {nbytes} data bytes for n={n}, found {len(body)}", base + len(data))
    if len(body) > nbytes:
        raise Graph6Error("trailing bytes after graph6 record", base + hlen + nbytes)
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            byte = body[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((u, v))
            k += 1
    return Graph(n, frozenset(edges))


def to_graph6(g: Graph) -> str:
    """Encode ``g`` as graph6 without header or trailing newline."""
    n = g.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    else:
        head = [126, 126] + [(n >> s & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = [1 if (u, v) in g.edges else 0 for v in range(1, n) for u in range(v)]
    bits += [0] * (-len(bits) % 6)
    body = []
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = (val << 1) | b
        body.append(val + 63)
    return bytes(head + body).decode("ascii")


def parse_edge_list(text: str) -> Graph:
    """Parse ``n <count>`` followed by one ``u v`` pair per line (0-based).

    Blank lines and ``#`` comments are ignored.
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [(i + 1, ln) for i, ln in enumerate(lines) if ln]
    if not lines:
        raise GraphValidationError("empty edge list: expected a header line 'n <count>'")
    lineno, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != "n":
        raise GraphValidationError(f"line {lineno}: expected 'n <count>', got {head!r}")
    try:
        n = int(parts[1])
    except ValueError:
        raise GraphValidationError(f"line {lineno}: vertex count {parts[1]!r} is not an integer") from None
    pairs = []
    for lineno, ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphValidationError(f"line {lineno}: expected 'u v', got {ln!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphValidationError(f"line {lineno}: non-integer vertex in {ln!r}") from None
    return Graph.from_edges(n, pairs)


def to_edge_list(g: Graph) -> str:
    return "\n".join([f"n {g.n}"] + [f"{u} {v}" for u, v in g.sorted_edges()]) + "\n"
