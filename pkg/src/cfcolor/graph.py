"""Simple undirected graphs on dense integer vertices, plus text I/O.

Vertices are always 0..n-1.  A Graph is immutable once constructed and
stores adjacency twice: sorted per-vertex neighbor tuples for cheap
neighborhood scans, and a frozen pair set for O(1) edge membership.

File format (one graph per file):

    c optional comment
    p cf <n> <m>
    e <u> <v>

Edge lines use 0-based endpoints; the canonical writer emits them sorted
lexicographically with u < v.  Duplicate edge lines collapse to one edge;
self-loops are a hard error.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable


class GraphFormatError(ValueError):
    """Malformed graph / coloring / interval text; remembers the line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class SizeGuardError(RuntimeError):
    """An exhaustive routine was asked to exceed its vertex-count limit."""


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "_adj", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj: list[set[int]] = [set() for _ in range(n)]
        pairs: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n) or not (0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            a, b = (u, v) if u < v else (v, u)
            pairs.add((a, b))
            adj[a].add(b)
            adj[b].add(a)
        self.n = n
        self._adj = tuple(tuple(sorted(s)) for s in adj)
        self._edges = frozenset(pairs)

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self._edges))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def closed_neighbors(self, v: int) -> tuple[int, ...]:
        # sorted tuple of N[v]; |N[v]| == |N(v)| + 1 always (no self-loops)
        nb = self._adj[v]
        out = []
        placed = False
        for u in nb:
            if not placed and v < u:
                out.append(v)
                placed = True
            out.append(u)
        if not placed:
            out.append(v)
        return tuple(out)

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self._edges

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def parse_graph(text: str) -> Graph:
    """Parse the `p cf` text format; raises GraphFormatError with a line number."""
    n = m = None
    edges: list[tuple[int, int]] = []
    edge_lines = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise GraphFormatError("duplicate problem header", lineno)
            if len(fields) != 4 or fields[1] != "cf":
                raise GraphFormatError("malformed header, expected 'p cf <n> <m>'", lineno)
            try:
                n, m = int(fields[2]), int(fields[3])
            except ValueError:
                raise GraphFormatError("non-integer counts in header", lineno) from None
            if n < 0 or m < 0:
                raise GraphFormatError("negative counts in header", lineno)
        elif fields[0] == "e":
            if n is None:
                raise GraphFormatError("edge line before header", lineno)
            if len(fields) != 3:
                raise GraphFormatError("malformed edge line, expected 'e <u> <v>'", lineno)
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise GraphFormatError("non-integer vertex id", lineno) from None
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}", lineno)
            if not (0 <= u < n) or not (0 <= v < n):
                raise GraphFormatError(f"vertex id out of range for n={n}", lineno)
            edge_lines += 1
            edges.append((u, v))
        else:
            raise GraphFormatError(f"unknown line type {fields[0]!r}", lineno)
    if n is None:
        raise GraphFormatError("missing 'p cf' header")
    if edge_lines != m:
        raise GraphFormatError(f"header declares {m} edges but found {edge_lines} edge lines")
    return Graph(n, edges)


def write_graph(g: Graph, comment: str | None = None) -> str:
    """Canonical text form: sorted edge lines, write∘parse is a fixpoint."""
    lines = []
    if comment:
        for part in comment.splitlines():
            lines.append(f"c {part}")
    lines.append(f"p cf {g.n} {g.m}")
    for u, v in g.edges:
        lines.append(f"e {u} {v}")
    return "\n".join(lines) + "\n"


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Maximal connected vertex sets, each sorted, ordered by smallest member."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    queue.append(u)
        comps.append(tuple(sorted(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph plus the old-id -> new-id relabeling (order preserving)."""
    vs = sorted(set(vertices))
    for v in vs:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} not in graph")
    relabel = {v: i for i, v in enumerate(vs)}
    edges = [
        (relabel[u], relabel[v])
        for u, v in g.edges
        if u in relabel and v in relabel
    ]
    return Graph(len(vs), edges), relabel


def complement(g: Graph) -> Graph:
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v)
    ]
    return Graph(g.n, edges)
