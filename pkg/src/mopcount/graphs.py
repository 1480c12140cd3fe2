"""Simple undirected graphs with exact path and triangle counting.

Vertices are 0-based integers.  Graphs are immutable once built: adjacency
is stored three ways (sorted neighbor tuples for iteration, frozensets for
O(1) edge tests, lazily-built bitmasks for triangle counting), so every
counting routine is a pure function and safe to call concurrently.

Path copies are unordered: a k-vertex path and its reversal are the same
copy, so directed traversals are halved.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class SimpleGraph:
    """Undirected simple graph (no loops, no multi-edges)."""

    __slots__ = ("n", "_nbrs", "_sets", "_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 1:
            raise ValueError(f"need at least one vertex, got n={n}")
        self.n = n
        seen: set[tuple[int, int]] = set()
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            adj[u].append(v)
            adj[v].append(u)
        self._nbrs: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(a)) for a in adj
        )
        self._sets: tuple[frozenset[int], ...] = tuple(
            frozenset(a) for a in adj
        )
        self._masks: tuple[int, ...] | None = None

    # -- basic queries ----------------------------------------------------

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self._nbrs) // 2

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self._nbrs)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._nbrs[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._sets[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self._nbrs[u] if u < v]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.n == other.n and self._sets == other._sets

    def __hash__(self) -> int:
        return hash((self.n, self._sets))

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, m={self.edge_count})"

    # -- derived graphs ---------------------------------------------------

    def induced(self, vertices: Iterable[int]) -> "SimpleGraph":
        """Induced subgraph, relabeled 0..len-1 in ascending vertex order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [
            (index[u], index[v])
            for u in keep
            for v in self._nbrs[u]
            if u < v and v in index
        ]
        return SimpleGraph(len(keep), edges)

    def without_vertex(self, v: int) -> "SimpleGraph":
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range")
        return self.induced(u for u in range(self.n) if u != v)

    def _bitmasks(self) -> tuple[int, ...]:
        if self._masks is None:
            masks = []
            for a in self._nbrs:
                m = 0
                for w in a:
                    m |= 1 << w
                masks.append(m)
            self._masks = tuple(masks)
        return self._masks


@dataclass(frozen=True)
class PathCopy:
    """An unordered path copy, stored with the smaller endpoint first."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        vs = tuple(self.vertices)
        if len(vs) < 2:
            raise ValueError("a path copy needs at least two vertices")
        if len(set(vs)) != len(vs):
            raise ValueError(f"repeated vertex in path {vs}")
        if vs[0] > vs[-1]:
            vs = vs[::-1]
        object.__setattr__(self, "vertices", vs)

    def __len__(self) -> int:
        return len(self.vertices)


def count_paths(g: SimpleGraph, k: int) -> int:
    """Number of unordered k-vertex path copies in g.

    DFS from every start vertex with a visited mask; the final vertex is
    not expanded but counted from the end vertex's degree minus already
    used neighbors, which keeps the hot path O(k) per leaf even at large
    degrees.  Directed traversals are halved at the end.
    """
    if k < 2:
        raise ValueError(f"path counting needs k >= 2, got k={k}")
    if k > g.n:
        return 0
    nbrs = g._nbrs
    sets = g._sets
    visited = bytearray(g.n)
    path: list[int] = []
    append = path.append
    pop = path.pop
    total = 0

    def extend(v: int, need: int) -> None:
        nonlocal total
        if need == 1:
            s = sets[v]
            c = len(s)
            for u in path:
                if u in s:
                    c -= 1
            total += c
            return
        visited[v] = 1
        append(v)
        nd = need - 1
        for w in nbrs[v]:
            if not visited[w]:
                extend(w, nd)
        pop()
        visited[v] = 0

    for s0 in range(g.n):
        extend(s0, k - 1)
    return total // 2


def iter_paths(g: SimpleGraph, k: int) -> Iterator[tuple[int, ...]]:
    """Yield every unordered k-vertex path once, smaller endpoint first."""
    if k < 2:
        raise ValueError(f"path enumeration needs k >= 2, got k={k}")
    if k > g.n:
        return
    nbrs = g._nbrs
    visited = bytearray(g.n)
    path: list[int] = []

    def extend(v: int) -> Iterator[tuple[int, ...]]:
        path.append(v)
        if len(path) == k:
            if path[0] < v:
                yield tuple(path)
        else:
            visited[v] = 1
            for w in nbrs[v]:
                if not visited[w]:
                    yield from extend(w)
            visited[v] = 0
        path.pop()

    for s0 in range(g.n):
        yield from extend(s0)


def count_paths_through(g: SimpleGraph, v: int, k: int) -> int:
    """Number of k-vertex path copies whose vertex set contains v."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for n={g.n}")
    if k < 2:
        raise ValueError(f"path counting needs k >= 2, got k={k}")
    return count_paths(g, k) - count_paths(g.without_vertex(v), k)


def count_triangles(g: SimpleGraph) -> int:
    """Number of triangles, each counted once."""
    masks = g._bitmasks()
    total = 0
    for u in range(g.n):
        mu = masks[u]
        for w in g._nbrs[u]:
            if u < w:
                total += (mu & masks[w]).bit_count()
    # each triangle shows up once per edge
    return total // 3


def count_p4_via_degrees(g: SimpleGraph) -> int:
    """4-vertex path count from degree products and the triangle count.

    Closed form: sum over edges {x,y} of (d(x)-1)(d(y)-1), minus three
    times the triangle count.  Must agree with count_paths(g, 4) on every
    simple graph.
    """
    deg = g.degrees()
    s = 0
    for u in range(g.n):
        du = deg[u] - 1
        for w in g._nbrs[u]:
            if u < w:
                s += du * (deg[w] - 1)
    return s - 3 * count_triangles(g)


# -- graph text format ----------------------------------------------------
# First line: vertex count.  Each following non-empty line: "u v" with
# 0-based endpoints.  Shared by the CLI and the test corpus.


def format_graph_text(g: SimpleGraph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_graph_text(text: str) -> SimpleGraph:
    rows = [line.split() for line in text.splitlines() if line.split()]
    if not rows:
        raise ValueError("empty graph text")
    if len(rows[0]) != 1:
        raise ValueError(f"first line must be the vertex count, got {rows[0]}")
    n = int(rows[0][0])
    edges = []
    for row in rows[1:]:
        if len(row) != 2:
            raise ValueError(f"expected 'u v' edge line, got {row!r}")
        edges.append((int(row[0]), int(row[1])))
    return SimpleGraph(n, edges)
