"""Polygon triangulations: the canonical form of a maximal outerplanar graph.

A triangulation lives on the labeled convex polygon 1..n (counterclockwise
outer cycle) plus a set of n-3 pairwise non-crossing diagonals.  Every
maximal outerplanar graph arises this way, so recognition, dual trees and
chord decompositions all operate on this representation.

Labeling convention: triangulation vertices are 1-based, the SimpleGraph
produced by ``to_graph`` is 0-based (label i maps to vertex i-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .graphs import SimpleGraph


def normalize_diagonal(pair: Sequence[int]) -> tuple[int, int]:
    a, b = pair
    return (a, b) if a < b else (b, a)


def _is_chord(n: int, a: int, b: int) -> bool:
    """True when {a,b} joins two nonconsecutive polygon vertices."""
    if not (1 <= a <= n and 1 <= b <= n) or a == b:
        return False
    d = (b - a) % n
    return d not in (0, 1, n - 1)


def _chords_cross(p: tuple[int, int], q: tuple[int, int]) -> bool:
    """Crossing test for chords of a convex polygon (shared endpoint: no)."""
    a, b = p
    c, d = q
    if len({a, b, c, d}) < 4:
        return False
    return (a < c < b < d) or (c < a < d < b)


@dataclass(frozen=True)
class Triangulation:
    """Outer cycle 1..n plus a frozenset of sorted diagonal pairs."""

    n: int
    diagonals: frozenset[tuple[int, int]]

    @classmethod
    def of(cls, n: int, diagonals: Iterable[Sequence[int]]) -> "Triangulation":
        return cls(n, frozenset(normalize_diagonal(d) for d in diagonals))

    def cycle_edges(self) -> list[tuple[int, int]]:
        edges = [(i, i + 1) for i in range(1, self.n)]
        if self.n > 2:
            edges.append((1, self.n))
        return edges

    def sorted_diagonals(self) -> list[tuple[int, int]]:
        return sorted(self.diagonals)


def validate_triangulation(t: Triangulation) -> str | None:
    """None when t satisfies all triangulation invariants, else the first
    violation as text."""
    if t.n < 3:
        return f"polygon size {t.n} < 3"
    for d in t.sorted_diagonals():
        a, b = d
        if (a, b) != normalize_diagonal(d):
            return f"diagonal {d} not stored sorted"
        if not _is_chord(t.n, a, b):
            return f"{d} is not a chord of the {t.n}-gon"
    if len(t.diagonals) != t.n - 3:
        return f"diagonal count {len(t.diagonals)} != n-3 = {t.n - 3}"
    diags = t.sorted_diagonals()
    for i, p in enumerate(diags):
        for q in diags[i + 1 :]:
            if _chords_cross(p, q):
                return f"diagonals {p} and {q} cross"
    return None


def to_graph(t: Triangulation) -> SimpleGraph:
    """0-based SimpleGraph with the outer cycle plus all diagonals."""
    edges = [(a - 1, b - 1) for a, b in t.cycle_edges()]
    edges.extend((a - 1, b - 1) for a, b in t.diagonals)
    return SimpleGraph(t.n, edges)


# -- text format -----------------------------------------------------------
# "n; a1-b1, a2-b2, ..." with 1-based endpoints sorted within each pair and
# pairs sorted lexicographically.  A bare "n;" encodes the triangle.


def format_triangulation_text(t: Triangulation) -> str:
    pairs = ", ".join(f"{a}-{b}" for a, b in t.sorted_diagonals())
    return f"{t.n}; {pairs}" if pairs else f"{t.n};"


def parse_triangulation_text(text: str) -> Triangulation:
    head, sep, tail = text.strip().partition(";")
    if not sep:
        raise ValueError(f"missing ';' in triangulation text {text!r}")
    n = int(head)
    diagonals = []
    for chunk in tail.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        a, _, b = chunk.partition("-")
        diagonals.append((int(a), int(b)))
    return Triangulation.of(n, diagonals)


# -- recognition -----------------------------------------------------------


class RecognitionError(ValueError):
    """Raised when a graph is not maximal outerplanar."""


def recognize_mop_labeled(g: SimpleGraph) -> tuple[Triangulation, tuple[int, ...]]:
    """Recognize a maximal outerplanar graph and recover its outer cycle.

    Peels degree-2 ear vertices whose neighbors are adjacent (every maximal
    outerplanar graph has one), then re-inserts them onto the outer cycle of
    the shrinking core.  Succeeds exactly when g is maximal outerplanar.

    Returns (triangulation, cycle) where cycle[i] is the graph vertex given
    label i+1.  The cycle starts at the smallest graph vertex and runs
    toward its smaller-labeled cycle neighbor.
    """
    n = g.n
    if n < 3:
        raise RecognitionError(f"need at least 3 vertices, got {n}")
    m = g.edge_count
    if m != 2 * n - 3:
        raise RecognitionError(f"edge count {m} != 2n-3 = {2 * n - 3}")
    # connectivity
    seen = {0}
    frontier = [0]
    while frontier:
        u = frontier.pop()
        for w in g.neighbors(u):
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    if len(seen) != n:
        raise RecognitionError("graph is disconnected")

    adj = [set(g.neighbors(v)) for v in range(n)]
    alive = set(range(n))
    peeled: list[tuple[int, int, int]] = []
    while len(alive) > 3:
        ear = None
        for v in sorted(alive):
            if len(adj[v]) == 2:
                u, w = sorted(adj[v])
                if w in adj[u]:
                    ear = (v, u, w)
                    break
        if ear is None:
            raise RecognitionError(
                "no removable degree-2 vertex with adjacent neighbors"
            )
        v, u, w = ear
        adj[u].discard(v)
        adj[w].discard(v)
        adj[v].clear()
        alive.discard(v)
        peeled.append(ear)

    a, b, c = sorted(alive)
    if not (b in adj[a] and c in adj[a] and c in adj[b]):
        raise RecognitionError("core does not reduce to a triangle")

    cycle = [a, b, c]
    for v, u, w in reversed(peeled):
        spot = None
        ln = len(cycle)
        for i in range(ln):
            pair = {cycle[i], cycle[(i + 1) % ln]}
            if pair == {u, w}:
                spot = i + 1
                break
        if spot is None:
            raise RecognitionError(
                f"ear {v} rests on {u},{w} which are not consecutive on the"
                " outer cycle"
            )
        cycle.insert(spot, v)

    # canonical start and orientation
    i0 = cycle.index(min(cycle))
    cycle = cycle[i0:] + cycle[:i0]
    if cycle[-1] < cycle[1]:
        cycle = [cycle[0]] + cycle[:0:-1]

    label = {v: i + 1 for i, v in enumerate(cycle)}
    cyc_pairs = {normalize_diagonal(e) for e in _cycle_pairs(cycle)}
    diagonals = [
        normalize_diagonal((label[u], label[v]))
        for u, v in g.edges()
        if normalize_diagonal((u, v)) not in cyc_pairs
    ]
    return Triangulation.of(n, diagonals), tuple(cycle)


def _cycle_pairs(cycle: Sequence[int]) -> list[tuple[int, int]]:
    return [(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))]


def recognize_mop(g: SimpleGraph) -> Triangulation:
    """Triangulation form of g, or RecognitionError when g is not maximal
    outerplanar."""
    return recognize_mop_labeled(g)[0]


# -- faces and the dual tree ------------------------------------------------


class DualEdge(NamedTuple):
    a: int                  # face index
    b: int                  # face index, a < b
    chord: tuple[int, int]  # the diagonal the two faces share


@dataclass(frozen=True)
class DualTree:
    """Inner dual of a triangulation: one node per bounded triangular face.

    Always a tree on n-2 nodes with maximum degree 3.
    """

    faces: tuple[tuple[int, int, int], ...]
    edges: tuple[DualEdge, ...]

    def degree_sequence(self) -> list[int]:
        deg = [0] * len(self.faces)
        for e in self.edges:
            deg[e.a] += 1
            deg[e.b] += 1
        return deg


def faces_of(t: Triangulation) -> list[tuple[int, int, int]]:
    """The n-2 triangular faces, each as a sorted vertex triple.

    Splits the polygon recursively: the apex of the triangle resting on the
    current base edge is the unique common neighbor of its endpoints inside
    the piece (pieces stay contiguous label intervals).
    """
    err = validate_triangulation(t)
    if err is not None:
        raise ValueError(f"invalid triangulation: {err}")
    n = t.n
    if n == 3:
        return [(1, 2, 3)]
    adj: dict[int, set[int]] = {v: set() for v in range(1, n + 1)}
    for a, b in t.cycle_edges() + list(t.diagonals):
        adj[a].add(b)
        adj[b].add(a)
    faces: list[tuple[int, int, int]] = []
    stack = [(1, n)]  # contiguous pieces [lo..hi], base edge {lo, hi}
    while stack:
        lo, hi = stack.pop()
        if hi - lo == 1:
            continue
        apex = None
        pool = adj[lo] if len(adj[lo]) <= len(adj[hi]) else adj[hi]
        for v in pool:
            if lo < v < hi and v in adj[lo] and v in adj[hi]:
                apex = v
                break
        if apex is None:
            raise ValueError(f"no apex for base ({lo},{hi}); not a triangulation")
        faces.append((lo, apex, hi))
        stack.append((lo, apex))
        stack.append((apex, hi))
    faces.sort()
    return faces


def dual_tree(t: Triangulation) -> DualTree:
    faces = faces_of(t)
    by_pair: dict[tuple[int, int], list[int]] = {}
    for i, (a, b, c) in enumerate(faces):
        for pair in ((a, b), (a, c), (b, c)):
            by_pair.setdefault(pair, []).append(i)
    edges = []
    for pair, owners in sorted(by_pair.items()):
        if len(owners) == 2:
            i, j = sorted(owners)
            edges.append(DualEdge(i, j, pair))
    edges.sort()
    return DualTree(tuple(faces), tuple(edges))


def degree_two_vertices(t: Triangulation) -> list[int]:
    """Vertices of degree 2, i.e. polygon vertices touched by no diagonal."""
    err = validate_triangulation(t)
    if err is not None:
        raise ValueError(f"invalid triangulation: {err}")
    if t.n == 3:
        return [1, 2, 3]
    touched = {v for d in t.diagonals for v in d}
    return [v for v in range(1, t.n + 1) if v not in touched]


# -- chords ------------------------------------------------------------------


@dataclass(frozen=True)
class ChordSides:
    """Partition induced by a chord: interior vertices on either side.

    side1 holds the vertices strictly between x and y counterclockwise
    (ascending labels), side2 the rest; side1, side2 and {x, y} partition
    the polygon.
    """

    chord: tuple[int, int]
    side1: frozenset[int]
    side2: frozenset[int]

    @property
    def n1(self) -> int:
        return len(self.side1)

    @property
    def n2(self) -> int:
        return len(self.side2)


def chord_sides(t: Triangulation, chord: Sequence[int]) -> ChordSides:
    c = normalize_diagonal(chord)
    if c not in t.diagonals:
        raise ValueError(f"{c} is not a diagonal of this triangulation")
    x, y = c
    side1 = frozenset(range(x + 1, y))
    side2 = frozenset(v for v in range(1, t.n + 1) if v < x or v > y)
    return ChordSides(c, side1, side2)


# -- balanced splits ----------------------------------------------------------


def tree_split_edge(
    n_nodes: int, edges: Sequence[tuple[int, int]]
) -> tuple[int, int]:
    """Edge of a max-degree-3 tree whose removal leaves two components of
    at least (n_nodes - 1) / 3 nodes each.

    Such an edge always exists when the degree bound holds; a linear scan
    of subtree sizes finds it.  Ties break toward the lexicographically
    smallest sorted node pair, for reproducibility.
    """
    if n_nodes < 2:
        raise ValueError(f"need at least 2 nodes, got {n_nodes}")
    if len(edges) != n_nodes - 1:
        raise ValueError(f"{len(edges)} edges on {n_nodes} nodes is not a tree")
    adj: list[list[int]] = [[] for _ in range(n_nodes)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    if max(len(a) for a in adj) > 3:
        raise ValueError("tree has a vertex of degree > 3")

    # root at 0; order[] is a parent-before-child ordering
    parent = [-1] * n_nodes
    order = [0]
    seen = bytearray(n_nodes)
    seen[0] = 1
    for u in order:
        for w in adj[u]:
            if not seen[w]:
                seen[w] = 1
                parent[w] = u
                order.append(w)
    if len(order) != n_nodes:
        raise ValueError("edge list is disconnected; not a tree")

    size = [1] * n_nodes
    for u in reversed(order[1:]):
        size[parent[u]] += size[u]

    best: tuple[int, int] | None = None
    for u in order[1:]:
        low = min(size[u], n_nodes - size[u])
        if 3 * low >= n_nodes - 1:
            cand = (u, parent[u]) if u < parent[u] else (parent[u], u)
            if best is None or cand < best:
                best = cand
    if best is None:  # unreachable for max-degree-3 trees
        raise RuntimeError("no balanced split edge found")
    return best


def balanced_chord(t: Triangulation) -> tuple[int, int]:
    """A diagonal with at least n/3 vertices (endpoints included) on each
    side, found through a balanced split edge of the dual tree."""
    if t.n == 3:
        raise ValueError("a triangle has no chords")
    dual = dual_tree(t)
    split = tree_split_edge(
        len(dual.faces), [(e.a, e.b) for e in dual.edges]
    )
    for e in dual.edges:
        if (e.a, e.b) == split:
            return e.chord
    raise RuntimeError("split edge missing from dual tree")  # unreachable
