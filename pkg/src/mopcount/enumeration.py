"""Generation of all polygon triangulations, labeled and up to symmetry.

Labeled generation uses ear recursion: choose the apex of the triangle
resting on the base edge (1, n), then recurse on the two sub-polygons.
That is the classic Catalan recursion; the stream for an n-gon has exactly
Catalan(n-2) members and is prefix-shardable for parallel consumption.

Isomorphism classes come from a canonical code: the lexicographically
smallest serialization of the diagonal set over all 2n dihedral relabelings
of the polygon.  For n >= 4 the outer Hamiltonian cycle of a maximal
outerplanar graph is unique, so equal codes coincide with graph isomorphism.
"""

from __future__ import annotations

import heapq
import tempfile
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Iterator

from .triangulations import Triangulation

ENUMERATION_N_MAX = 20
STREAM_DEDUP_N_MAX = 16  # above this, class codes are deduped via disk spill


def _check_n(n: int) -> None:
    if not 3 <= n <= ENUMERATION_N_MAX:
        raise ValueError(
            f"enumeration supports 3 <= n <= {ENUMERATION_N_MAX}, got {n}"
        )


def _gen_poly(verts: tuple[int, ...]) -> Iterator[frozenset[tuple[int, int]]]:
    """All diagonal sets triangulating one contiguous polygon piece.

    verts lists the piece's vertices in cyclic order; the base edge joins
    verts[0] and verts[-1].  Apexes are tried in ascending order, so the
    stream order is deterministic.
    """
    if len(verts) < 3:
        yield frozenset()
        return
    first, last = verts[0], verts[-1]
    top = len(verts) - 2
    for i in range(1, top + 1):
        apex = verts[i]
        extra = []
        if i > 1:
            extra.append((first, apex))
        if i < top:
            extra.append((apex, last))
        base = frozenset(extra)
        for left in _gen_poly(verts[: i + 1]):
            for right in _gen_poly(verts[i:]):
                yield base | left | right


def enumerate_labeled(n: int) -> Iterator[Triangulation]:
    """Every triangulation of the labeled convex n-gon, exactly once."""
    _check_n(n)
    for diagonals in _gen_poly(tuple(range(1, n + 1))):
        yield Triangulation(n, diagonals)


# -- sharding ----------------------------------------------------------------

_State = tuple[frozenset[tuple[int, int]], tuple[tuple[int, ...], ...]]


def _children(state: _State) -> list[_State] | None:
    """Expand the first undecided sub-polygon; None when fully decided."""
    diagonals, pending = state
    pending = tuple(p for p in pending if len(p) >= 3)
    if not pending:
        return None
    head, rest = pending[0], pending[1:]
    first, last = head[0], head[-1]
    top = len(head) - 2
    out: list[_State] = []
    for i in range(1, top + 1):
        apex = head[i]
        extra = set()
        if i > 1:
            extra.add((first, apex))
        if i < top:
            extra.add((apex, last))
        out.append(
            (diagonals | extra, (head[: i + 1], head[i:]) + rest)
        )
    return out


def _complete(state: _State, n: int) -> Iterator[Triangulation]:
    diagonals, pending = state
    polys = [p for p in pending if len(p) >= 3]

    def rec(i: int, acc: frozenset) -> Iterator[frozenset]:
        if i == len(polys):
            yield acc
            return
        for extra in _gen_poly(polys[i]):
            yield from rec(i + 1, acc | extra)

    for diags in rec(0, diagonals):
        yield Triangulation(n, diags)


def shard(n: int, prefix_depth: int) -> list[Iterator[Triangulation]]:
    """Split enumerate_labeled(n) into disjoint sub-streams.

    The first prefix_depth apex choices determine the shard, so assignment
    is deterministic and the union over shards is the full labeled stream.
    Streams that finish earlier than prefix_depth become singleton shards.
    """
    _check_n(n)
    if prefix_depth < 0:
        raise ValueError(f"prefix_depth must be >= 0, got {prefix_depth}")
    states: list[_State] = [(frozenset(), (tuple(range(1, n + 1)),))]
    done: list[_State] = []
    for _ in range(prefix_depth):
        nxt: list[_State] = []
        for state in states:
            kids = _children(state)
            if kids is None:
                done.append(state)
            else:
                nxt.extend(kids)
        states = nxt
    return [_complete(s, n) for s in done + states]


# -- canonical codes -----------------------------------------------------------


@dataclass(frozen=True, order=True)
class CanonicalCode:
    """Byte code identifying a triangulation up to dihedral symmetry."""

    code: bytes

    @property
    def n(self) -> int:
        return self.code[0]

    def hex(self) -> str:
        return self.code.hex()

    @classmethod
    def from_hex(cls, text: str) -> "CanonicalCode":
        return cls(bytes.fromhex(text))


@lru_cache(maxsize=64)
def _dihedral_maps(n: int) -> tuple[tuple[int, ...], ...]:
    """The 2n vertex relabelings of the n-gon, as tuples indexed by label
    (index 0 unused)."""
    maps = []
    for r in range(n):
        maps.append(tuple([0] + [((i - 1 + r) % n) + 1 for i in range(1, n + 1)]))
        maps.append(tuple([0] + [((n - i + r) % n) + 1 for i in range(1, n + 1)]))
    return tuple(maps)


def canonical_code(t: Triangulation) -> CanonicalCode:
    """Minimum over all 2n dihedral relabelings of the serialized diagonals."""
    if t.n > 255:
        raise ValueError("canonical codes support n <= 255")
    diagonals = tuple(t.diagonals)
    best: bytes | None = None
    for m in _dihedral_maps(t.n):
        pairs = sorted(
            (m[a], m[b]) if m[a] < m[b] else (m[b], m[a]) for a, b in diagonals
        )
        cand = bytes([t.n]) + b"".join(bytes(p) for p in pairs)
        if best is None or cand < best:
            best = cand
    assert best is not None
    return CanonicalCode(best)


def triangulation_from_code(code: CanonicalCode) -> Triangulation:
    raw = code.code
    n = raw[0]
    body = raw[1:]
    if len(body) % 2:
        raise ValueError("malformed code: odd diagonal byte count")
    diagonals = [(body[i], body[i + 1]) for i in range(0, len(body), 2)]
    return Triangulation.of(n, diagonals)


# -- class streams --------------------------------------------------------------


def _unique_sorted_codes(codes: Iterable[bytes], spill: bool) -> list[bytes]:
    """Deduplicate and sort byte codes.

    In-memory hash set by default; when spill is set, codes are written in
    sorted chunks to temporary files and merged, keeping memory flat for
    streams far beyond the exhaustive regime.
    """
    if not spill:
        return sorted(set(codes))
    chunk_cap = 1 << 18
    chunk: list[bytes] = []
    paths: list[Path] = []
    with tempfile.TemporaryDirectory(prefix="mop-codes-") as tmp:

        def flush() -> None:
            if not chunk:
                return
            chunk.sort()
            p = Path(tmp) / f"chunk{len(paths)}.txt"
            p.write_text("\n".join(c.hex() for c in chunk) + "\n")
            paths.append(p)
            chunk.clear()

        for c in codes:
            chunk.append(c)
            if len(chunk) >= chunk_cap:
                flush()
        flush()
        streams = [p.open() for p in paths]
        try:
            out: list[bytes] = []
            last = None
            for line in heapq.merge(*streams):
                if line != last:
                    out.append(bytes.fromhex(line.strip()))
                    last = line
            return out
        finally:
            for s in streams:
                s.close()


@lru_cache(maxsize=16)
def class_codes(n: int) -> tuple[CanonicalCode, ...]:
    """Sorted canonical codes of all isomorphism classes of n-gon
    triangulations.  Cached: several suites revisit the same order."""
    _check_n(n)
    raw = (canonical_code(t).code for t in enumerate_labeled(n))
    spill = n > STREAM_DEDUP_N_MAX
    return tuple(CanonicalCode(c) for c in _unique_sorted_codes(raw, spill))


def enumerate_classes(n: int) -> Iterator[Triangulation]:
    """One representative per isomorphism class, in ascending code order.

    The representative is the triangulation whose diagonal serialization
    equals its own canonical code, so the output does not depend on the
    labeled enumeration order.
    """
    for code in class_codes(n):
        yield triangulation_from_code(code)
