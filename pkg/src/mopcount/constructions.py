"""Explicit families of maximal outerplanar graphs with many short paths.

All constructors emit the outer-cycle labeling 1..n with the distinguished
vertex (the apex, or v1) at label 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .triangulations import Triangulation


def fan(n: int) -> Triangulation:
    """Apex joined to every vertex of an (n-1)-vertex path.

    Extremal for 3- and 4-vertex path counts: diagonals {1,i} for
    3 <= i <= n-1 under outer cycle 1..n with the apex at 1.
    """
    if n < 3:
        raise ValueError(f"fan needs n >= 3, got {n}")
    return Triangulation.of(n, [(1, i) for i in range(3, n)])


def p5_extremal(n: int) -> Triangulation:
    """The 5-vertex-path booster: half fan, half eared chain.

    Under outer cycle v1..vn the diagonals are {1,i} for n/2 <= i <= n-1
    (the fan half), {1,o} for odd o below n/2 (the chain spine) and
    {o,o+2} between consecutive spine vertices.  Even positions below n/2
    carry degree-2 ear vertices; the 5-vertex path count grows like
    (17/4) n^2.

    The diagonal pattern closes exactly when n = 2 (mod 4).  For other even
    n the spine simply stops one vertex earlier, leaving the final gap of
    the chain half without an ear; edge count and the quadratic growth are
    unchanged.
    """
    if n % 2:
        raise ValueError(f"p5 construction needs even n, got {n}")
    if n < 4:
        raise ValueError(f"p5 construction needs n >= 4, got {n}")
    half = n // 2
    diagonals = [(1, i) for i in range(max(half, 3), n)]
    diagonals.extend((1, o) for o in range(3, half, 2))
    diagonals.extend((o, o + 2) for o in range(3, half - 1, 2))
    return Triangulation.of(n, diagonals)


@dataclass(frozen=True)
class EarPlacement:
    """Choice of fan gaps receiving one degree-2 ear vertex each.

    Gaps are numbered 0..m-1 counterclockwise around a fan on m vertices,
    starting at the apex-adjacent gap (so gap g sits between cycle
    positions g+1 and g+2, with gap m-1 closing back to the apex).  At most
    one ear per gap.
    """

    positions: frozenset[int]

    @classmethod
    def of(cls, positions) -> "EarPlacement":
        pos = list(positions)
        if len(set(pos)) != len(pos):
            raise ValueError(f"duplicate ear positions in {sorted(pos)}")
        return cls(frozenset(pos))

    @classmethod
    def spread(cls, n: int) -> "EarPlacement":
        """Every third gap of the fan on 3n/4 vertices: n/4 ears."""
        if n % 4:
            raise ValueError(f"spread placement needs n = 0 (mod 4), got {n}")
        return cls(frozenset(range(0, 3 * (n // 4), 3)))

    def validate(self, fan_size: int) -> None:
        for p in self.positions:
            if not 0 <= p < fan_size:
                raise ValueError(
                    f"gap {p} out of range for a fan on {fan_size} vertices"
                )


def eared_fan(n: int, ears: EarPlacement) -> Triangulation:
    """Fan on 3n/4 vertices with n/4 ear vertices in the chosen gaps.

    Every non-ear, non-apex vertex stays adjacent to the apex; each eared
    fan edge turns into a diagonal under the enlarged outer cycle.  The
    5-vertex path count grows like (17/4) n^2 regardless of where the ears
    sit.
    """
    if n % 4:
        raise ValueError(f"eared fan needs n = 0 (mod 4), got {n}")
    if n < 8:
        raise ValueError(f"eared fan needs n >= 8, got {n}")
    m = 3 * n // 4
    if len(ears.positions) != n // 4:
        raise ValueError(
            f"need exactly n/4 = {n // 4} ears, got {len(ears.positions)}"
        )
    ears.validate(m)

    walk: list[int] = []          # fan vertices 1..m, ears get ids m+1..n
    next_ear = m + 1
    ear_gap_ends: list[tuple[int, int]] = []
    for g in range(m):
        walk.append(g + 1)
        if g in ears.positions:
            walk.append(next_ear)
            next_ear += 1
            ear_gap_ends.append((g + 1, (g + 1) % m + 1))
    label = {v: i + 1 for i, v in enumerate(walk)}

    diagonals = [(label[1], label[i]) for i in range(3, m)]
    diagonals.extend((label[a], label[b]) for a, b in ear_gap_ends)
    return Triangulation.of(n, diagonals)


def p6_extremal(n: int) -> Triangulation:
    """The 6-vertex-path booster: alternating ears around an apex chain.

    Outer cycle v, e0, w1, e1, ..., w_{n/2-1}, e_{n/2-1}: every second
    vertex is a degree-2 ear, the apex v is joined to every w_i, and
    consecutive w's are joined.  The 6-vertex path count grows like 11 n^2.
    """
    if n % 2:
        raise ValueError(f"p6 construction needs even n, got {n}")
    if n < 6:
        raise ValueError(f"p6 construction needs n >= 6, got {n}")
    w = [2 * i + 1 for i in range(1, n // 2)]  # w_i at cycle position 2i+1
    diagonals = [(1, wi) for wi in w]
    diagonals.extend((w[i], w[i + 1]) for i in range(len(w) - 1))
    return Triangulation.of(n, diagonals)
