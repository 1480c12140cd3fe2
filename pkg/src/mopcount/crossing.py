"""Chord-relative decomposition of path counts in a triangulation.

A chord {x,y} splits the polygon interior into two sides.  A path copy
that uses interior vertices from both sides is a crossing path: it must
pass through x or y, because no edge joins the two interiors directly.
Crossing 5-vertex paths fall into five mutually exclusive kinds:

  I      the chord itself is a path edge (never a terminal edge)
  II(A)  contains x and y, no chord edge, neither endpoint terminal
  II(B)  contains x and y, no chord edge, exactly one endpoint terminal
  III(A) contains one chord endpoint, interior split 2 + 2
  III(B) contains one chord endpoint, interior split 1 + 3

The total path count then decomposes exactly as the counts of the two
side subgraphs plus the crossing count.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass

from .graphs import PathCopy, count_paths, iter_paths
from .triangulations import ChordSides, Triangulation, chord_sides, to_graph


class CrossingType(enum.Enum):
    I = "I"
    IIA = "II(A)"
    IIB = "II(B)"
    IIIA = "III(A)"
    IIIB = "III(B)"


def _classify(
    verts: tuple[int, ...],
    x: int,
    y: int,
    side1: frozenset[int],
    side2: frozenset[int],
) -> CrossingType | None:
    """Classify one 5-vertex path; None when it is not crossing.

    Works in whatever labeling the sides are given in, as long as the path
    uses the same one.
    """
    pv = set(verts)
    c1 = len(pv & side1)
    c2 = len(pv & side2)
    if not c1 or not c2:
        return None
    has_x = x in pv
    has_y = y in pv
    if not (has_x or has_y):
        raise AssertionError(
            f"crossing path {verts} avoids both endpoints of the chord"
            f" ({x},{y}); the chord cannot separate the polygon"
        )
    if has_x and has_y:
        for i in range(4):
            if {verts[i], verts[i + 1]} == {x, y}:
                if i in (0, 3):
                    raise AssertionError(
                        f"chord ({x},{y}) is a terminal edge of crossing"
                        f" path {verts}"
                    )
                return CrossingType.I
        x_terminal = x in (verts[0], verts[4])
        y_terminal = y in (verts[0], verts[4])
        if x_terminal and y_terminal:
            raise AssertionError(
                f"both chord endpoints terminal in crossing path {verts}"
            )
        return CrossingType.IIB if (x_terminal or y_terminal) else CrossingType.IIA
    # exactly one endpoint on the path: four interior vertices
    if c1 == 2 and c2 == 2:
        return CrossingType.IIIA
    if min(c1, c2) == 1 and c1 + c2 == 4:
        return CrossingType.IIIB
    raise AssertionError(
        f"path {verts} through one chord endpoint splits {c1}+{c2}"
    )


def classify_crossing(p: PathCopy, sides: ChordSides) -> CrossingType | None:
    """Type of the 5-vertex path p relative to the chord, or None when p
    stays on one side."""
    if len(p) != 5:
        raise ValueError(f"crossing classification needs a 5-vertex path, got {len(p)}")
    x, y = sides.chord
    return _classify(p.vertices, x, y, sides.side1, sides.side2)


@dataclass(frozen=True)
class CrossingReport:
    """Per-chord tally of crossing 5-vertex paths, broken down by type."""

    chord: tuple[int, int]
    n1: int
    n2: int
    type_i: int
    type_iia: int
    type_iib: int
    type_iiia: int
    type_iiib: int

    @property
    def total(self) -> int:
        return (
            self.type_i
            + self.type_iia
            + self.type_iib
            + self.type_iiia
            + self.type_iiib
        )

    def as_dict(self) -> dict:
        return {
            "chord": list(self.chord),
            "n1": self.n1,
            "n2": self.n2,
            "type_i": self.type_i,
            "type_iia": self.type_iia,
            "type_iib": self.type_iib,
            "type_iiia": self.type_iiia,
            "type_iiib": self.type_iiib,
            "total": self.total,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict())


def count_crossing(t: Triangulation, chord) -> CrossingReport:
    """Exact per-type tallies of crossing 5-vertex paths for one chord.

    Enumerates the graph's 5-vertex paths once and classifies each, rather
    than assembling crossing paths case by case.
    """
    sides = chord_sides(t, chord)
    g = to_graph(t)
    x0, y0 = sides.chord[0] - 1, sides.chord[1] - 1
    s1 = frozenset(v - 1 for v in sides.side1)
    s2 = frozenset(v - 1 for v in sides.side2)
    tally = {kind: 0 for kind in CrossingType}
    for verts in iter_paths(g, 5):
        kind = _classify(verts, x0, y0, s1, s2)
        if kind is not None:
            tally[kind] += 1
    return CrossingReport(
        chord=sides.chord,
        n1=sides.n1,
        n2=sides.n2,
        type_i=tally[CrossingType.I],
        type_iia=tally[CrossingType.IIA],
        type_iib=tally[CrossingType.IIB],
        type_iiia=tally[CrossingType.IIIA],
        type_iiib=tally[CrossingType.IIIB],
    )


def count_crossing_paths(t: Triangulation, chord, k: int) -> int:
    """Number of k-vertex paths using interior vertices on both sides."""
    if k < 3:
        raise ValueError(f"crossing counts need k >= 3, got {k}")
    sides = chord_sides(t, chord)
    g = to_graph(t)
    s1 = frozenset(v - 1 for v in sides.side1)
    s2 = frozenset(v - 1 for v in sides.side2)
    total = 0
    for verts in iter_paths(g, k):
        pv = set(verts)
        if pv & s1 and pv & s2:
            total += 1
    return total


def decompose_count(
    t: Triangulation, chord, k: int = 5
) -> tuple[int, int, int, int]:
    """Split the k-vertex path count across a chord.

    Returns (side1 count, side2 count, crossing count, total count) where
    the side counts are taken in the subgraphs induced by each side plus
    the chord endpoints.  The four values satisfy
    total = side1 + side2 + crossing exactly for k >= 3: a path either
    stays inside one side subgraph or uses both interiors.
    """
    if k < 3:
        raise ValueError(f"decomposition needs k >= 3, got {k}")
    sides = chord_sides(t, chord)
    g = to_graph(t)
    x, y = sides.chord
    g1 = g.induced([v - 1 for v in sorted(sides.side1) + [x, y]])
    g2 = g.induced([v - 1 for v in sorted(sides.side2) + [x, y]])
    in_side1 = count_paths(g1, k)
    in_side2 = count_paths(g2, k)
    crossing = count_crossing_paths(t, chord, k)
    total = count_paths(g, k)
    if total != in_side1 + in_side2 + crossing:
        raise AssertionError(
            f"decomposition identity broken for chord {sides.chord}, k={k}:"
            f" {total} != {in_side1} + {in_side2} + {crossing}"
        )
    return in_side1, in_side2, crossing, total
