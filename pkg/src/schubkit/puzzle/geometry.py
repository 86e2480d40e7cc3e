"""Rhombus cells on the triangular lattice.

Lattice points are integer combinations a*e1 + b*e2 with e1 = (1, 0) and
e2 = (1/2, sqrt(3)/2); e3 = e2 - e1 is the third unit direction.  A cell is
a unit rhombus in one of three orientations, anchored at a lattice point:

* r12 - sides e1 (horizontal) and e2; leans right,
* r13 - sides e1 and e3; leans left,
* r23 - sides e2 and e3; no horizontal side (the "square" of the bumpless
  grid, drawn sheared).

Horizontal sides carry up to two pipes (two slots, ordered along +e1);
tilted sides carry at most one.  Pipes are oriented: they cross horizontal
sides upward and tilted sides toward up-left (e2) / up-right (e3), which
fixes an in/out role for every side of every cell and makes any board a
flow DAG.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["Edge", "Side", "Cell", "ORIENTATIONS", "SIDES", "CYCLIC", "side_capacity"]

Edge = tuple[str, int, int]  # (direction "e1"|"e2"|"e3", a, b)

ORIENTATIONS = ("r12", "r13", "r23")


@dataclass(frozen=True)
class Side:
    name: str
    direction: str  # which unit vector the side is parallel to
    offset: tuple[int, int]  # anchor offset of the side's edge
    kind: str  # "h" or "t"
    flow: str  # "in" or "out"


# Sides in canonical (serialization) order per orientation.
SIDES: dict[str, tuple[Side, ...]] = {
    "r12": (
        Side("bottom", "e1", (0, 0), "h", "in"),
        Side("right", "e2", (1, 0), "t", "in"),
        Side("top", "e1", (0, 1), "h", "out"),
        Side("left", "e2", (0, 0), "t", "out"),
    ),
    "r13": (
        Side("bottom", "e1", (0, 0), "h", "in"),
        Side("left", "e3", (0, 0), "t", "in"),
        Side("top", "e1", (-1, 1), "h", "out"),
        Side("right", "e3", (1, 0), "t", "out"),
    ),
    "r23": (
        Side("ll", "e3", (0, 0), "t", "in"),
        Side("lr", "e2", (0, 0), "t", "in"),
        Side("ul", "e2", (-1, 1), "t", "out"),
        Side("ur", "e3", (0, 1), "t", "out"),
    ),
}

# Endpoint positions around the cell perimeter, counterclockwise.  Slots on
# a side are indexed along the edge's canonical +direction, so a side
# traversed backwards lists its slots in reverse.  Used to decide which
# strand pairs cross (chords interleave).
CYCLIC: dict[str, tuple[tuple[str, int], ...]] = {
    "r12": (("bottom", 0), ("bottom", 1), ("right", 0), ("top", 1), ("top", 0), ("left", 0)),
    "r13": (("bottom", 0), ("bottom", 1), ("right", 0), ("top", 1), ("top", 0), ("left", 0)),
    "r23": (("lr", 0), ("ur", 0), ("ul", 0), ("ll", 0)),
}


def side_capacity(kind: str) -> int:
    return 2 if kind == "h" else 1


@dataclass(frozen=True)
class Cell:
    orientation: str
    anchor: tuple[int, int]

    def sides(self) -> tuple[Side, ...]:
        return SIDES[self.orientation]

    def side(self, name: str) -> Side:
        for s in self.sides():
            if s.name == name:
                return s
        raise KeyError(f"{self.orientation} has no side {name!r}")

    def edge(self, side: Side | str) -> Edge:
        if isinstance(side, str):
            side = self.side(side)
        a, b = self.anchor
        da, db = side.offset
        return (side.direction, a + da, b + db)

    def vertices(self) -> list[tuple[float, float]]:
        """Cartesian corner coordinates (for rendering)."""
        import math

        vecs = {
            "e1": (1.0, 0.0),
            "e2": (0.5, math.sqrt(3) / 2),
            "e3": (-0.5, math.sqrt(3) / 2),
        }
        a, b = self.anchor
        origin = (a * vecs["e1"][0] + b * vecs["e2"][0], b * vecs["e2"][1])
        d1, d2 = {
            "r12": ("e1", "e2"),
            "r13": ("e1", "e3"),
            "r23": ("e2", "e3"),
        }[self.orientation]
        v1, v2 = vecs[d1], vecs[d2]
        return [
            origin,
            (origin[0] + v1[0], origin[1] + v1[1]),
            (origin[0] + v1[0] + v2[0], origin[1] + v1[1] + v2[1]),
            (origin[0] + v2[0], origin[1] + v2[1]),
        ]
