"""Bumpless pipe dreams on the n x n grid.

Six tile kinds tile the square: blank, cross, horizontal, vertical, and two
elbows.  Pipe i enters at the east boundary of row i, travels west/south,
and exits at the south boundary of column w(i).  Blank count = length(w)
for reduced dreams (no pair of pipes crossing more than once); weights are
products over blanks of x_i (single) or x_i - y_j (double).

Enumeration is by row-major backtracking over edge-consistent grids;
droop_closure provides the independent generator used for cross-validation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .perm import Permutation
from .poly import Polynomial

__all__ = [
    "BpdTile",
    "BumplessPipeDream",
    "InvalidBpdError",
    "bpd_permutation",
    "rothe_bpd",
    "enumerate_bpds",
    "droop_closure",
    "bpd_weight_single",
    "bpd_weight_double",
]


class InvalidBpdError(ValueError):
    """Raised for grids that violate edge matching or boundary conditions."""


class BpdTile(Enum):
    BLANK = "blank"
    CROSS = "cross"
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"
    ELBOW_SE = "elbow_se"
    ELBOW_NW = "elbow_nw"

    @property
    def edges(self) -> frozenset[str]:
        return _EDGES[self]

    @property
    def glyph(self) -> str:
        return _GLYPHS[self]


_EDGES = {
    BpdTile.BLANK: frozenset(),
    BpdTile.CROSS: frozenset("NSEW"),
    BpdTile.HORIZONTAL: frozenset("WE"),
    BpdTile.VERTICAL: frozenset("NS"),
    BpdTile.ELBOW_SE: frozenset("SE"),
    BpdTile.ELBOW_NW: frozenset("NW"),
}

_GLYPHS = {
    BpdTile.BLANK: "░",  # ░
    BpdTile.CROSS: "┼",  # ┼
    BpdTile.HORIZONTAL: "─",  # ─
    BpdTile.VERTICAL: "│",  # │
    BpdTile.ELBOW_SE: "╭",  # ╭
    BpdTile.ELBOW_NW: "╯",  # ╯
}

# Exit edge for a pipe entering a tile through a given edge.
_THROUGH = {
    BpdTile.CROSS: {"E": "W", "W": "E", "N": "S", "S": "N"},
    BpdTile.HORIZONTAL: {"E": "W", "W": "E"},
    BpdTile.VERTICAL: {"N": "S", "S": "N"},
    BpdTile.ELBOW_SE: {"S": "E", "E": "S"},
    BpdTile.ELBOW_NW: {"N": "W", "W": "N"},
}


@dataclass(frozen=True)
class BumplessPipeDream:
    n: int
    grid: tuple[tuple[BpdTile, ...], ...]  # grid[i][j], 0-based row i from top

    def tile(self, i: int, j: int) -> BpdTile:
        """1-based access."""
        return self.grid[i - 1][j - 1]

    def blanks(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for i in range(1, self.n + 1)
            for j in range(1, self.n + 1)
            if self.tile(i, j) is BpdTile.BLANK
        ]

    def render(self) -> str:
        return "\n".join("".join(t.glyph for t in row) for row in self.grid)

    def to_json(self) -> dict:
        return {"n": self.n, "grid": [[t.value for t in row] for row in self.grid]}

    @staticmethod
    def from_json(data: dict) -> "BumplessPipeDream":
        grid = tuple(tuple(BpdTile(v) for v in row) for row in data["grid"])
        bpd = BumplessPipeDream(int(data["n"]), grid)
        validate(bpd)
        return bpd


def validate(bpd: BumplessPipeDream) -> None:
    """Edge-matching and boundary occupancy; raises InvalidBpdError."""
    n = bpd.n
    if len(bpd.grid) != n or any(len(row) != n for row in bpd.grid):
        raise InvalidBpdError(f"grid is not {n}x{n}")
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            edges = bpd.tile(i, j).edges
            if i == 1 and "N" in edges:
                raise InvalidBpdError(f"pipe leaves the north boundary at {(i, j)}")
            if j == 1 and "W" in edges:
                raise InvalidBpdError(f"pipe leaves the west boundary at {(i, j)}")
            if i == n and "S" not in edges:
                raise InvalidBpdError(f"south boundary edge empty at {(i, j)}")
            if j == n and "E" not in edges:
                raise InvalidBpdError(f"east boundary edge empty at {(i, j)}")
            if i < n and (("S" in edges) != ("N" in bpd.tile(i + 1, j).edges)):
                raise InvalidBpdError(f"edge mismatch below {(i, j)}")
            if j < n and (("E" in edges) != ("W" in bpd.tile(i, j + 1).edges)):
                raise InvalidBpdError(f"edge mismatch east of {(i, j)}")


def _trace(bpd: BumplessPipeDream) -> tuple[Permutation, bool]:
    """Follow each pipe from east row i to its south column; reduced check."""
    n = bpd.n
    visits: dict[tuple[int, int], list[int]] = {}
    images = []
    for pipe in range(1, n + 1):
        i, j = pipe, n
        entry = "E"
        while True:
            tile = bpd.tile(i, j)
            if tile is BpdTile.CROSS:
                visits.setdefault((i, j), []).append(pipe)
            exits = _THROUGH.get(tile, {}).get(entry)
            if exits is None:
                raise InvalidBpdError(f"pipe {pipe} stuck at {(i, j)} ({tile})")
            if exits == "W":
                j -= 1
                entry = "E"
            elif exits == "S":
                i += 1
                entry = "N"
            else:
                raise InvalidBpdError(
                    f"pipe {pipe} moves {exits} at {(i, j)}; flow must be west/south"
                )
            if i > n:
                images.append(j)
                break
            if j < 1:
                raise InvalidBpdError(f"pipe {pipe} left the west boundary")
    perm = Permutation.from_one_line(images)
    reduced = True
    pair_counts: dict[tuple[int, int], int] = {}
    for pipes in visits.values():
        if len(pipes) != 2:
            reduced = False
            continue
        key = (min(pipes), max(pipes))
        pair_counts[key] = pair_counts.get(key, 0) + 1
        if pair_counts[key] > 1:
            reduced = False
    return perm, reduced


def bpd_permutation(bpd: BumplessPipeDream) -> Permutation:
    validate(bpd)
    return _trace(bpd)[0]


def is_reduced(bpd: BumplessPipeDream) -> bool:
    return _trace(bpd)[1]


def rothe_bpd(w: Permutation, n: int) -> BumplessPipeDream:
    """Canonical starting dream: pipe i runs west to column w(i), then south.

    Blanks land exactly on the Rothe diagram
    D(w) = {(i, j) : j < w(i), w^-1(j) > i}.
    """
    if not w.in_sn(n):
        raise ValueError(f"{w} is not in S_{n}")
    winv = w.inverse()
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            wi, iv = w(i), winv(j)
            if j == wi:
                row.append(BpdTile.ELBOW_SE)
            else:
                horizontal = j > wi
                vertical = i > iv
                if horizontal and vertical:
                    row.append(BpdTile.CROSS)
                elif horizontal:
                    row.append(BpdTile.HORIZONTAL)
                elif vertical:
                    row.append(BpdTile.VERTICAL)
                else:
                    row.append(BpdTile.BLANK)
        rows.append(tuple(row))
    bpd = BumplessPipeDream(n, tuple(rows))
    validate(bpd)
    return bpd


# Tile choices keyed by (north edge occupied, west edge occupied).  Forced
# cells have a single option; only (0,0) and (1,1) branch.
_OPTIONS = {
    (False, False): (BpdTile.BLANK, BpdTile.ELBOW_SE),
    (False, True): (BpdTile.HORIZONTAL,),
    (True, False): (BpdTile.VERTICAL,),
    (True, True): (BpdTile.CROSS, BpdTile.ELBOW_NW),
}


@lru_cache(maxsize=None)
def _all_bpds(n: int) -> dict[Permutation, tuple[BumplessPipeDream, ...]]:
    """All reduced BPDs on the n x n grid, keyed by permutation."""
    buckets: dict[Permutation, list[BumplessPipeDream]] = {}
    grid: list[list[BpdTile]] = [[BpdTile.BLANK] * n for _ in range(n)]

    def fill(pos: int) -> None:
        if pos == n * n:
            bpd = BumplessPipeDream(n, tuple(tuple(row) for row in grid))
            perm, reduced = _trace(bpd)
            if reduced:
                buckets.setdefault(perm, []).append(bpd)
            return
        i, j = divmod(pos, n)
        north = i > 0 and "S" in grid[i - 1][j].edges
        west = j > 0 and "E" in grid[i][j - 1].edges
        for tile in _OPTIONS[(north, west)]:
            edges = tile.edges
            if i == n - 1 and "S" not in edges:
                continue
            if j == n - 1 and "E" not in edges:
                continue
            grid[i][j] = tile
            fill(pos + 1)

    fill(0)
    return {w: tuple(v) for w, v in buckets.items()}


def enumerate_bpds(w: Permutation, n: int | None = None) -> list[BumplessPipeDream]:
    """All reduced BPDs with bpd_permutation = w, by exhaustive backtracking."""
    if n is None:
        n = max(w.size, 1)
    if not w.in_sn(n):
        raise ValueError(f"{w} is not in S_{n}")
    found = _all_bpds(n).get(w, ())
    return sorted(found, key=lambda b: b.to_json()["grid"])


def _droop_moves(bpd: BumplessPipeDream):
    """Legal droops: an SE elbow and a strictly-SE blank whose rectangle
    contains no other elbow."""
    elbows = [
        (i, j)
        for i in range(1, bpd.n + 1)
        for j in range(1, bpd.n + 1)
        if bpd.tile(i, j) is BpdTile.ELBOW_SE
    ]
    blanks = bpd.blanks()
    for (ri, rj), (bi, bj) in itertools.product(elbows, blanks):
        if bi <= ri or bj <= rj:
            continue
        legal = True
        for i in range(ri, bi + 1):
            for j in range(rj, bj + 1):
                if (i, j) == (ri, rj):
                    continue
                if bpd.tile(i, j) in (BpdTile.ELBOW_SE, BpdTile.ELBOW_NW):
                    legal = False
                    break
            if not legal:
                break
        if legal:
            yield (ri, rj), (bi, bj)


def _do_droop(bpd: BumplessPipeDream, move) -> BumplessPipeDream:
    (ri, rj), (bi, bj) = move
    g = [list(row) for row in bpd.grid]

    def put(i, j, t):
        g[i - 1][j - 1] = t

    put(ri, rj, BpdTile.BLANK)
    put(bi, bj, BpdTile.ELBOW_NW)
    put(bi, rj, BpdTile.ELBOW_SE)
    put(ri, bj, BpdTile.ELBOW_SE)
    for j in range(rj + 1, bj):
        put(ri, j, BpdTile.BLANK if bpd.tile(ri, j) is BpdTile.HORIZONTAL else BpdTile.VERTICAL)
        put(bi, j, BpdTile.HORIZONTAL if bpd.tile(bi, j) is BpdTile.BLANK else BpdTile.CROSS)
    for i in range(ri + 1, bi):
        put(i, rj, BpdTile.BLANK if bpd.tile(i, rj) is BpdTile.VERTICAL else BpdTile.HORIZONTAL)
        put(i, bj, BpdTile.VERTICAL if bpd.tile(i, bj) is BpdTile.BLANK else BpdTile.CROSS)
    return BumplessPipeDream(bpd.n, tuple(tuple(row) for row in g))


def droop_closure(w: Permutation, n: int | None = None) -> list[BumplessPipeDream]:
    """Generate BPD(w) from the Rothe dream by droop moves.

    Independent of enumerate_bpds; the two must agree setwise (tested).
    """
    if n is None:
        n = max(w.size, 1)
    start = rothe_bpd(w, n)
    seen = {start}
    frontier = [start]
    while frontier:
        bpd = frontier.pop()
        for move in _droop_moves(bpd):
            new = _do_droop(bpd, move)
            if new in seen:
                continue
            validate(new)
            perm, reduced = _trace(new)
            if perm != w:
                raise InvalidBpdError("droop move changed the permutation")
            if reduced:
                seen.add(new)
                frontier.append(new)
    return sorted(seen, key=lambda b: b.to_json()["grid"])


def bpd_weight_single(bpd: BumplessPipeDream) -> Polynomial:
    poly = Polynomial.const(1)
    for i, _ in bpd.blanks():
        poly = poly * Polynomial.x(i)
    return poly


def bpd_weight_double(bpd: BumplessPipeDream) -> Polynomial:
    poly = Polynomial.const(1)
    for i, j in bpd.blanks():
        poly = poly * (Polynomial.x(i) - Polynomial.y(j))
    return poly
