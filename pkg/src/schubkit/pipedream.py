"""Reduced pipe dreams on the staircase and their weights.

A pipe dream for w in S_n places cross tiles on cells (i, j) of the
staircase {i + j <= n} (1-based, row i from the top); every other cell of
the quarter plane is a bump.  Pipe i enters at the left of row i and exits
at the top of column w(i).  Reduced means no pair of pipes crosses more
than once; the weight of a dream is prod x_i (single) or
prod (x_i - y_j) (double) over its crosses.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .perm import Permutation
from .poly import Polynomial

__all__ = [
    "PipeDream",
    "staircase_cells",
    "pd_permutation",
    "enumerate_pds",
    "pd_weight_single",
    "pd_weight_double",
]

CROSS_GLYPH = "┼"  # ┼
BUMP_GLYPH = "╭"  # ╭


def staircase_cells(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n) for j in range(1, n - i + 1)]


@dataclass(frozen=True)
class PipeDream:
    n: int
    crosses: frozenset[tuple[int, int]]

    @staticmethod
    def make(n: int, crosses) -> "PipeDream":
        cells = set(staircase_cells(n))
        crs = frozenset((int(i), int(j)) for i, j in crosses)
        bad = crs - cells
        if bad:
            raise ValueError(f"crosses outside the staircase for n={n}: {sorted(bad)}")
        return PipeDream(n, crs)

    def render(self) -> str:
        lines = []
        for i in range(1, self.n):
            row = "".join(
                CROSS_GLYPH if (i, j) in self.crosses else BUMP_GLYPH
                for j in range(1, self.n - i + 1)
            )
            lines.append(row)
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"n": self.n, "crosses": sorted([i, j] for i, j in self.crosses)}

    @staticmethod
    def from_json(data: dict) -> "PipeDream":
        return PipeDream.make(data["n"], [tuple(c) for c in data["crosses"]])


def _trace(pd: PipeDream) -> tuple[Permutation, bool]:
    """Trace all pipes; returns (permutation, reduced?).

    Tile behaviour: a cross passes pipes straight through (W->E, S->N); a
    bump turns them (W->N, S->E).  Cells off the staircase are bumps.
    """
    n = pd.n
    visits: dict[tuple[int, int], list[int]] = {}
    images = []
    for pipe in range(1, n + 1):
        r, c = pipe, 1
        heading = "E"
        while r >= 1:
            is_cross = (r, c) in pd.crosses
            if is_cross:
                visits.setdefault((r, c), []).append(pipe)
            if is_cross:
                if heading == "E":
                    c += 1
                else:
                    r -= 1
            else:
                if heading == "E":
                    heading = "N"
                    r -= 1
                else:
                    heading = "E"
                    c += 1
        images.append(c)
    perm = Permutation.from_one_line(images)
    pair_counts: dict[tuple[int, int], int] = {}
    reduced = True
    for pipes in visits.values():
        if len(pipes) != 2:
            # A cross traversed by fewer than two pipes cannot happen on the
            # staircase; guard anyway.
            reduced = False
            continue
        key = (min(pipes), max(pipes))
        pair_counts[key] = pair_counts.get(key, 0) + 1
        if pair_counts[key] > 1:
            reduced = False
    return perm, reduced


def pd_permutation(pd: PipeDream) -> Permutation:
    """w with w(i) = exit column of the pipe entering at row i."""
    return _trace(pd)[0]


def is_reduced(pd: PipeDream) -> bool:
    return _trace(pd)[1]


@lru_cache(maxsize=None)
def _all_pds(n: int) -> dict[Permutation, tuple[PipeDream, ...]]:
    """Every reduced pipe dream on the staircase for S_n, keyed by w."""
    cells = staircase_cells(n)
    buckets: dict[Permutation, list[PipeDream]] = {}
    for k in range(len(cells) + 1):
        for combo in itertools.combinations(cells, k):
            pd = PipeDream(n, frozenset(combo))
            perm, reduced = _trace(pd)
            if reduced:
                buckets.setdefault(perm, []).append(pd)
    return {w: tuple(v) for w, v in buckets.items()}


def enumerate_pds(w: Permutation) -> list[PipeDream]:
    """All reduced pipe dreams with pd_permutation = w (exhaustive scan)."""
    n = max(w.size, 1)
    result = _all_pds(n).get(w, ())
    return sorted(result, key=lambda p: sorted(p.crosses))


def pd_weight_single(pd: PipeDream) -> Polynomial:
    poly = Polynomial.const(1)
    for i, _ in pd.crosses:
        poly = poly * Polynomial.x(i)
    return poly


def pd_weight_double(pd: PipeDream) -> Polynomial:
    poly = Polynomial.const(1)
    for i, j in pd.crosses:
        poly = poly * (Polynomial.x(i) - Polynomial.y(j))
    return poly
