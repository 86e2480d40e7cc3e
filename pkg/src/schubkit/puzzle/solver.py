"""Exhaustive tiling solver with pipe tracing.

Cells are processed in flow order (every in-edge of a cell is either a
boundary edge or the out-edge of an earlier cell), so candidate tiles are
filtered by known in-side pipe counts and boundary counts prune early.
Completed count assignments are then traced at the strand level: pipes get
labels from the rule, identifications splice boundary exits to re-entries,
and a solution must satisfy the connection spec, contain no pipe cycle,
and keep every pipe pair within the crossing bound.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..poly import Polynomial
from .board import Board, BoardError, Rule
from .catalog import TileCatalog, TileDef
from .geometry import SIDES, side_capacity

__all__ = ["Solution", "solve", "value"]


@dataclass
class Solution:
    board: Board
    tiles: tuple[TileDef, ...]  # one per board cell
    pipes: list[dict]  # {"start", "end", "path", "crossings"}

    def value(self) -> Polynomial:
        poly = Polynomial.const(1)
        for tile, valuation in zip(self.tiles, self.board.valuations):
            if tile.valued:
                poly = poly * valuation
        return poly

    def conservation_ok(self) -> bool:
        """Per cell, pipes in equals pipes out (catalog guarantees this)."""
        for tile in self.tiles:
            ins = sum(
                tile.side_counts.get(s.name, 0)
                for s in SIDES[tile.orientation]
                if s.flow == "in"
            )
            outs = sum(
                tile.side_counts.get(s.name, 0)
                for s in SIDES[tile.orientation]
                if s.flow == "out"
            )
            if ins != outs:
                return False
        return True

    def acyclic_ok(self) -> bool:
        """Every strand was traversed by a traced pipe (no closed loops)."""
        total_strands = sum(len(t.strands) for t in self.tiles)
        traversed = sum(len(p["path"]) for p in self.pipes)
        return total_strands == traversed


def _flow_order(board: Board) -> list[int]:
    """Cells sorted so producers come before consumers (Kahn)."""
    n = len(board.cells)
    consumers: dict[int, list[int]] = {i: [] for i in range(n)}
    indeg = [0] * n
    for edge, uses in board.edge_map.items():
        if len(uses) == 2:
            (i1, s1), (i2, s2) = uses
            src, dst = (i1, i2) if s1.flow == "out" else (i2, i1)
            consumers[src].append(dst)
            indeg[dst] += 1
    ready = sorted(i for i in range(n) if indeg[i] == 0)
    order = []
    while ready:
        i = ready.pop()
        order.append(i)
        for j in consumers[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                ready.append(j)
    if len(order) != n:
        raise BoardError("board flow graph has a cycle")
    return order


def solve(
    board: Board,
    rule: Rule,
    catalog: TileCatalog,
    max_pair_crossings: int = 1,
) -> list[Solution]:
    """All tilings satisfying the rule; empty list is a valid outcome."""
    rule.validate_against(board)
    order = _flow_order(board)
    boundary = set(board.boundary_edges())
    in_sides = {o: [s for s in SIDES[o] if s.flow == "in"] for o in SIDES}
    out_sides = {o: [s for s in SIDES[o] if s.flow == "out"] for o in SIDES}

    solutions: list[Solution] = []
    assignment: dict[int, TileDef] = {}
    edge_count: dict = {e: rule.count(e) for e in boundary}

    def limit_ok(edge, count) -> bool:
        cap = rule.edge_limits.get(edge)
        return cap is None or count <= cap

    def backtrack(pos: int) -> None:
        if pos == len(order):
            sol = _trace_solution(board, rule, assignment, order, max_pair_crossings)
            if sol is not None:
                solutions.append(sol)
            return
        idx = order[pos]
        cell = board.cells[idx]
        sig = tuple(edge_count[cell.edge(s)] for s in in_sides[cell.orientation])
        for tile in catalog.candidates(cell.orientation, sig):
            ok = True
            produced = []
            for s in out_sides[cell.orientation]:
                e = cell.edge(s)
                cnt = tile.side_counts.get(s.name, 0)
                if not limit_ok(e, cnt):
                    ok = False
                    break
                if e in boundary:
                    if cnt != rule.count(e):
                        ok = False
                        break
                else:
                    produced.append((e, cnt))
            if not ok:
                continue
            assignment[idx] = tile
            for e, cnt in produced:
                edge_count[e] = cnt
            backtrack(pos + 1)
            del assignment[idx]
            for e, _ in produced:
                del edge_count[e]

    backtrack(0)
    return solutions


def _trace_solution(board, rule, assignment, order, max_pair_crossings):
    """Strand-level pass: label pipes, check connections and crossings."""
    # (edge, slot) -> (cell, strand index) for entering strands.
    entry: dict = {}
    for idx in order:
        tile = assignment[idx]
        cell = board.cells[idx]
        for si, (a, b) in enumerate(tile.strands):
            entry[(cell.edge(a[0]), a[1])] = (idx, si)

    id_next = dict(rule.identifications)  # end label -> continue-at start label
    id_targets = set(id_next.values())
    label_at: dict[str, tuple] = {}
    in_eps, out_eps = {}, {}
    for edge in board.boundary_edges():
        flow = board.boundary_flow(edge)
        labs = rule.labels.get(edge)
        for slot in range(rule.count(edge)):
            lab = labs[slot] if labs else f"{flow}:{edge}:{slot}"
            label_at[lab] = (edge, slot)
            (in_eps if flow == "in" else out_eps)[(edge, slot)] = lab

    strand_owner: dict[tuple[int, int], int] = {}
    pipes = []
    starts = [lab for (e, s), lab in sorted(in_eps.items()) if lab not in id_targets]
    for pipe_no, start in enumerate(sorted(starts)):
        path = []
        lab = start
        guard = 0
        while True:
            guard += 1
            if guard > 10_000:
                raise BoardError("identification chain does not terminate")
            if lab not in label_at:
                raise BoardError(f"unknown label {lab!r}")
            edge, slot = label_at[lab]
            # walk through cells until a boundary out endpoint
            while (edge, slot) in entry:
                idx, si = entry[(edge, slot)]
                strand_owner[(idx, si)] = pipe_no
                path.append((idx, si))
                cell = board.cells[idx]
                out_ep = assignment[idx].strands[si][1]
                edge, slot = cell.edge(out_ep[0]), out_ep[1]
            end_lab = out_eps.get((edge, slot))
            if end_lab is None:
                return None  # pipe exits where the rule has no endpoint
            if end_lab in id_next:
                lab = id_next[end_lab]
                continue
            pipes.append({"start": start, "end": end_lab, "path": path})
            break

    if rule.connections is not None:
        got = {(p["start"], p["end"]) for p in pipes}
        if got != set(rule.connections):
            return None

    # crossing bound per pipe pair
    pair_crossings: dict[tuple[int, int], int] = {}
    for idx, tile in assignment.items():
        for i, j in tile.crossings:
            a = strand_owner.get((idx, i))
            b = strand_owner.get((idx, j))
            if a is None or b is None:
                return None  # strand not reached by any pipe: a loop
            key = (min(a, b), max(a, b))
            pair_crossings[key] = pair_crossings.get(key, 0) + 1
            if a == b or pair_crossings[key] > max_pair_crossings:
                return None

    sol = Solution(
        board=board,
        tiles=tuple(assignment[i] for i in range(len(board.cells))),
        pipes=pipes,
    )
    for p in pipes:
        p["crossings"] = pair_crossings
    if not sol.acyclic_ok():
        return None
    return sol


def value(board: Board, rule: Rule, catalog: TileCatalog, max_pair_crossings: int = 1) -> Polynomial:
    """Sum of solution values (product of valuations of valued tiles)."""
    total = Polynomial.zero()
    for sol in solve(board, rule, catalog, max_pair_crossings):
        total = total + sol.value()
    return total
