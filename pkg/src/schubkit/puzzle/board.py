"""Boards (valued cell sets) and rules (boundary pipe data).

A board is a set of rhombus cells with a polynomial valuation per cell;
adjacency is derived from shared lattice edges.  A rule assigns pipe
counts and endpoint labels to the boundary edges, optionally constrains
which labeled start meets which labeled end, and may bond an out endpoint
to an in endpoint ("identifications": the same pipe leaves the board and
re-enters, as along a staircase boundary).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from ..poly import Polynomial
from .geometry import Cell, Edge, SIDES, side_capacity

__all__ = ["Board", "Rule", "BoardError"]


class BoardError(ValueError):
    pass


@dataclass
class Board:
    cells: list[Cell]
    valuations: list[Polynomial]
    name: str = "board"

    def __post_init__(self):
        if len(self.cells) != len(self.valuations):
            raise BoardError("one valuation per cell is required")
        # edge -> list of (cell index, side)
        self.edge_map: dict[Edge, list[tuple[int, object]]] = {}
        seen = set()
        for idx, cell in enumerate(self.cells):
            if (cell.orientation, cell.anchor) in seen:
                raise BoardError(f"duplicate cell {cell}")
            seen.add((cell.orientation, cell.anchor))
            for side in cell.sides():
                self.edge_map.setdefault(cell.edge(side), []).append((idx, side))
        for edge, uses in self.edge_map.items():
            if len(uses) > 2:
                raise BoardError(f"edge {edge} shared by more than two cells")
            if len(uses) == 2:
                flows = {side.flow for _, side in uses}
                if flows != {"in", "out"}:
                    raise BoardError(f"edge {edge} has inconsistent flow")
                kinds = {side.kind for _, side in uses}
                if len(kinds) != 1:
                    raise BoardError(f"edge {edge} mixes side kinds")

    def boundary_edges(self) -> list[Edge]:
        return sorted(e for e, uses in self.edge_map.items() if len(uses) == 1)

    def boundary_flow(self, edge: Edge) -> str:
        """'in' if pipes on this edge enter the board, else 'out'."""
        (idx, side), = self.edge_map[edge]
        return side.flow

    def boundary_kind(self, edge: Edge) -> str:
        (idx, side), = self.edge_map[edge]
        return side.kind

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "cells": [
                {
                    "q": c.anchor[0],
                    "r": c.anchor[1],
                    "orientation": c.orientation,
                    "valuation": v.to_json(),
                }
                for c, v in zip(self.cells, self.valuations)
            ],
        }

    @staticmethod
    def from_json(data) -> "Board":
        if isinstance(data, (str, Path)):
            p = Path(data)
            data = json.loads(p.read_text() if p.exists() else str(data))
        cells, vals = [], []
        for cd in data["cells"]:
            cells.append(Cell(cd["orientation"], (int(cd["q"]), int(cd["r"]))))
            v = cd.get("valuation", 1)
            vals.append(
                Polynomial.const(v) if isinstance(v, int) else Polynomial.from_json(v)
            )
        return Board(cells, vals, data.get("name", "board"))


@dataclass
class Rule:
    """Boundary data: pipe counts, labels, connections, identifications."""

    counts: dict[Edge, int]
    labels: dict[Edge, tuple[str, ...]] = field(default_factory=dict)
    connections: list[tuple[str, str]] | None = None
    identifications: list[tuple[str, str]] = field(default_factory=list)
    edge_limits: dict[Edge, int] = field(default_factory=dict)

    def count(self, edge: Edge) -> int:
        return self.counts.get(edge, 0)

    def validate_against(self, board: Board) -> None:
        boundary = set(board.boundary_edges())
        for edge, cnt in self.counts.items():
            if edge not in boundary:
                raise BoardError(f"rule names non-boundary edge {edge}")
            cap = side_capacity(board.boundary_kind(edge))
            if not 0 <= cnt <= cap:
                raise BoardError(f"count {cnt} out of range for edge {edge}")
        for edge, labs in self.labels.items():
            if len(labs) != self.count(edge):
                raise BoardError(f"edge {edge}: {len(labs)} labels for {self.count(edge)} pipes")
        all_labels = [l for labs in self.labels.values() for l in labs]
        if len(all_labels) != len(set(all_labels)):
            raise BoardError("duplicate endpoint labels")

    def to_json(self) -> dict:
        return {
            "endpoints": [
                {"edge": list(edge), "labels": list(self.labels.get(edge, ())), "count": cnt}
                for edge, cnt in sorted(self.counts.items())
            ],
            "connections": None
            if self.connections is None
            else [list(c) for c in self.connections],
            "identifications": [list(c) for c in self.identifications],
            "edge_limits": [
                {"edge": list(e), "max": m} for e, m in sorted(self.edge_limits.items())
            ],
        }

    @staticmethod
    def from_json(data) -> "Rule":
        if isinstance(data, (str, Path)):
            p = Path(data)
            data = json.loads(p.read_text() if p.exists() else str(data))
        counts, labels = {}, {}
        for ep in data.get("endpoints", ()):
            edge = (ep["edge"][0], int(ep["edge"][1]), int(ep["edge"][2]))
            labs = tuple(ep.get("labels", ()))
            counts[edge] = int(ep.get("count", len(labs)))
            if labs:
                labels[edge] = labs
        conns = data.get("connections")
        return Rule(
            counts=counts,
            labels=labels,
            connections=None if conns is None else [tuple(c) for c in conns],
            identifications=[tuple(c) for c in data.get("identifications", ())],
            edge_limits={
                (el["edge"][0], int(el["edge"][1]), int(el["edge"][2])): int(el["max"])
                for el in data.get("edge_limits", ())
            },
        )
