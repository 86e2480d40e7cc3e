"""Boards and rules for the standard configurations.

* square n x n board of r23 cells whose solutions are the bumpless pipe
  dreams of w,
* staircase board of r12 cells whose solutions are the pipe dreams of w
  (the staircase boundary zigzag is expressed with rule identifications),
* the two hexagonal strip boards related by sliding the z-valued cell
  across k columns (the Yang-Baxter configuration),
* Young-diagram boards for the forced-tile diagnostics.
"""

from __future__ import annotations

from ..perm import Permutation
from ..poly import Polynomial
from .board import Board, Rule
from .geometry import Cell

__all__ = [
    "bpd_board",
    "bpd_rule",
    "pd_board",
    "pd_rule",
    "hexagon_boards",
    "hexagon_boundary",
    "young_board_rows",
    "young_rule_rows",
    "young_board_grid",
    "young_rule_grid",
]


# -- bumpless board -------------------------------------------------------
# Square cell (i, j) (row i from the top, column j) sits at r23 anchor
# (-i, n + i - j); its sides map E->ll, N->lr, W->ur, S->ul.


def _bpd_cell(i: int, j: int, n: int) -> Cell:
    return Cell("r23", (-i, n + i - j))


def bpd_board(n: int, weights: str = "double") -> Board:
    cells, vals = [], []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            cells.append(_bpd_cell(i, j, n))
            if weights == "double":
                vals.append(Polynomial.x(i) - Polynomial.y(j))
            elif weights == "single":
                vals.append(Polynomial.x(i))
            else:
                raise ValueError(f"unknown weights {weights!r}")
    return Board(cells, vals, name=f"bpd-{n}-{weights}")


def bpd_rule(w: Permutation, n: int) -> Rule:
    """Pipes enter east row i, leave south column w(i)."""
    if not w.in_sn(n):
        raise ValueError(f"{w} is not in S_{n}")
    counts, labels = {}, {}
    for i in range(1, n + 1):
        east = _bpd_cell(i, n, n).edge("ll")
        counts[east] = 1
        labels[east] = (f"p{i}",)
        south = _bpd_cell(n, i, n).edge("ul")
        counts[south] = 1
        labels[south] = (f"q{i}",)
        counts[_bpd_cell(1, i, n).edge("lr")] = 0  # north
        counts[_bpd_cell(i, 1, n).edge("ur")] = 0  # west
    connections = [(f"p{i}", f"q{w(i)}") for i in range(1, n + 1)]
    return Rule(counts=counts, labels=labels, connections=connections)


# -- pipe-dream board -----------------------------------------------------
# Staircase cell (i, j), i + j <= n, maps to r12 anchor (-j, n - i) with
# pipe-dream sides S->bottom, W->right, N->top, E->left (an east-west
# mirror, so puzzle flow matches the dream's north/east flow).


def _pd_cell(i: int, j: int, n: int) -> Cell:
    return Cell("r12", (-j, n - i))


def pd_board(n: int, weights: str = "double") -> Board:
    cells, vals = [], []
    for i in range(1, n):
        for j in range(1, n - i + 1):
            cells.append(_pd_cell(i, j, n))
            if weights == "double":
                vals.append(Polynomial.x(i) - Polynomial.y(j))
            elif weights == "single":
                vals.append(Polynomial.x(i))
            else:
                raise ValueError(f"unknown weights {weights!r}")
    return Board(cells, vals, name=f"pd-{n}-{weights}")


def pd_rule(w: Permutation, n: int) -> Rule:
    """Row pipes, top exits, and the staircase zigzag along the diagonal.

    The pipe entering below the diagonal cell of row n-1 is pipe n; each
    diagonal exit e_i re-enters as d_{i-1} one row up (identifications), and
    the final diagonal exit e_1 is the top exit of column n.
    """
    if not w.in_sn(n):
        raise ValueError(f"{w} is not in S_{n}")
    counts, labels = {}, {}
    for i in range(1, n):
        west = _pd_cell(i, 1, n).edge("right")
        counts[west] = 1
        labels[west] = (f"p{i}",)
        top = _pd_cell(1, i, n).edge("top")
        counts[top] = 1
        labels[top] = (f"q{i}",)
        diag = _pd_cell(i, n - i, n)
        counts[diag.edge("bottom")] = 1
        labels[diag.edge("bottom")] = (f"d{i}",)
        counts[diag.edge("left")] = 1
        labels[diag.edge("left")] = (f"e{i}",)
    identifications = [(f"e{i}", f"d{i - 1}") for i in range(2, n)]

    def start(i: int) -> str:
        return f"p{i}" if i < n else f"d{n - 1}"

    def end(j: int) -> str:
        return f"q{j}" if j < n else "e1"

    connections = [(start(i), end(w(i))) for i in range(1, n + 1)]
    if n == 1:
        connections = []
    return Rule(
        counts=counts,
        labels=labels,
        connections=connections,
        identifications=identifications,
    )


# -- hexagonal strips -----------------------------------------------------
# Left board: z-cell at the west end; bottom row r12 (valuations x_i), top
# row r13 (valuations y_i).  Right board: same hexagonal region tiled the
# other way, z-cell at the east end.  The boundary edges coincide, so one
# rule drives both boards.


def _hex_valuations(k: int, relation: str):
    """Cell valuations for the strip columns and the sliding cell.

    standard: column cells carry x_i and y_i with x_i + y_i + z = 0; the
    free parameters are x_1..x_k and y_1 (y_i = x_1 + y_1 - x_i keeps
    x_i + y_i constant across columns).

    double: the attempted two-family variant.  Column i carries x_i and
    -y_i (the second family enters with the sign it has in double weights)
    subject to x_i + y_i = z, and the sliding cell carries -z; free
    parameters are x_1..x_k and y_1 with z = x_1 + y_1.
    """
    xs = [Polynomial.x(i) for i in range(1, k + 1)]
    s = Polynomial.x(1) + Polynomial.y(1)
    if relation == "standard":
        ys = [s - Polynomial.x(i) for i in range(1, k + 1)]
        z = -s
    elif relation == "double":
        # y_i = z - x_i, cell valuation -y_i = x_i - z, with z = x1 + y1.
        ys = [Polynomial.x(i) - s for i in range(1, k + 1)]
        z = -s
    else:
        raise ValueError(f"unknown relation {relation!r}")
    return xs, ys, z


def hexagon_boards(k: int, relation: str = "standard") -> tuple[Board, Board]:
    if k < 1:
        raise ValueError("k must be positive")
    xs, ys, z = _hex_valuations(k, relation)
    left_cells = [Cell("r23", (0, 0))]
    left_vals = [z]
    for i in range(1, k + 1):
        left_cells.append(Cell("r12", (i - 1, 0)))
        left_vals.append(xs[i - 1])
        left_cells.append(Cell("r13", (i - 1, 1)))
        left_vals.append(ys[i - 1])
    right_cells, right_vals = [], []
    for i in range(1, k + 1):
        right_cells.append(Cell("r13", (i - 1, 0)))
        right_vals.append(ys[i - 1])
        right_cells.append(Cell("r12", (i - 2, 1)))
        right_vals.append(xs[i - 1])
    right_cells.append(Cell("r23", (k, 0)))
    right_vals.append(z)
    left = Board(left_cells, left_vals, name=f"hex-left-{k}")
    right = Board(right_cells, right_vals, name=f"hex-right-{k}")
    if set(left.boundary_edges()) != set(right.boundary_edges()):
        raise AssertionError("hexagon boards do not share their boundary")
    return left, right


def hexagon_boundary(k: int) -> dict:
    """Named boundary edges of the k-column hexagon."""
    return {
        "bottom": [("e1", i - 1, 0) for i in range(1, k + 1)],
        "top": [("e1", i - 2, 2) for i in range(1, k + 1)],
        "ll": ("e3", 0, 0),
        "lr": ("e2", k, 0),
        "ul": ("e2", -1, 1),
        "ur": ("e3", k, 1),
    }


# -- Young-diagram boards -------------------------------------------------


def young_board_rows(shape: list[int]) -> Board:
    """Rows of r12 cells, row b holding shape[b] cells (bottom row first)."""
    cells, vals = [], []
    for b, width in enumerate(shape):
        for a in range(width):
            cells.append(Cell("r12", (a, b)))
            vals.append(Polynomial.const(1))
    return Board(cells, vals, name="young-rows")


def young_rule_rows(shape: list[int]) -> Rule:
    """One pipe up each column, nothing on any tilted side."""
    board = young_board_rows(shape)
    counts = {}
    labels = {}
    for edge in board.boundary_edges():
        kind = board.boundary_kind(edge)
        counts[edge] = 1 if kind == "h" else 0
    heights: dict[int, int] = {}
    for b, width in enumerate(shape):
        for a in range(width):
            heights[a] = b + 1
    for a, h in sorted(heights.items()):
        counts[("e1", a, 0)] = 1
        labels[("e1", a, 0)] = (f"in{a}",)
        counts[("e1", a, h)] = 1
        labels[("e1", a, h)] = (f"out{a}",)
    connections = [(f"in{a}", f"out{a}") for a in sorted(heights)]
    return Rule(counts=counts, labels=labels, connections=connections)


def young_board_grid(m: int, n: int) -> Board:
    """An m-row, n-column parallelogram of r12 cells (m <= n expected)."""
    cells, vals = [], []
    for b in range(m):
        for a in range(n):
            cells.append(Cell("r12", (a, b)))
            vals.append(Polynomial.const(1))
    return Board(cells, vals, name=f"young-grid-{m}x{n}")


def young_rule_grid(m: int, n: int) -> Rule:
    """Two non-mixing pipe families: columns straight up, rows straight across."""
    counts, labels = {}, {}
    for a in range(n):
        counts[("e1", a, 0)] = 1
        labels[("e1", a, 0)] = (f"qa{a}",)
        counts[("e1", a, m)] = 1
        labels[("e1", a, m)] = (f"qb{a}",)
    for b in range(m):
        counts[("e2", n, b)] = 1
        labels[("e2", n, b)] = (f"pa{b}",)
        counts[("e2", 0, b)] = 1
        labels[("e2", 0, b)] = (f"pb{b}",)
    connections = [(f"qa{a}", f"qb{a}") for a in range(n)]
    connections += [(f"pa{b}", f"pb{b}") for b in range(m)]
    return Rule(counts=counts, labels=labels, connections=connections)
