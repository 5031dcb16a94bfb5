"""Board geometry: dimensions, cells, side-to-side adjacency, checkerboard coloring.

The coordinate origin is the top-left corner; rows grow downward and columns
grow rightward, both 0-based. All operations here are pure functions of
immutable values.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass


class Color(enum.Enum):
    WHITE = "white"
    BLACK = "black"


@dataclass(frozen=True, order=True)
class Cell:
    row: int
    col: int


@dataclass(frozen=True)
class BoardDims:
    """An m-by-n rectangular board (m rows, n columns), both at least 1.

    No rows-vs-columns ordering is imposed; callers that want the tall/wide
    convention of a particular result normalize by transposition.
    """

    rows: int
    cols: int

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ValueError(f"board dimensions must be positive, got {self.rows}x{self.cols}")

    @property
    def size(self) -> int:
        return self.rows * self.cols

    def contains(self, cell: Cell) -> bool:
        return 0 <= cell.row < self.rows and 0 <= cell.col < self.cols

    def index_of(self, cell: Cell) -> int:
        """Row-major linear index of a cell."""
        return cell.row * self.cols + cell.col

    def cell_at(self, index: int) -> Cell:
        return Cell(index // self.cols, index % self.cols)

    def cells(self):
        """All cells in row-major order."""
        return (Cell(r, c) for r in range(self.rows) for c in range(self.cols))

    def transposed(self) -> "BoardDims":
        return BoardDims(self.cols, self.rows)


# Deterministic probe order: up, down, left, right.
_STEPS = ((-1, 0), (1, 0), (0, -1), (0, 1))


def neighbors(dims: BoardDims, cell: Cell) -> list[Cell]:
    """The 0-4 side-to-side adjacent cells, in up/down/left/right order.

    Raises ValueError for a cell outside the board. Diagonal squares are
    never adjacent.
    """
    if not dims.contains(cell):
        raise ValueError(f"cell {cell} outside {dims.rows}x{dims.cols} board")
    out = []
    for dr, dc in _STEPS:
        r, c = cell.row + dr, cell.col + dc
        if 0 <= r < dims.rows and 0 <= c < dims.cols:
            out.append(Cell(r, c))
    return out


def cell_color(cell: Cell) -> Color:
    """Checkerboard color; the top-left cell (0, 0) is white."""
    return Color.WHITE if (cell.row + cell.col) % 2 == 0 else Color.BLACK


def color_counts(dims: BoardDims) -> tuple[int, int]:
    """(white, black) cell counts: ceil(mn/2) white, floor(mn/2) black."""
    size = dims.size
    return (size + 1) // 2, size // 2


def manhattan(a: Cell, b: Cell) -> int:
    return abs(a.row - b.row) + abs(a.col - b.col)
