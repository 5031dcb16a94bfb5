"""Solutions, clue sets, and their validity rules.

A solution assigns 1..m*n to the cells so that consecutive values sit on
side-to-side adjacent squares. A clue set is a partial assignment; it is
accepted even when no solution matches (solvers then report a count of 0),
so every well-formed input has a defined outcome.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .grid import BoardDims, Cell, Color, cell_color, manhattan


@dataclass(frozen=True)
class Solution:
    """A complete board filling; values are stored row-major, one per cell."""

    dims: BoardDims
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.dims.size:
            raise ValueError(
                f"expected {self.dims.size} values for {self.dims.rows}x{self.dims.cols}, "
                f"got {len(self.values)}"
            )

    def value_at(self, cell: Cell) -> int:
        return self.values[self.dims.index_of(cell)]

    def cell_of(self, value: int) -> Cell:
        """Cell holding `value`; the inverse permutation, computed on demand."""
        return self.dims.cell_at(self.values.index(value))

    def rows(self) -> list[list[int]]:
        n = self.dims.cols
        return [list(self.values[r * n:(r + 1) * n]) for r in range(self.dims.rows)]


@dataclass(frozen=True)
class ClueSet:
    """A partial assignment of values to cells: the puzzle statement."""

    dims: BoardDims
    assignments: dict[Cell, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        seen_values: set[int] = set()
        for cell, value in self.assignments.items():
            if not self.dims.contains(cell):
                raise ValueError(f"clue cell {cell} outside {self.dims.rows}x{self.dims.cols}")
            if not 1 <= value <= self.dims.size:
                raise ValueError(f"clue value {value} out of range 1..{self.dims.size}")
            if value in seen_values:
                raise ValueError(f"clue value {value} assigned twice")
            seen_values.add(value)

    def __len__(self) -> int:
        return len(self.assignments)

    def items(self) -> list[tuple[Cell, int]]:
        """Clues sorted by value, for deterministic iteration."""
        return sorted(self.assignments.items(), key=lambda kv: kv[1])


@dataclass(frozen=True)
class SolveOutcome:
    """Result of a clue-constrained search.

    `count` is exact unless `capped` is set, in which case the search stopped
    early and the true count is at least `count`. `solutions` holds the first
    `retain` matches in canonical (row-major lexicographic) order.
    """

    count: int
    capped: bool
    solutions: tuple[Solution, ...]


def is_valid_solution(dims: BoardDims, values) -> bool:
    """True iff `values` is a bijection onto 1..m*n with consecutive values adjacent."""
    values = tuple(values)
    size = dims.size
    if len(values) != size:
        raise ValueError(f"expected {size} values, got {len(values)}")
    position = [-1] * (size + 1)
    for idx, v in enumerate(values):
        v = int(v)
        if not 1 <= v <= size or position[v] != -1:
            return False
        position[v] = idx
    n = dims.cols
    for v in range(1, size):
        a, b = position[v], position[v + 1]
        ra, ca = divmod(a, n)
        rb, cb = divmod(b, n)
        if abs(ra - rb) + abs(ca - cb) != 1:
            return False
    return True


def reverse_solution(s: Solution) -> Solution:
    """The reversal-property partner: every value v becomes m*n + 1 - v."""
    top = s.dims.size + 1
    return Solution(s.dims, tuple(top - v for v in s.values))


def reverse_clues(c: ClueSet) -> ClueSet:
    """Same cells, each clue value v replaced by m*n + 1 - v."""
    top = c.dims.size + 1
    return ClueSet(c.dims, {cell: top - v for cell, v in c.assignments.items()})


def matches(s: Solution, c: ClueSet) -> bool:
    """True iff the solution carries every clue value on its clue cell."""
    if s.dims != c.dims:
        raise ValueError(f"dims mismatch: solution {s.dims} vs clues {c.dims}")
    return all(s.value_at(cell) == value for cell, value in c.assignments.items())


def clue_screen(c: ClueSet) -> bool:
    """Cheap necessary conditions for a clue set to be satisfiable.

    Returns False only when no solution can match: some clue pair is closer
    on the board than its value gap (or has mismatched step parity), or, on
    boards with both dimensions odd, some odd value sits off the white cells.
    Passing the screen does not guarantee a solution exists.
    """
    items = list(c.assignments.items())
    if c.dims.rows % 2 == 1 and c.dims.cols % 2 == 1:
        for cell, value in items:
            if (value % 2 == 1) != (cell_color(cell) is Color.WHITE):
                return False
    for i, (cell_a, va) in enumerate(items):
        for cell_b, vb in items[i + 1:]:
            gap = abs(va - vb)
            dist = manhattan(cell_a, cell_b)
            if gap < dist or (gap - dist) % 2 != 0:
                return False
    return True
