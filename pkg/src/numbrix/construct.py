"""Deterministic constructors for the named clue arrangements and paths:
serpentine (zig-zag) solutions and their defining edge-column clues, boundary
circuits, maximal non-defining clue sets, minimal defining clue sets, and the
paired-solution witnesses showing a single clue never pins down a 3-row board.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .enumeration import first_solution
from .errors import InfeasibleClueError, NoCircuitError, NoSuchSetError
from .grid import BoardDims, Cell
from .model import (ClueSet, Solution, clue_screen, is_valid_solution, matches,
                    reverse_solution)


class Corner(enum.Enum):
    TOP_LEFT = "tl"
    TOP_RIGHT = "tr"
    BOTTOM_LEFT = "bl"
    BOTTOM_RIGHT = "br"


class Symmetry(enum.Enum):
    IDENTITY = "identity"
    FLIP_HORIZONTAL = "flip-horizontal"   # mirror left-right
    FLIP_VERTICAL = "flip-vertical"       # mirror top-bottom
    ROTATE_180 = "rotate-180"
    TRANSPOSE = "transpose"               # square boards only, from here down
    ANTI_TRANSPOSE = "anti-transpose"
    ROTATE_90 = "rotate-90"
    ROTATE_270 = "rotate-270"


_SQUARE_ONLY = {Symmetry.TRANSPOSE, Symmetry.ANTI_TRANSPOSE,
                Symmetry.ROTATE_90, Symmetry.ROTATE_270}


@dataclass(frozen=True)
class ZigZagSpec:
    """A row-sweeping serpentine solution: entries run back and forth along
    the rows, starting in the given corner."""

    start_corner: Corner = Corner.TOP_RIGHT


@dataclass(frozen=True)
class CyclicPath:
    """A closed tour of the board: every cell exactly once, consecutive cells
    adjacent, and the last cell adjacent to the first."""

    dims: BoardDims
    cells: tuple[Cell, ...]

    def __post_init__(self) -> None:
        size = self.dims.size
        if len(self.cells) != size or len(set(self.cells)) != size:
            raise ValueError("cyclic path must visit every cell exactly once")
        for a, b in zip(self.cells, self.cells[1:] + self.cells[:1]):
            if abs(a.row - b.row) + abs(a.col - b.col) != 1:
                raise ValueError(f"cells {a} and {b} are not adjacent")


@dataclass(frozen=True)
class BlockLayout:
    """How an m-row board splits into four-row clue blocks: m = 4q + r.

    Each full block carries two clues; their values repeat block to block up
    to a shift of 4n per block. When three rows remain, one extra shifted
    block of clues covers them.
    """

    full_blocks: int
    remainder_rows: int
    value_offsets: tuple[int, ...]

    @classmethod
    def for_dims(cls, dims: BoardDims) -> "BlockLayout":
        q, r = divmod(dims.rows, 4)
        count = q + (1 if r == 3 else 0)
        return cls(q, r, tuple(4 * dims.cols * i for i in range(count)))


@dataclass(frozen=True)
class SingleClueReduction:
    """Normalized parameters for the explicit two-solution construction on a
    3-row board: the clue (value, 1-based column position) after symmetry
    reduction, the anchor position the construction routes through, the value
    the path carries there, and the width of the two-row leftover block when
    the path start has been pulled back through whole columns."""

    value: int
    position: int
    anchor_position: int
    anchor_value: int
    tail_width: int | None


def zigzag_solution(dims: BoardDims, spec: ZigZagSpec = ZigZagSpec()) -> Solution:
    """The serpentine solution sweeping the rows from the given corner."""
    m, n = dims.rows, dims.cols
    corner = spec.start_corner
    row_order = range(m) if corner in (Corner.TOP_LEFT, Corner.TOP_RIGHT) else range(m - 1, -1, -1)
    starts_leftward = corner in (Corner.TOP_RIGHT, Corner.BOTTOM_RIGHT)
    values = [0] * dims.size
    v = 0
    for sweep, r in enumerate(row_order):
        leftward = starts_leftward ^ (sweep % 2 == 1)
        cols = range(n - 1, -1, -1) if leftward else range(n)
        for c in cols:
            v += 1
            values[r * n + c] = v
    return Solution(dims, tuple(values))


def zigzag_clues(dims: BoardDims, spec: ZigZagSpec = ZigZagSpec()) -> ClueSet:
    """The m clues filling column 0 of the serpentine solution.

    Each such entry has exactly one unplaced neighboring value and exactly one
    adjacent empty square, so the clues force the whole board column by
    column: they always define a puzzle.
    """
    s = zigzag_solution(dims, spec)
    return ClueSet(dims, {Cell(r, 0): s.values[r * dims.cols] for r in range(dims.rows)})


def circular_path(dims: BoardDims) -> CyclicPath:
    """A closed tour built as a clockwise boundary sweep followed by a row
    serpentine over the leftover interior block.

    Exists only when both sides are at least 2 and at least one side is even;
    the even side plays the role of the row count (transposing internally if
    needed).
    """
    m, n = dims.rows, dims.cols
    if m < 2 or n < 2:
        raise NoCircuitError(f"{m}x{n} board is single-file, no closed tour exists")
    if m % 2 == 1 and n % 2 == 1:
        raise NoCircuitError(
            f"{m}x{n} board has an odd number of cells; a closed tour must alternate "
            "colors and so needs an even count")
    if m % 2 == 0:
        cells = tuple(Cell(r, c) for r, c in _boundary_then_serpentine(m, n))
    else:
        cells = tuple(Cell(c, r) for r, c in _boundary_then_serpentine(n, m))
    # canonical direction: the step out of (0, 0) goes to the smaller-indexed neighbor
    if dims.index_of(cells[1]) > dims.index_of(cells[-1]):
        cells = cells[:1] + cells[:0:-1]
    return CyclicPath(dims, cells)


def _boundary_then_serpentine(m: int, n: int) -> list[tuple[int, int]]:
    # m even: top row, right column, bottom row, then rows m-2..1 of the
    # remaining (m-2) x (n-1) block, ending at (1, 0) next to the start
    cells = [(0, c) for c in range(n)]
    cells += [(r, n - 1) for r in range(1, m)]
    cells += [(m - 1, c) for c in range(n - 2, -1, -1)]
    for sweep, r in enumerate(range(m - 2, 0, -1)):
        cols = range(n - 1) if sweep % 2 == 0 else range(n - 2, -1, -1)
        cells += [(r, c) for c in cols]
    return cells


def _cell_map(dims: BoardDims, sym: Symmetry, cell: Cell) -> Cell:
    m, n = dims.rows, dims.cols
    r, c = cell.row, cell.col
    if sym is Symmetry.IDENTITY:
        return cell
    if sym is Symmetry.FLIP_HORIZONTAL:
        return Cell(r, n - 1 - c)
    if sym is Symmetry.FLIP_VERTICAL:
        return Cell(m - 1 - r, c)
    if sym is Symmetry.ROTATE_180:
        return Cell(m - 1 - r, n - 1 - c)
    if sym is Symmetry.TRANSPOSE:
        return Cell(c, r)
    if sym is Symmetry.ANTI_TRANSPOSE:
        return Cell(n - 1 - c, m - 1 - r)
    if sym is Symmetry.ROTATE_90:
        return Cell(c, m - 1 - r)
    if sym is Symmetry.ROTATE_270:
        return Cell(n - 1 - c, r)
    raise ValueError(f"unknown symmetry {sym}")


def apply_symmetry(s: Solution, sym: Symmetry) -> Solution:
    """Relocate a solution's values by a board symmetry.

    Transpose-family symmetries require a square board.
    """
    dims = s.dims
    if sym in _SQUARE_ONLY and dims.rows != dims.cols:
        raise ValueError(f"{sym.value} requires a square board, got {dims.rows}x{dims.cols}")
    values = [0] * dims.size
    for cell in dims.cells():
        values[dims.index_of(_cell_map(dims, sym, cell))] = s.value_at(cell)
    return Solution(dims, tuple(values))


def max_nondefining_clues(dims: BoardDims) -> ClueSet:
    """The largest clue set that fails to define a puzzle.

    For boards with both sides at least 2 this fills everything except the
    cells holding 1 and 3 in a fixed double-snake solution; those two cells
    can always be completed both ways, so exactly two solutions match. On a
    single-file board only the exact middle clue of an odd-length board works;
    even lengths (and the 1x1 board) admit no non-defining nonempty set.
    """
    m, n = dims.rows, dims.cols
    if m == 1 and n == 1:
        raise NoSuchSetError("the 1x1 board is solved by any assignment; no non-defining set")
    if m == 1 or n == 1:
        length = max(m, n)
        if length % 2 == 0:
            raise NoSuchSetError(
                f"every single clue on a 1x{length} board fixes the direction; "
                "the maximum non-defining count is 0")
        mid = (length - 1) // 2
        cell = Cell(0, mid) if m == 1 else Cell(mid, 0)
        return ClueSet(dims, {cell: (length + 1) // 2})
    base = ambiguous_pair_solution(dims)
    blanks = {base.cell_of(1), base.cell_of(3)}
    return ClueSet(dims, {cell: base.value_at(cell)
                          for cell in dims.cells() if cell not in blanks})


def ambiguous_pair_solution(dims: BoardDims) -> Solution:
    """The full solution behind `max_nondefining_clues`: a vertical snake over
    the top two rows arranged so 2n ends row two, then a horizontal serpentine
    over the remaining rows. Swapping its 1 and 3 yields the second matching
    solution."""
    m, n = dims.rows, dims.cols
    if m < 2 or n < 2:
        raise ValueError("needs both sides at least 2")
    values = [0] * dims.size

    def put(r: int, c: int, v: int) -> None:
        values[r * n + c] = v

    # top two rows: 1 and 3 on one diagonal of the leading 2x2 block, then
    # column pairs marching right
    flip_top = m >= 3 and n % 2 == 0  # keeps 2n at the end of row two
    def top(r: int) -> int:
        return 1 - r if flip_top else r

    put(top(0), 0, 1)
    put(top(1), 0, 2)
    put(top(1), 1, 3)
    put(top(0), 1, 4)
    v = 4
    for c in range(2, n):
        rows = (0, 1) if c % 2 == 0 else (1, 0)
        for r in rows:
            v += 1
            put(top(r), c, v)
    for sweep, r in enumerate(range(2, m)):
        cols = range(n - 1, -1, -1) if sweep % 2 == 0 else range(n)
        for c in cols:
            v += 1
            put(r, c, v)
    solution = Solution(dims, tuple(values))
    assert is_valid_solution(dims, solution.values)
    return solution


def minimal_clues(dims: BoardDims) -> ClueSet:
    """A smallest known defining clue set: ceil(m/2) clues in column 0 placed
    per four-row block, whose unique solution is the top-right serpentine.

    Degenerate boards get their special small sets: nothing for 1x1, value 1
    at the starting end for single-file boards, and the two edge-column clue
    pairs for two- and three-row boards.
    """
    m, n = dims.rows, dims.cols
    if m == 1 and n == 1:
        return ClueSet(dims, {})
    if m == 1 or n == 1:
        return ClueSet(dims, {Cell(0, 0): 1})
    if m == 2:
        return ClueSet(dims, {Cell(0, 0): 1, Cell(1, 0): 2 * n})
    if m == 3:
        return ClueSet(dims, {Cell(1, 0): n + 1, Cell(2, 0): 3 * n})
    layout = BlockLayout.for_dims(dims)
    clues: dict[Cell, int] = {}
    for i in range(layout.full_blocks):
        offset = layout.value_offsets[i]
        clues[Cell(4 * i + 1, 0)] = offset + n + 1
        clues[Cell(4 * i + 2, 0)] = offset + 3 * n
    q, r = layout.full_blocks, layout.remainder_rows
    if r in (1, 2):
        clues[Cell(4 * q, 0)] = 4 * n * (q - 1) + 5 * n
    elif r == 3:
        offset = layout.value_offsets[q]
        clues[Cell(m - 2, 0)] = offset + n + 1
        clues[Cell(m - 1, 0)] = offset + 3 * n
    return ClueSet(dims, clues)


def two_solutions_single_clue(cols: int, cell: Cell, value: int) -> tuple[Solution, Solution]:
    """Two distinct solutions of the 3 x cols board (cols odd) both carrying
    the given clue, witnessing that one clue cannot define such a puzzle.

    Clues on the middle row, the middle column, or anywhere on a 3x3 board
    pair a searched solution with its mirror image. Every other clue is
    normalized by reflections and the value-reversal map into the canonical
    region (top row, left half, value at most (3n+1)/2), the two explicit
    serpentine completions are built there, and the transforms are undone.
    """
    n = cols
    if n < 3 or n % 2 == 0:
        raise ValueError(f"column count must be odd and at least 3, got {n}")
    dims = BoardDims(3, n)
    if not dims.contains(cell):
        raise ValueError(f"cell {cell} outside 3x{n} board")
    if not 1 <= value <= dims.size:
        raise ValueError(f"value {value} out of range 1..{dims.size}")
    clue = ClueSet(dims, {cell: value})
    if not clue_screen(clue):
        raise InfeasibleClueError(
            f"value {value} at {cell} sits on the wrong checkerboard color")

    mid = (n - 1) // 2
    mirror = None
    if cell.row == 1:
        mirror = Symmetry.FLIP_VERTICAL
    elif cell.col == mid:
        mirror = Symmetry.FLIP_HORIZONTAL
    elif n == 3:
        mirror = Symmetry.TRANSPOSE if cell.row == cell.col else Symmetry.ANTI_TRANSPOSE
    if mirror is not None:
        base = first_solution(dims, clue)
        if base is None:  # cannot happen for a screened clue on a 3-row board
            raise InfeasibleClueError(f"no solution carries {value} at {cell}")
        pair = (base, apply_symmetry(base, mirror))
    else:
        flips = []
        row, col, y = cell.row, cell.col, value
        if row == 2:
            flips.append(Symmetry.FLIP_VERTICAL)
            row = 0
        if col > mid:
            flips.append(Symmetry.FLIP_HORIZONTAL)
            col = n - 1 - col
        reverse = y > (3 * n + 1) // 2
        if reverse:
            y = 3 * n + 1 - y
        a, b = _canonical_region_pair(n, col + 1, y)

        def undo(s: Solution) -> Solution:
            if reverse:
                s = reverse_solution(s)
            for flip in reversed(flips):
                s = apply_symmetry(s, flip)
            return s

        pair = (undo(a), undo(b))

    first, second = pair
    assert first.values != second.values
    assert is_valid_solution(dims, first.values) and is_valid_solution(dims, second.values)
    assert matches(first, clue) and matches(second, clue)
    return pair


def single_clue_reduction(cols: int, position: int, value: int) -> SingleClueReduction:
    """Reduction of a canonical-region clue (top row, 1-based `position` in
    the left half) to the anchor-position construction that realizes it."""
    n = cols
    anchor = _largest_odd_below_half(n)
    if position == anchor + 1:
        x = value - 1  # the built solutions carry value x+1 one column right of the anchor
    else:
        if position > anchor:
            raise ValueError(f"position {position} outside the canonical range for {n} columns")
        x = value + (anchor - position)
    if x % 2 == 0 or x < 1:
        raise ValueError(f"value {value} at position {position} has the wrong parity")
    tail = None
    if x >= anchor:
        tail = n - (x - anchor) // 2
        # coverage arithmetic: the pulled-back start leaves at least a 2x2 block
        if tail < 2:
            raise ValueError(f"value {value} too large for position {position} on 3x{n}")
    return SingleClueReduction(value=value, position=position, anchor_position=anchor,
                               anchor_value=x, tail_width=tail)


def _largest_odd_below_half(n: int) -> int:
    half = (n + 1) // 2
    return half - 1 if (half - 1) % 2 == 1 else half - 2


def _canonical_region_pair(n: int, position: int, value: int) -> tuple[Solution, Solution]:
    reduction = single_clue_reduction(n, position, value)
    x = reduction.anchor_value
    anchor = reduction.anchor_position
    if x < anchor:
        a, b = _pair_with_three_row_leftover(n, anchor, x)
    else:
        a, b = _pair_with_two_row_leftover(n, anchor, x)
    dims = BoardDims(3, n)
    return Solution(dims, tuple(a)), Solution(dims, tuple(b))


def _pair_with_three_row_leftover(n: int, anchor: int, x: int) -> tuple[list[int], list[int]]:
    """Values 1..x run along the top row into the anchor position, the front
    of the path sweeps right and serpentines back through the lower two rows,
    and the leftover 3-wide block of width anchor-x is completed two ways."""
    base = [0] * (3 * n)
    v = 0
    for c in range(anchor - x, n):  # top row: 1 at position anchor-x+1, x at the anchor
        v += 1
        base[c] = v
    for sweep, c in enumerate(range(n - 1, anchor - x - 1, -1)):
        rows = (1, 2) if sweep % 2 == 0 else (2, 1)
        for r in rows:
            v += 1
            base[r * n + c] = v
    # the serpentine ends on the bottom row beside the leftover block
    width = anchor - x
    a = list(base)
    va = v
    for c in range(width - 1, -1, -1):
        va += 1
        a[2 * n + c] = va
    for c in range(width):
        va += 1
        a[n + c] = va
    for c in range(width - 1, -1, -1):
        va += 1
        a[c] = va
    b = list(base)
    vb = v
    for sweep, c in enumerate(range(width - 1, -1, -1)):
        rows = (2, 1, 0) if sweep % 2 == 0 else (0, 1, 2)
        for r in rows:
            vb += 1
            b[r * n + c] = vb
    return a, b


def _pair_with_two_row_leftover(n: int, anchor: int, x: int) -> tuple[list[int], list[int]]:
    """The path start is pulled back through (x-anchor)/2 whole columns of the
    lower rows, climbs to the top-left corner, runs the full top row, and the
    leftover two-row band is completed two ways."""
    pullback = (x - anchor) // 2
    base = [0] * (3 * n)
    v = 0
    for t, c in enumerate(range(pullback - 1, -1, -1)):
        rows = (2, 1) if (t + pullback) % 2 == 1 else (1, 2)  # must end beside the top-left corner
        for r in rows:
            v += 1
            base[r * n + c] = v
    for c in range(n):  # top row, left to right; x lands at the anchor position
        v += 1
        base[c] = v
    v += 1
    base[n + (n - 1)] = v  # step down at the right edge
    a = list(base)
    va = v
    for c in range(n - 2, pullback - 1, -1):
        va += 1
        a[n + c] = va
    for c in range(pullback, n):
        va += 1
        a[2 * n + c] = va
    b = list(base)
    vb = v + 1
    b[2 * n + (n - 1)] = vb
    for t, c in enumerate(range(n - 2, pullback - 1, -1)):
        rows = (2, 1) if t % 2 == 0 else (1, 2)
        for r in rows:
            vb += 1
            b[r * n + c] = vb
    return a, b
