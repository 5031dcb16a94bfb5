"""Exhaustive search over solutions: clue-constrained solving, full-board
enumeration, and Hamiltonian path/circuit counting.

All searches are depth-first over the value chain with bitboard pruning:
free-region connectivity (a stranded empty cell kills the branch), dead-end
counting, and Manhattan-distance feasibility against unplaced clues. The
clue-constrained solver anchors at the lowest clue and extends toward value 1
first, then toward m*n. Enumeration order is fixed (start cells in row-major
order, steps in up/down/left/right order), so counts and retained solutions
are reproducible across runs and worker counts.
"""

from __future__ import annotations

import bisect
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache

import numpy as np

from .errors import CapacityError
from .grid import BoardDims
from .model import ClueSet, Solution, SolveOutcome, clue_screen

# Boards above this many cells cannot be exhaustively materialized; counting
# operations remain available (they stream, holding no solution set).
ENUMERATION_CELL_LIMIT = 36

# Skip the pruning battery when this few cells remain; the raw branching is
# cheaper than the checks near the bottom of the tree.
_PRUNE_GATE = 6


class _Board:
    """Bitboard geometry for one dims: neighbor masks and shift constants."""

    __slots__ = ("rows", "cols", "size", "full", "not_col0", "not_coll",
                 "nbr_mask", "nbr_cells", "cell_row", "cell_col")

    def __init__(self, rows: int, cols: int):
        self.rows = rows
        self.cols = cols
        self.size = rows * cols
        self.full = (1 << self.size) - 1
        self.not_col0 = sum(1 << (r * cols + c) for r in range(rows) for c in range(1, cols))
        self.not_coll = sum(1 << (r * cols + c) for r in range(rows) for c in range(cols - 1))
        nbr_mask = []
        nbr_cells = []
        for r in range(rows):
            for c in range(cols):
                mask = 0
                cells = []
                for dr, dc in ((-1, 0), (1, 0), (0, -1), (0, 1)):
                    rr, cc = r + dr, c + dc
                    if 0 <= rr < rows and 0 <= cc < cols:
                        j = rr * cols + cc
                        mask |= 1 << j
                        cells.append(j)
                nbr_mask.append(mask)
                nbr_cells.append(tuple(cells))
        self.nbr_mask = tuple(nbr_mask)
        self.nbr_cells = tuple(nbr_cells)
        self.cell_row = tuple(i // cols for i in range(self.size))
        self.cell_col = tuple(i % cols for i in range(self.size))


@lru_cache(maxsize=32)
def _board(rows: int, cols: int) -> _Board:
    return _Board(rows, cols)


def _ensure_recursion_room(size: int) -> None:
    if sys.getrecursionlimit() < size + 200:
        sys.setrecursionlimit(size + 1000)


def _count_paths_from(board: _Board, start: int) -> int:
    """Directed Hamiltonian paths beginning at `start`."""
    full = board.full
    ncols = board.cols
    not_col0 = board.not_col0
    not_coll = board.not_coll
    nbr_mask = board.nbr_mask
    nbr_cells = board.nbr_cells
    _ensure_recursion_room(board.size)
    count = 0

    def rec(cell: int, free: int) -> None:
        nonlocal count
        head = nbr_mask[cell] & free
        if not head:
            return
        remaining = free.bit_count()
        if remaining == 1:
            count += 1
            return
        if remaining > _PRUNE_GATE:
            a = free >> ncols
            b = (free << ncols) & full
            c = (free >> 1) & not_coll
            d = ((free << 1) & not_col0) & full
            dead = free & ~((a & b) | ((a | b) & (c | d)) | (c & d)) & ~head
            if dead and (dead & (dead - 1)):
                return
            if free & ~(a | b | c | d) & ~head:
                return
            region = head
            while True:
                grown = region | (((region >> ncols) | ((region << ncols) & full)
                                   | ((region >> 1) & not_coll)
                                   | (((region << 1) & not_col0) & full)) & free)
                if grown == region:
                    break
                region = grown
            if region != free:
                return
        for nb in nbr_cells[cell]:
            bit = 1 << nb
            if free & bit:
                rec(nb, free ^ bit)

    rec(start, full ^ (1 << start))
    return count


def _collect_paths_from(board: _Board, start: int, out: list[bytes]) -> None:
    """Append every Hamiltonian path from `start` to `out` as a cell-index byte string."""
    full = board.full
    ncols = board.cols
    not_col0 = board.not_col0
    not_coll = board.not_coll
    nbr_mask = board.nbr_mask
    nbr_cells = board.nbr_cells
    _ensure_recursion_room(board.size)
    trail = bytearray(board.size)
    trail[0] = start

    def rec(cell: int, free: int, depth: int) -> None:
        head = nbr_mask[cell] & free
        if not head:
            return
        remaining = free.bit_count()
        if remaining == 1:
            trail[depth] = free.bit_length() - 1
            out.append(bytes(trail))
            return
        if remaining > _PRUNE_GATE:
            a = free >> ncols
            b = (free << ncols) & full
            c = (free >> 1) & not_coll
            d = ((free << 1) & not_col0) & full
            dead = free & ~((a & b) | ((a | b) & (c | d)) | (c & d)) & ~head
            if dead and (dead & (dead - 1)):
                return
            if free & ~(a | b | c | d) & ~head:
                return
            region = head
            while True:
                grown = region | (((region >> ncols) | ((region << ncols) & full)
                                   | ((region >> 1) & not_coll)
                                   | (((region << 1) & not_col0) & full)) & free)
                if grown == region:
                    break
                region = grown
            if region != free:
                return
        for nb in nbr_cells[cell]:
            bit = 1 << nb
            if free & bit:
                trail[depth] = nb
                rec(nb, free ^ bit, depth + 1)

    rec(start, full ^ (1 << start), 1)


def _count_circuits(board: _Board) -> int:
    """Undirected Hamiltonian circuits; each is found once, as the traversal
    from cell 0 whose first step has a smaller index than its last cell."""
    full = board.full
    ncols = board.cols
    not_col0 = board.not_col0
    not_coll = board.not_coll
    nbr_mask = board.nbr_mask
    nbr_cells = board.nbr_cells
    origin_mask = nbr_mask[0]
    _ensure_recursion_room(board.size)
    count = 0

    def rec(cell: int, free: int, first: int) -> None:
        nonlocal count
        head = nbr_mask[cell] & free
        if not head:
            return
        remaining = free.bit_count()
        if remaining == 1:
            last = free.bit_length() - 1
            if (origin_mask >> last) & 1 and first < last:
                count += 1
            return
        if not (origin_mask & free):
            return  # the closing cell is already used up
        if remaining > _PRUNE_GATE:
            a = free >> ncols
            b = (free << ncols) & full
            c = (free >> 1) & not_coll
            d = ((free << 1) & not_col0) & full
            dead = free & ~((a & b) | ((a | b) & (c | d)) | (c & d)) & ~head
            if dead & ~origin_mask or (dead and (dead & (dead - 1))):
                return
            if free & ~(a | b | c | d) & ~head:
                return
            region = head
            while True:
                grown = region | (((region >> ncols) | ((region << ncols) & full)
                                   | ((region >> 1) & not_coll)
                                   | (((region << 1) & not_col0) & full)) & free)
                if grown == region:
                    break
                region = grown
            if region != free:
                return
        for nb in nbr_cells[cell]:
            bit = 1 << nb
            if free & bit:
                rec(nb, free ^ bit, first)

    start_free = full ^ 1
    for first in nbr_cells[0]:
        rec(first, start_free ^ (1 << first), first)
    return count


def _symmetry_cell_maps(rows: int, cols: int):
    """Grid-graph automorphisms as (row, col) maps: the dihedral group of the
    rectangle, extended by transposes when the board is square."""
    maps = [
        lambda r, c: (r, c),
        lambda r, c: (r, cols - 1 - c),
        lambda r, c: (rows - 1 - r, c),
        lambda r, c: (rows - 1 - r, cols - 1 - c),
    ]
    if rows == cols:
        maps += [
            lambda r, c: (c, r),
            lambda r, c: (c, cols - 1 - r),
            lambda r, c: (rows - 1 - c, r),
            lambda r, c: (rows - 1 - c, cols - 1 - r),
        ]
    return maps


def _start_orbits(rows: int, cols: int) -> list[tuple[int, int]]:
    """(representative cell index, orbit size) under the board symmetries.

    Path counts from symmetric start cells are equal, so the total directed
    path count is the orbit-size-weighted sum over representatives.
    """
    maps = _symmetry_cell_maps(rows, cols)
    seen: set[tuple[int, int]] = set()
    orbits = []
    for r in range(rows):
        for c in range(cols):
            if (r, c) in seen:
                continue
            orbit = {f(r, c) for f in maps}
            seen |= orbit
            orbits.append((r * cols + c, len(orbit)))
    return orbits


def _count_start_task(args: tuple[int, int, int]) -> int:
    rows, cols, start = args
    return _count_paths_from(_board(rows, cols), start)


def count_hamiltonian_paths(dims: BoardDims, threads: int = 1, on_progress=None) -> int:
    """Exact number of solutions of the empty puzzle: directed Hamiltonian
    paths in the board's grid graph.

    `threads` > 1 farms the per-start-cell subtrees out to worker processes;
    the result is identical for any worker count. `on_progress(done, total)`
    is invoked after each completed start cell; raising from the callback
    cancels the count cooperatively.
    """
    board = _board(dims.rows, dims.cols)
    if board.size == 1:
        return 1
    orbits = _start_orbits(dims.rows, dims.cols)
    total = len(orbits)
    counts = []
    if threads > 1:
        tasks = [(dims.rows, dims.cols, start) for start, _ in orbits]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for done, count in enumerate(pool.map(_count_start_task, tasks), start=1):
                counts.append(count)
                if on_progress is not None:
                    on_progress(done, total)
    else:
        for done, (start, _) in enumerate(orbits, start=1):
            counts.append(_count_paths_from(board, start))
            if on_progress is not None:
                on_progress(done, total)
    return sum(weight * count for (_, weight), count in zip(orbits, counts))


def count_hamiltonian_circuits(dims: BoardDims) -> int:
    """Exact number of undirected Hamiltonian circuits in the grid graph.

    Single-row and single-column boards have none; neither do boards with
    both dimensions odd (no circuit can close on an odd cell count).
    """
    if dims.rows == 1 or dims.cols == 1:
        return 0
    if dims.rows % 2 == 1 and dims.cols % 2 == 1:
        return 0  # parity: a closed tour alternates colors, needs an even cell count
    return _count_circuits(_board(dims.rows, dims.cols))


def _check_capacity(dims: BoardDims, what: str) -> None:
    if dims.size > ENUMERATION_CELL_LIMIT:
        raise CapacityError(
            f"{what} is limited to boards of at most {ENUMERATION_CELL_LIMIT} cells "
            f"(up to 6x6); got {dims.rows}x{dims.cols} = {dims.size}"
        )


@lru_cache(maxsize=4)
def _solution_matrix_cached(rows: int, cols: int) -> np.ndarray:
    board = _board(rows, cols)
    size = board.size
    if size == 1:
        matrix = np.ones((1, 1), dtype=np.uint8)
        matrix.setflags(write=False)
        return matrix
    paths: list[bytes] = []
    for start in range(size):
        _collect_paths_from(board, start, paths)
    trail = np.frombuffer(b"".join(paths), dtype=np.uint8).reshape(len(paths), size)
    del paths
    matrix = np.zeros_like(trail)
    matrix[np.arange(len(trail))[:, None], trail] = np.arange(1, size + 1, dtype=np.uint8)
    del trail
    order = np.lexsort(matrix.T[::-1])
    matrix = np.ascontiguousarray(matrix[order])
    matrix.setflags(write=False)
    return matrix


def solution_matrix(dims: BoardDims) -> np.ndarray:
    """All solutions as a read-only (count, m*n) uint8 array of row-major
    values, sorted lexicographically. Cached per board size."""
    _check_capacity(dims, "full enumeration")
    return _solution_matrix_cached(dims.rows, dims.cols)


def all_solutions(dims: BoardDims):
    """Yield every solution exactly once, in canonical (lexicographic) order."""
    matrix = solution_matrix(dims)
    for row in matrix:
        yield Solution(dims, tuple(int(v) for v in row))


class _StopSearch(Exception):
    pass


def _for_each_matching(dims: BoardDims, clues: ClueSet, emit) -> None:
    """Invoke `emit(values_bytes)` for every solution matching `clues`, in a
    fixed deterministic order. `emit` may raise _StopSearch to halt."""
    board = _board(dims.rows, dims.cols)
    size = board.size
    full = board.full
    ncols = board.cols
    not_col0 = board.not_col0
    not_coll = board.not_coll
    nbr_mask = board.nbr_mask
    nbr_cells = board.nbr_cells
    cell_row = board.cell_row
    cell_col = board.cell_col
    _ensure_recursion_room(size)

    clue_items = [(v, board.cols * cell.row + cell.col) for cell, v in clues.items()]
    cell_clue = [0] * size   # value claimed by a clue cell, else 0
    value_cell = [-1] * (size + 2)  # cell claimed for a clue value, else -1
    for v, idx in clue_items:
        cell_clue[idx] = v
        value_cell[v] = idx
    max_dist = board.rows + board.cols - 2
    values = bytearray(size)

    def prune(free: int, seeds: int, spare_ends: int) -> bool:
        """True if the free region is certainly not completable: some free
        cell is unreachable from the active frontiers, or more low-degree
        cells remain than the search still has path ends to park on them."""
        a = free >> ncols
        b = (free << ncols) & full
        c = (free >> 1) & not_coll
        d = ((free << 1) & not_col0) & full
        dead = free & ~((a & b) | ((a | b) & (c | d)) | (c & d)) & ~seeds
        if dead.bit_count() > spare_ends:
            return True
        if free & ~(a | b | c | d) & ~seeds:
            return True
        region = seeds & free
        if not region:
            return not free  # nothing left is fine; anything left is stranded
        while True:
            grown = region | (((region >> ncols) | ((region << ncols) & full)
                               | ((region >> 1) & not_coll)
                               | (((region << 1) & not_col0) & full)) & free)
            if grown == region:
                break
            region = grown
        return region != free

    def ascend(cell: int, free: int, v: int, clue_idx: int) -> None:
        """Place values v..size walking upward from `cell`."""
        if v > size:
            emit(bytes(values))
            return
        target = value_cell[v]
        head = nbr_mask[cell] & free
        if target >= 0:
            # forced placement on the clue's own cell
            bit = 1 << target
            if not (head & bit):
                return
            values[target] = v
            ascend(target, free ^ bit, v + 1, clue_idx + 1)
            return
        if free.bit_count() > _PRUNE_GATE and prune(free, head, 1):
            return
        for nb in nbr_cells[cell]:
            bit = 1 << nb
            if not (free & bit) or cell_clue[nb]:
                continue
            ok = True
            for ci in range(clue_idx, len(clue_items)):
                cv, cc = clue_items[ci]
                slack = cv - v
                if slack >= max_dist:
                    break
                if abs(cell_row[nb] - cell_row[cc]) + abs(cell_col[nb] - cell_col[cc]) > slack:
                    ok = False
                    break
            if ok:
                values[nb] = v
                ascend(nb, free ^ bit, v + 1, clue_idx)
        return

    if not clue_items:
        for start in range(size):
            values[start] = 1
            ascend(start, full ^ (1 << start), 2, 0)
        return

    if not clue_screen(clues):
        return

    anchor_value, anchor_cell = clue_items[0]
    anchor_nbrs = nbr_mask[anchor_cell]
    values[anchor_cell] = anchor_value

    def descend(cell: int, free: int, v: int) -> None:
        """Place values v..1 walking downward from `cell`, then switch to the
        upward phase out of the anchor."""
        if v == 0:
            ascend(anchor_cell, free, anchor_value + 1, 1)
            return
        head = nbr_mask[cell] & free
        if free.bit_count() > _PRUNE_GATE and prune(free, head | anchor_nbrs, 2):
            return
        for nb in nbr_cells[cell]:
            bit = 1 << nb
            if not (free & bit) or cell_clue[nb]:
                continue
            ok = True
            for cv, cc in clue_items[1:]:
                # the path from v up to each clue is exactly cv - v steps long
                slack = cv - v
                if slack >= max_dist:
                    break
                if abs(cell_row[nb] - cell_row[cc]) + abs(cell_col[nb] - cell_col[cc]) > slack:
                    ok = False
                    break
            if ok:
                values[nb] = v
                descend(nb, free ^ bit, v - 1)
        return

    descend(anchor_cell, full ^ (1 << anchor_cell), anchor_value - 1)


def solve(dims: BoardDims, clues: ClueSet, count_cap: int | None = None,
          retain: int = 1) -> SolveOutcome:
    """Count (and optionally retain) the solutions matching a clue set.

    The count is exact unless `count_cap` is given, in which case the search
    stops as soon as that many matches are found and the outcome is flagged
    as capped. The retained solutions are the `retain` smallest in canonical
    order among those found. Infeasible clues yield a count of 0.
    """
    if clues.dims != dims:
        raise ValueError(f"clue set dims {clues.dims} do not match {dims}")
    if count_cap is not None and count_cap < 1:
        raise ValueError("count_cap must be at least 1")
    if retain < 0:
        raise ValueError("retain must be non-negative")

    count = 0
    best: list[bytes] = []

    def emit(vals: bytes) -> None:
        nonlocal count
        count += 1
        if retain:
            if len(best) < retain:
                bisect.insort(best, vals)
            elif vals < best[-1]:
                bisect.insort(best, vals)
                best.pop()
        if count_cap is not None and count >= count_cap:
            raise _StopSearch

    capped = False
    try:
        _for_each_matching(dims, clues, emit)
    except _StopSearch:
        capped = True
    solutions = tuple(Solution(dims, tuple(vals)) for vals in best)
    return SolveOutcome(count=count, capped=capped, solutions=solutions)


def defines_puzzle(dims: BoardDims, clues: ClueSet) -> bool:
    """True iff exactly one solution matches: the clue set defines a puzzle."""
    outcome = solve(dims, clues, count_cap=2, retain=0)
    return outcome.count == 1


def first_solution(dims: BoardDims, clues: ClueSet) -> Solution | None:
    """Some solution matching the clues (the first found), or None."""
    outcome = solve(dims, clues, count_cap=1, retain=1)
    return outcome.solutions[0] if outcome.solutions else None
