"""Exhaustive clue-space analysis: exact minimum defining and maximum
non-defining clue counts at desk scale.

Small clue sets are checked by signature counting over the full solution set:
a k-clue set defines a puzzle exactly when its (cell, value) signature occurs
in exactly one solution, so one pass over the solutions settles every k-set at
once. Only signatures that occur at all are considered; absent combinations
are false clues and can never define a puzzle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .construct import max_nondefining_clues, minimal_clues
from .enumeration import defines_puzzle, solution_matrix, solve
from .errors import CapacityError
from .grid import BoardDims
from .model import ClueSet

# Exhaustive max-nondefining search compares all solution pairs; past this
# many cells the witness-verification mode is used instead.
EXHAUSTIVE_PAIR_LIMIT = 12


@dataclass(frozen=True)
class MinCluesReport:
    """Outcome of the ascending minimum-clue search.

    `k_min` is set only when every smaller clue count was proven insufficient;
    `witness` is a defining set of that size (or of the block-construction
    size when the minimum is unresolved between 3 and that size).
    """

    dims: BoardDims
    k_min: int | None
    witness: ClueSet | None
    insufficient_k: tuple[int, ...]
    k_max_searched: int


@dataclass(frozen=True)
class MaxNondefReport:
    """Largest clue count that fails to define a puzzle, with a witness set.

    `exhaustive` reports whether every clue subset was covered (via solution
    pair agreements) or the constructed witness was verified instead. The
    witness always has at least two matching solutions; `witness_solutions`
    records the exact count.
    """

    dims: BoardDims
    k_max_nondef: int | None
    witness: ClueSet | None
    exhaustive: bool
    witness_solutions: int | None


def find_defining_set(dims: BoardDims, k: int) -> ClueSet | None:
    """The first k-clue set (cells and values in row-major order) matched by
    exactly one solution, or None when no k clues define a puzzle.

    Supports k <= 2; one signature-counting pass per cell (k=1) or per leading
    cell (k=2) bounds memory to one count table at a time.
    """
    matrix = solution_matrix(dims)
    size = dims.size
    if k == 0:
        return ClueSet(dims, {}) if matrix.shape[0] == 1 else None
    if k == 1:
        for a in range(size):
            counts = np.bincount(matrix[:, a])
            unique_values = np.flatnonzero(counts == 1)
            if unique_values.size:
                return ClueSet(dims, {dims.cell_at(a): int(unique_values[0])})
        return None
    if k == 2:
        stride = size + 1
        for a in range(size):
            lead = matrix[:, a].astype(np.uint32) * stride
            for b in range(a + 1, size):
                counts = np.bincount(lead + matrix[:, b])
                unique_sigs = np.flatnonzero(counts == 1)
                if unique_sigs.size:
                    sig = int(unique_sigs[0])
                    return ClueSet(dims, {dims.cell_at(a): sig // stride,
                                          dims.cell_at(b): sig % stride})
        return None
    raise ValueError(f"defining-set search supports k <= 2, got k={k}")


def verify_no_k_defines(dims: BoardDims, k: int) -> bool:
    """True iff NO k-element clue set has exactly one matching solution."""
    return find_defining_set(dims, k) is None


def min_clue_number(dims: BoardDims, k_max: int | None = None) -> MinCluesReport:
    """Smallest clue count that defines a puzzle on this board, searched
    ascending: exhaustively for k <= 2, then by testing the block-construction
    set at its own size. Between those two regimes the minimum may be
    unresolved; the report says which ks were actually ruled out."""
    upper = minimal_clues(dims)
    if k_max is None:
        k_max = max(len(upper), 2)
    insufficient: list[int] = []
    for k in range(0, min(k_max, 2) + 1):
        witness = find_defining_set(dims, k)
        if witness is not None:
            return MinCluesReport(dims, k, witness, tuple(insufficient), k_max)
        insufficient.append(k)
    k_upper = len(upper)
    if k_upper <= k_max and defines_puzzle(dims, upper):
        resolved = k_upper <= len(insufficient)  # every smaller k ruled out
        return MinCluesReport(dims, k_upper if resolved else None, upper,
                              tuple(insufficient), k_max)
    return MinCluesReport(dims, None, None, tuple(insufficient), k_max)


def max_nondefining_number(dims: BoardDims, exhaustive: bool | None = None) -> MaxNondefReport:
    """Largest clue count admitting a non-defining feasible set.

    Exhaustive mode (tiny boards) maximizes the agreement between two distinct
    solutions: any non-defining set is contained in such an agreement set, and
    every agreement set is itself non-defining. Witness mode verifies the
    constructed maximal set has exactly two matching solutions; one more clue
    would leave a single empty cell and a single missing value, so the
    constructed size is the maximum.
    """
    if exhaustive is None:
        exhaustive = dims.size <= EXHAUSTIVE_PAIR_LIMIT
    if exhaustive:
        if dims.size > EXHAUSTIVE_PAIR_LIMIT:
            raise CapacityError(
                f"exhaustive non-defining search is limited to {EXHAUSTIVE_PAIR_LIMIT} "
                f"cells, got {dims.rows}x{dims.cols}")
        matrix = solution_matrix(dims)
        total = matrix.shape[0]
        if total == 1:
            return MaxNondefReport(dims, None, None, True, None)
        best = -1
        best_pair = (0, 0)
        for i in range(total - 1):
            agree = (matrix[i + 1:] == matrix[i]).sum(axis=1)
            j = int(agree.argmax())
            if int(agree[j]) > best:
                best = int(agree[j])
                best_pair = (i, i + 1 + j)
        row_a = matrix[best_pair[0]]
        row_b = matrix[best_pair[1]]
        witness = ClueSet(dims, {dims.cell_at(i): int(row_a[i])
                                 for i in range(dims.size) if row_a[i] == row_b[i]})
        count = solve(dims, witness, retain=0).count
        return MaxNondefReport(dims, best, witness, True, count)
    # witness mode
    if dims.rows == 1 or dims.cols == 1:
        length = max(dims.rows, dims.cols)
        if length == 1:
            return MaxNondefReport(dims, None, None, False, None)
        if length % 2 == 0:
            empty = ClueSet(dims, {})
            return MaxNondefReport(dims, 0, empty, False,
                                   solve(dims, empty, retain=0).count)
        witness = max_nondefining_clues(dims)
        return MaxNondefReport(dims, 1, witness, False,
                               solve(dims, witness, retain=0).count)
    witness = max_nondefining_clues(dims)
    count = solve(dims, witness, count_cap=3, retain=0).count
    if count != 2:
        raise AssertionError(
            f"constructed maximal set on {dims.rows}x{dims.cols} matched {count} solutions")
    return MaxNondefReport(dims, dims.size - 2, witness, False, 2)
