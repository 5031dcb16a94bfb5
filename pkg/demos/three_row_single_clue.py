"""Three-row boards: any single clue leaves at least two solutions.
==================================================================

Odd-width three-row boards have no closed tour, so the usual one-clue
ambiguity argument fails there. Instead, for every clue that passes the
color screen, two explicit solutions are constructed: the clue is normalized
by reflections and the value-reversal map into a canonical region, a
serpentine path is routed through it, and the leftover block is finished two
different ways.
"""

from numbrix import BoardDims, Cell, ClueSet, clue_screen, two_solutions_single_clue
from numbrix.cli import PuzzleDocument, format_puzzle


def show(solution):
    print(format_puzzle(PuzzleDocument.from_solution(solution)))


# Value 11 near the left edge of a 3x7 board: the two completions differ in
# the two-row band at the right.
first, second = two_solutions_single_clue(7, Cell(0, 2), 11)
print("clue 11 at row 0, column 2 of a 3x7 board:")
show(first)
show(second)

# A clue on the middle row is handled by mirroring a searched solution.
first, second = two_solutions_single_clue(5, Cell(1, 2), 8)
print("clue 8 at the center of a 3x5 board (mirror pair):")
show(first)
show(second)

# Sweep every feasible single clue on the 3x5 board: none defines a puzzle.
dims = BoardDims(3, 5)
screened = ambiguous = 0
for cell in dims.cells():
    for value in range(1, dims.size + 1):
        if not clue_screen(ClueSet(dims, {cell: value})):
            continue
        screened += 1
        a, b = two_solutions_single_clue(5, cell, value)
        ambiguous += a != b
print(f"3x5 single clues passing the screen: {screened}, "
      f"all with two distinct solutions: {ambiguous == screened}")
