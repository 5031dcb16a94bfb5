"""Solving puzzles: unique boards, ambiguous boards, and infeasible clues.
=========================================================================

A board is filled with 1..m*n so consecutive numbers touch side to side.
Clues pin values to cells; the solver counts every completion that honors
them.
"""

from numbrix import BoardDims, Cell, ClueSet, solve
from numbrix.cli import PuzzleDocument, format_puzzle, parse_puzzle

# A 3x3 board with two clues. Parsing uses the same text format as the CLI:
# a header line, then one line per row, 0 marking a blank square.
text = """\
3 3
0 0 0
0 0 2
0 6 0
"""
doc = parse_puzzle(text)
outcome = solve(doc.dims, doc.clue_set(), retain=3)
print(f"solutions matching the two clues: {outcome.count}")
print(format_puzzle(PuzzleDocument.from_solution(outcome.solutions[0])))

# Drop one clue and the board no longer has a single completion.
loose = ClueSet(doc.dims, {Cell(2, 1): 6})
print(f"with only the 6 kept: {solve(doc.dims, loose, retain=0).count} solutions")

# Some clue sets are impossible before any search happens: on boards with
# both sides odd, odd values can only sit on the white checkerboard cells.
impossible = ClueSet(doc.dims, {Cell(0, 0): 2})
print(f"2 in the white corner: {solve(doc.dims, impossible, retain=0).count} solutions")

# Counting can be capped when only "zero, one, or many" matters. A capped
# outcome reports a lower bound instead of the exact count.
empty = ClueSet(BoardDims(4, 4), {})
capped = solve(BoardDims(4, 4), empty, count_cap=10, retain=0)
print(f"empty 4x4 board, capped search: at least {capped.count} (capped={capped.capped})")
exact = solve(BoardDims(4, 4), empty, retain=0)
print(f"empty 4x4 board, exact count: {exact.count}")
