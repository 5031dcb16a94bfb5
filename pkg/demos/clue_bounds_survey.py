"""Clue-count bounds: how few clues define a board, how many can fail to.
=========================================================================

Two questions drive the analysis layer:

1. the minimum number of clues whose placement forces a unique solution;
2. the maximum number of clues that still leaves the board ambiguous.

Small boards are settled exhaustively by signature counting over every
solution; the block construction supplies the defining witness at the
ceil(m/2) upper bound.
"""

from numbrix import (BoardDims, max_nondefining_number, min_clue_number,
                     minimal_clues)

print(f"{'board':>6} | {'min defining':>12} | {'max non-defining':>16} | defining witness")
print("-" * 66)
for rows, cols in [(1, 5), (1, 6), (2, 4), (2, 6), (3, 3), (3, 4),
                   (4, 4), (4, 5), (5, 5)]:
    dims = BoardDims(rows, cols)
    low = min_clue_number(dims)
    high = max_nondefining_number(dims)
    witness = sorted((c.row, c.col, v) for c, v in low.witness.assignments.items())
    mode = "exhaustive" if high.exhaustive else "witness"
    print(f"{rows}x{cols:>4} | {low.k_min:>12} | {high.k_max_nondef:>6} ({mode:>10}) | {witness}")

# The 5x5 entry above is the brute-force result: its full solution set shows
# no pair of clues is ever matched by exactly one solution, so the three-clue
# block construction is optimal there.
dims = BoardDims(5, 5)
print()
print("5x5 block construction, unique by design:")
for cell, value in minimal_clues(dims).items():
    print(f"  value {value:>2} pinned at row {cell.row}, column {cell.col}")
