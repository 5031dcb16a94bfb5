"""A census of complete solutions per board size.
=================================================

Solutions of the empty board are directed snake paths through the grid.
They pair up under value reversal (replace v by m*n+1-v), so every count on
a multi-cell board is even; on boards with both sides odd, the majority
color must host the odd values, pinning value 1 to a white cell.
"""

import numpy as np

from numbrix import (BoardDims, all_solutions, count_hamiltonian_paths,
                     reverse_solution, solution_matrix)

print(f"{'board':>6} | {'solutions':>9}")
print("-" * 20)
for rows in range(1, 6):
    for cols in range(rows, 6):
        count = count_hamiltonian_paths(BoardDims(rows, cols))
        print(f"{rows}x{cols:>4} | {count:>9}")

# Reversal pairing, spot-checked by materializing a small board.
dims = BoardDims(3, 4)
solutions = list(all_solutions(dims))
paired = sum(1 for s in solutions if reverse_solution(s) in solutions)
print(f"\n3x4 solutions: {len(solutions)}, closed under reversal: {paired == len(solutions)}")

# Where does value 1 start? On the both-odd 5x5 board, always on white.
dims = BoardDims(5, 5)
matrix = solution_matrix(dims)
starts = np.argmax(matrix == 1, axis=1)
colors = {(int(i) // 5 + int(i) % 5) % 2 for i in set(starts.tolist())}
print(f"5x5 boards: value 1 appears on {len(set(starts.tolist()))} distinct cells, "
      f"all white: {colors == {0}}")

corner = sum(1 for i in starts.tolist() if i in (0, 4, 20, 24))
print(f"solutions starting in a corner: {corner} of {matrix.shape[0]}")

# The same distribution, by cell, as a quick text heatmap.
counts = np.bincount(starts, minlength=25).reshape(5, 5)
print("\nwhere value 1 falls across all 5x5 solutions:")
for row in counts:
    print("  " + " ".join(f"{int(c):>4}" for c in row))
