"""Closed tours: when a board admits one, and what that implies for clues.
=========================================================================

A closed tour visits every cell once and returns to its start. The
checkerboard coloring settles existence: each step alternates colors, so a
tour needs an even number of cells; from a boundary sweep plus a serpentine
interior fill one can always build a tour when a side is even.

A board with a closed tour can never be defined by one clue: slide the
numbering around the tour in either direction and the lone clue still fits.
"""

from numbrix import (BoardDims, Cell, ClueSet, NoCircuitError, circular_path,
                     count_hamiltonian_circuits, defines_puzzle, solve)

for rows, cols in [(2, 2), (2, 5), (3, 3), (3, 4), (4, 4), (5, 5), (5, 6), (6, 6)]:
    dims = BoardDims(rows, cols)
    count = count_hamiltonian_circuits(dims)
    try:
        tour = circular_path(dims)
        built = f"constructed one of length {len(tour.cells)}"
    except NoCircuitError as err:
        built = "none constructible"
    print(f"{rows}x{cols}: {count:>5} closed tours; {built}")

# Render the constructed tour of a 4x5 board as visit order.
dims = BoardDims(4, 5)
tour = circular_path(dims)
order = [0] * dims.size
for step, cell in enumerate(tour.cells, start=1):
    order[dims.index_of(cell)] = step
print()
print("4x5 tour, visit order per cell:")
for r in range(dims.rows):
    print("  " + " ".join(f"{order[r * dims.cols + c]:>2}" for c in range(dims.cols)))

# One clue on such a board never defines the puzzle.
lone = ClueSet(dims, {Cell(1, 2): 7})
print()
print(f"one clue on 4x5 defines the board: {defines_puzzle(dims, lone)}")
print(f"(it is matched by {solve(dims, lone, retain=0).count} different solutions)")
