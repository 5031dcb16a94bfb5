"""Exact combinatorics for Numbrix boards: solution enumeration, clue-set
constructions, and exhaustive minimum/maximum clue-count analysis."""

from .analyze import (MaxNondefReport, MinCluesReport, find_defining_set,
                      max_nondefining_number, min_clue_number, verify_no_k_defines)
from .construct import (BlockLayout, Corner, CyclicPath, SingleClueReduction, Symmetry,
                        ZigZagSpec, ambiguous_pair_solution, apply_symmetry, circular_path,
                        max_nondefining_clues, minimal_clues, two_solutions_single_clue,
                        zigzag_clues, zigzag_solution)
from .enumeration import (ENUMERATION_CELL_LIMIT, all_solutions, count_hamiltonian_circuits,
                          count_hamiltonian_paths, defines_puzzle, first_solution,
                          solution_matrix, solve)
from .errors import (CapacityError, InfeasibleClueError, NoCircuitError, NoSuchSetError,
                     NumbrixError, PuzzleFormatError)
from .grid import BoardDims, Cell, Color, cell_color, color_counts, manhattan, neighbors
from .model import (ClueSet, SolveOutcome, Solution, clue_screen, is_valid_solution,
                    matches, reverse_clues, reverse_solution)

__version__ = "0.1.0"

__all__ = [
    "BoardDims", "Cell", "Color", "cell_color", "color_counts", "manhattan", "neighbors",
    "ClueSet", "SolveOutcome", "Solution", "clue_screen", "is_valid_solution", "matches",
    "reverse_clues", "reverse_solution",
    "ENUMERATION_CELL_LIMIT", "all_solutions", "count_hamiltonian_circuits",
    "count_hamiltonian_paths", "defines_puzzle", "first_solution", "solution_matrix", "solve",
    "BlockLayout", "Corner", "CyclicPath", "SingleClueReduction", "Symmetry", "ZigZagSpec",
    "ambiguous_pair_solution", "apply_symmetry", "circular_path", "max_nondefining_clues",
    "minimal_clues", "two_solutions_single_clue", "zigzag_clues", "zigzag_solution",
    "MaxNondefReport", "MinCluesReport", "find_defining_set", "max_nondefining_number",
    "min_clue_number", "verify_no_k_defines",
    "CapacityError", "InfeasibleClueError", "NoCircuitError", "NoSuchSetError",
    "NumbrixError", "PuzzleFormatError",
]
