"""Exception types raised across the package."""


class NumbrixError(Exception):
    """Base class for all domain errors."""


class NoCircuitError(NumbrixError):
    """The board admits no Hamiltonian circuit."""


class NoSuchSetError(NumbrixError):
    """The requested clue arrangement does not exist for this board."""


class InfeasibleClueError(NumbrixError):
    """The clue assignment fails a necessary feasibility condition."""


class CapacityError(NumbrixError):
    """The board is too large for exhaustive enumeration."""


class PuzzleFormatError(NumbrixError):
    """A puzzle document failed to parse; carries the offending position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
