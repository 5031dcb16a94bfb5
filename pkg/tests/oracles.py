"""Independent slow references used to check the fast engine.

These deliberately avoid the package's bitboard machinery: literal
permutation filtering and plain coordinate recursion, so the two sides of
every comparison share no code.
"""

from itertools import permutations


def adjacency_ok(rows: int, cols: int, values) -> bool:
    size = rows * cols
    pos = {v: i for i, v in enumerate(values)}
    if len(pos) != size or set(pos) != set(range(1, size + 1)):
        return False
    for v in range(1, size):
        a, b = pos[v], pos[v + 1]
        if abs(a // cols - b // cols) + abs(a % cols - b % cols) != 1:
            return False
    return True


def permutation_solutions(rows: int, cols: int) -> list[tuple[int, ...]]:
    """Every solution, by filtering all (m*n)! permutations. Tiny boards only."""
    size = rows * cols
    return [p for p in permutations(range(1, size + 1)) if adjacency_ok(rows, cols, p)]


def walk_solutions(rows: int, cols: int) -> list[tuple[int, ...]]:
    """Every solution, by unpruned coordinate recursion."""
    size = rows * cols
    grid = [[0] * cols for _ in range(rows)]
    found: list[tuple[int, ...]] = []

    def extend(r: int, c: int, v: int) -> None:
        grid[r][c] = v
        if v == size:
            found.append(tuple(grid[rr][cc] for rr in range(rows) for cc in range(cols)))
        else:
            for rr, cc in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
                if 0 <= rr < rows and 0 <= cc < cols and grid[rr][cc] == 0:
                    extend(rr, cc, v + 1)
        grid[r][c] = 0

    for r in range(rows):
        for c in range(cols):
            extend(r, c, 1)
    return found


def walk_count(rows: int, cols: int) -> int:
    return len(walk_solutions(rows, cols))


def circuit_count(rows: int, cols: int) -> int:
    """Undirected closed tours: every directed solution whose end cells are
    adjacent traverses exactly one closed tour, and each closed tour is
    traversed from every cell in both directions (2*m*n ways)."""
    if rows == 1 or cols == 1:
        return 0
    size = rows * cols
    closed = 0
    for values in walk_solutions(rows, cols):
        first = values.index(1)
        last = values.index(size)
        dist = abs(first // cols - last // cols) + abs(first % cols - last % cols)
        if dist == 1:
            closed += 1
    assert closed % (2 * size) == 0
    return closed // (2 * size)
