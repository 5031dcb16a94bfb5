import pytest
from hypothesis import given
from hypothesis import strategies as st

from numbrix.grid import BoardDims, Cell, Color, cell_color
from numbrix.model import (ClueSet, Solution, clue_screen, is_valid_solution,
                           matches, reverse_clues, reverse_solution)

from oracles import walk_solutions

# 3x4 serpentine from the top-right corner
SERPENTINE_3X4 = (4, 3, 2, 1,
                  5, 6, 7, 8,
                  12, 11, 10, 9)


def test_valid_solution_examples():
    dims = BoardDims(3, 4)
    assert is_valid_solution(dims, SERPENTINE_3X4)
    swapped = list(SERPENTINE_3X4)
    i6, i7 = swapped.index(6), swapped.index(7)
    swapped[i6], swapped[i7] = 7, 6
    assert not is_valid_solution(dims, swapped)
    assert is_valid_solution(BoardDims(1, 1), (1,))


def test_valid_solution_rejects_non_bijections():
    dims = BoardDims(2, 2)
    assert not is_valid_solution(dims, (1, 2, 2, 3))
    assert not is_valid_solution(dims, (0, 1, 2, 3))
    with pytest.raises(ValueError):
        is_valid_solution(dims, (1, 2, 3))


def test_reverse_solution_examples():
    assert reverse_solution(Solution(BoardDims(1, 2), (1, 2))).values == (2, 1)
    flipped = reverse_solution(Solution(BoardDims(3, 4), SERPENTINE_3X4))
    assert flipped.values == (9, 10, 11, 12,
                              8, 7, 6, 5,
                              1, 2, 3, 4)


def test_reverse_clues_example():
    dims = BoardDims(3, 3)
    clues = ClueSet(dims, {Cell(2, 1): 6, Cell(1, 2): 2})
    assert reverse_clues(clues).assignments == {Cell(2, 1): 4, Cell(1, 2): 8}
    assert reverse_clues(ClueSet(dims, {})).assignments == {}


def test_matches():
    s = Solution(BoardDims(3, 4), SERPENTINE_3X4)
    assert matches(s, ClueSet(s.dims, {Cell(0, 0): 4}))
    assert not matches(s, ClueSet(s.dims, {Cell(0, 0): 1}))
    assert matches(s, ClueSet(s.dims, {}))
    with pytest.raises(ValueError):
        matches(s, ClueSet(BoardDims(4, 3), {}))


def test_clue_set_validation():
    dims = BoardDims(2, 3)
    with pytest.raises(ValueError):
        ClueSet(dims, {Cell(2, 0): 1})
    with pytest.raises(ValueError):
        ClueSet(dims, {Cell(0, 0): 7})
    with pytest.raises(ValueError):
        ClueSet(dims, {Cell(0, 0): 3, Cell(1, 1): 3})


def test_clue_screen_examples():
    # odd values on a both-odd board must sit on white cells; (0,0) is white
    assert not clue_screen(ClueSet(BoardDims(3, 3), {Cell(0, 0): 2}))
    # too far apart for the value gap
    assert not clue_screen(ClueSet(BoardDims(2, 5), {Cell(0, 0): 1, Cell(0, 4): 2}))
    # a solvable pair
    assert clue_screen(ClueSet(BoardDims(3, 3), {Cell(2, 1): 6, Cell(1, 2): 2}))


def test_clue_screen_parity_of_gap():
    # distance 2, gap 3: parity mismatch even though the gap is large enough
    assert not clue_screen(ClueSet(BoardDims(2, 5), {Cell(0, 0): 1, Cell(0, 2): 4}))


@pytest.mark.parametrize("rows,cols", [(2, 3), (3, 3), (3, 4)])
def test_clue_screen_sound_on_real_solutions(rows, cols):
    # every pair of entries taken from a true solution passes the screen
    dims = BoardDims(rows, cols)
    for values in walk_solutions(rows, cols):
        s = Solution(dims, values)
        cells = list(dims.cells())
        for a in range(0, dims.size, 3):
            for b in range(a + 1, dims.size, 2):
                pair = ClueSet(dims, {cells[a]: s.value_at(cells[a]),
                                      cells[b]: s.value_at(cells[b])})
                assert clue_screen(pair)


@pytest.mark.parametrize("rows,cols", [(3, 3), (1, 5), (3, 5)])
def test_both_odd_solutions_put_odds_on_white(rows, cols):
    dims = BoardDims(rows, cols)
    for values in walk_solutions(rows, cols):
        s = Solution(dims, values)
        for cell in dims.cells():
            assert (s.value_at(cell) % 2 == 1) == (cell_color(cell) is Color.WHITE)


@given(st.sampled_from([(1, 1), (1, 4), (2, 2), (2, 3), (3, 3)]), st.data())
def test_reverse_solution_is_involution_and_valid(shape, data):
    rows, cols = shape
    pool = walk_solutions(rows, cols)
    values = data.draw(st.sampled_from(pool))
    s = Solution(BoardDims(rows, cols), values)
    rev = reverse_solution(s)
    assert is_valid_solution(s.dims, rev.values)
    assert reverse_solution(rev) == s


@given(st.sampled_from([(2, 2), (2, 3), (3, 3)]), st.data())
def test_matches_commutes_with_reversal(shape, data):
    rows, cols = shape
    dims = BoardDims(rows, cols)
    pool = walk_solutions(rows, cols)
    values = data.draw(st.sampled_from(pool))
    s = Solution(dims, values)
    cell = data.draw(st.sampled_from(list(dims.cells())))
    clues = ClueSet(dims, {cell: s.value_at(cell)})
    assert matches(s, clues)
    assert matches(reverse_solution(s), reverse_clues(clues))
