import pytest
from hypothesis import given
from hypothesis import strategies as st

from numbrix.grid import (BoardDims, Cell, Color, cell_color, color_counts,
                          manhattan, neighbors)

dims_strategy = st.builds(BoardDims,
                          st.integers(min_value=1, max_value=9),
                          st.integers(min_value=1, max_value=9))


def cells_of(dims):
    return [Cell(r, c) for r in range(dims.rows) for c in range(dims.cols)]


def test_dims_must_be_positive():
    with pytest.raises(ValueError):
        BoardDims(0, 3)
    with pytest.raises(ValueError):
        BoardDims(3, -1)


def test_neighbors_single_cell_board():
    assert neighbors(BoardDims(1, 1), Cell(0, 0)) == []


def test_neighbors_corner_and_interior():
    dims = BoardDims(3, 3)
    assert set(neighbors(dims, Cell(0, 0))) == {Cell(1, 0), Cell(0, 1)}
    assert set(neighbors(dims, Cell(1, 1))) == {Cell(0, 1), Cell(2, 1), Cell(1, 0), Cell(1, 2)}


def test_neighbors_deterministic_order():
    # up, down, left, right
    assert neighbors(BoardDims(3, 3), Cell(1, 1)) == [
        Cell(0, 1), Cell(2, 1), Cell(1, 0), Cell(1, 2)]


def test_neighbors_rejects_out_of_bounds():
    with pytest.raises(ValueError):
        neighbors(BoardDims(2, 2), Cell(2, 0))
    with pytest.raises(ValueError):
        neighbors(BoardDims(2, 2), Cell(0, -1))


def test_cell_color_examples():
    assert cell_color(Cell(0, 0)) is Color.WHITE
    assert cell_color(Cell(0, 1)) is Color.BLACK
    assert cell_color(Cell(2, 4)) is Color.WHITE


def test_color_counts_examples():
    assert color_counts(BoardDims(3, 5)) == (8, 7)
    assert color_counts(BoardDims(2, 2)) == (2, 2)
    assert color_counts(BoardDims(1, 1)) == (1, 0)


@given(dims_strategy)
def test_color_counts_match_cells(dims):
    whites = sum(1 for cell in cells_of(dims) if cell_color(cell) is Color.WHITE)
    blacks = dims.size - whites
    assert color_counts(dims) == (whites, blacks)


@given(dims_strategy)
def test_neighbors_have_opposite_color(dims):
    for cell in cells_of(dims):
        for other in neighbors(dims, cell):
            assert cell_color(other) is not cell_color(cell)
            assert manhattan(cell, other) == 1


@given(dims_strategy)
def test_neighbors_symmetric(dims):
    for cell in cells_of(dims):
        for other in neighbors(dims, cell):
            assert cell in neighbors(dims, other)


@given(dims_strategy)
def test_neighbor_degrees_sum_to_twice_edges(dims):
    m, n = dims.rows, dims.cols
    degree_sum = sum(len(neighbors(dims, cell)) for cell in cells_of(dims))
    assert degree_sum == 2 * (m * (n - 1) + n * (m - 1))


def test_index_round_trip():
    dims = BoardDims(4, 7)
    for i in range(dims.size):
        assert dims.index_of(dims.cell_at(i)) == i
