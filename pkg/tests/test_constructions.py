"""Closed-form witnesses: pinned small cases, routing, and error guards."""

import pytest

from starpcg.constructions import (
    cycle_witness,
    grid2_witness,
    grid_square_witness,
    grid_witness,
    path_witness,
)
from starpcg.graphs import make_cycle, make_grid, make_path
from starpcg.stars import realize, verify


class TestCycle:
    def test_triangle(self):
        wit = cycle_witness(3)
        assert wit.weights == (4, 1, 2)
        assert wit.intervals == ((5, 7), (3, 3))
        assert realize(wit) == make_cycle(3)

    def test_even_golden(self):
        wit = cycle_witness(8)
        assert wit.weights == (12, 1, 11, 2, 10, 3, 9, 4)
        assert wit.intervals == ((12, 13), (16, 16))

    def test_odd_golden(self):
        wit = cycle_witness(7)
        assert wit.weights == (8, 5, 10, 3, 12, 1, 6)
        assert wit.intervals == ((13, 15), (7, 7))

    def test_too_small(self):
        with pytest.raises(ValueError, match="n >= 3"):
            cycle_witness(2)


class TestPath:
    def test_four(self):
        wit = path_witness(4)
        assert wit.weights == (8, 2, 6, 4)
        assert wit.intervals == ((8, 10),)
        assert realize(wit) == make_path(4)

    def test_two(self):
        wit = path_witness(2)
        assert wit.weights == (4, 2)
        assert wit.intervals == ((4, 6),)

    def test_single_vertex_is_edgeless(self):
        assert realize(path_witness(1)) == make_path(1)

    def test_too_small(self):
        with pytest.raises(ValueError, match="n >= 1"):
            path_witness(0)


class TestGridTwoColumns:
    def test_four_rows(self):
        wit = grid2_witness(4)
        assert wit.weights == (8, 1, 2, 7, 6, 3, 4, 5)
        assert wit.intervals == ((8, 10),)

    def test_one_row(self):
        wit = grid2_witness(1)
        assert wit.weights == (2, 1)
        assert wit.intervals == ((2, 4),)
        assert realize(wit) == make_grid([1, 2])

    def test_ten_rows_realize(self):
        assert realize(grid2_witness(10)) == make_grid([10, 2])

    def test_too_small(self):
        with pytest.raises(ValueError, match="n1 >= 1"):
            grid2_witness(0)


class TestGridSquare:
    def test_four_intervals_pinned(self):
        assert grid_square_witness(4).intervals == ((24, 25), (29, 30))

    def test_four_corner_weights(self):
        weights = grid_square_witness(4).weights
        # row-major flat ids: (0,0) -> 0, (0,1) -> 1, (1,0) -> 4
        assert weights[0] == 29
        assert weights[1] == 0
        assert weights[4] == 1

    def test_all_weights_non_negative(self):
        for h in range(1, 17):
            assert min(grid_square_witness(h).weights) >= 0, h

    def test_too_small(self):
        with pytest.raises(ValueError, match="h >= 1"):
            grid_square_witness(0)


class TestGridRouting:
    def test_single_row_or_column_uses_path(self):
        assert grid_witness(1, 6) == path_witness(6)
        assert grid_witness(6, 1) == path_witness(6)

    def test_two_columns_direct(self):
        assert grid_witness(5, 2) == grid2_witness(5)

    def test_two_rows_transposed(self):
        wit = grid_witness(2, 5)
        assert wit.k == 1
        assert verify(wit, make_grid([2, 5])).equal

    def test_rectangle_restricts_the_square(self):
        wit = grid_witness(3, 5)
        square = grid_square_witness(5)
        assert wit.intervals == square.intervals
        assert wit.weights == tuple(
            square.weights[i * 5 + j] for i in range(3) for j in range(5)
        )
        assert verify(wit, make_grid([3, 5])).equal

    def test_too_small(self):
        with pytest.raises(ValueError, match=">= 1"):
            grid_witness(0, 3)
