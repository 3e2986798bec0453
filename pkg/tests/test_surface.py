import csv
import io
from fractions import Fraction

import pytest

from matpoly import SurfaceGrid, construct, parse, sample_surface
from matpoly.surface import to_decimal

F = Fraction


def test_default_grid_hits_nodes():
    a = [[1, 0, 2], [-1, 2, -3]]
    grid = sample_surface(construct(a), steps=(3, 5))
    assert (grid.x_min, grid.x_max, grid.y_min, grid.y_max) == (1, 2, 1, 3)
    for i in (1, 2):
        for j in (1, 2, 3):
            assert grid.value_at(i, j) == a[i - 1][j - 1]


def test_midpoints_exact():
    grid = sample_surface(parse("x*y"), x_range=(0, 1), y_range=(0, 1), steps=3)
    assert grid.value_at(F(1, 2), F(1, 2)) == F(1, 4)
    with pytest.raises(KeyError):
        grid.value_at(F(1, 3), 0)


def test_csv():
    grid = sample_surface(parse("1/3*x"), x_range=(0, 1), y_range=(0, 1), steps=2)
    rows = list(csv.reader(io.StringIO(grid.to_csv())))
    assert rows[0] == ["x", "y", "z", "z_decimal"]
    assert len(rows) == 5
    assert rows[-1] == ["1", "1", "1/3", "0.33333333333333333333"]


def test_decimal():
    assert to_decimal(F(-7, 2)) == "-3.5"
    assert to_decimal(F(2, 3)) == "0.66666666666666666667"


def test_steps_validation():
    with pytest.raises(ValueError):
        sample_surface(parse("x"), steps=1)


def test_grid_is_immutable():
    grid = sample_surface(parse("x"), steps=2)
    assert isinstance(grid, SurfaceGrid)
    with pytest.raises(AttributeError):
        grid.steps_x = 4
