"""Sample an interpolating surface on a grid and write it as CSV."""

import sys
from fractions import Fraction

from matpoly import construct, sample_surface

p = construct([[1, 0, 2], [-1, 2, -3]])
grid = sample_surface(p, steps=(3, 5))
print("value at node (2, 3):", grid.value_at(2, 3))
print("value between nodes (3/2, 2):", grid.value_at(Fraction(3, 2), 2))
sys.stdout.write(grid.to_csv())
