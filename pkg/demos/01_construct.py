"""Interpolate a few matrices and compare the four construction routes."""

from matpoly import ConstructionMethod, construct, construct_all, to_matrix
from matpoly.fileio import format_matrix_csv

matrices = {
    "row": [[1, -1, -2]],
    "column": [[-1], [1], [3]],
    "square": [[-15, 36], [-1, 96]],
    "wide": [[1, 0, 2], [-1, 2, -3]],
}

for name, a in matrices.items():
    results = construct_all(a)
    p = results[ConstructionMethod.LAGRANGE]
    agree = all(q == p for q in results.values())
    print(f"{name:7s} shape {tuple(p.shape)}  P = {p}")
    back = format_matrix_csv(to_matrix(p)).strip().replace("\n", "; ")
    print(f"        routes agree: {agree}; back to matrix: {back}")

# the polynomial reproduces every entry at its integer node
p = construct(matrices["wide"])
print("P(2, 3) =", p(2, 3))
