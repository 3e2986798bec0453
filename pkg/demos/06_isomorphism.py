"""The interpolation map as a matrix, plus the randomized verification suites."""

from matpoly import Matrix, check_linearity, check_product_structure, check_ring_axioms, det
from matpoly import coordinate_matrix, sampling_matrix
from matpoly.fileio import format_matrix_csv

c = coordinate_matrix(2, 2, order="y-major")  # monomials 1, x, y, xy
s = sampling_matrix(2, 2, order="y-major")
print("coordinate matrix:")
print(format_matrix_csv(c))
print("sampling matrix:")
print(format_matrix_csv(s))
print("det:", det(c), " C @ S == I:", c @ s == Matrix.identity(4))

for report in (
    check_linearity(trials=100, seed=1),
    check_product_structure(trials=50, seed=2),
    check_ring_axioms(trials=50, seed=3),
):
    print(f"{report.name}: {report.trials} trials, passed={report.passed}")
