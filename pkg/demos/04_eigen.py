"""Rational eigenvalues and their eigen-polynomials."""

from matpoly import eigen_pairs, parse, to_matrix, verify_eigenpair

p = parse("-x*y + 4*x + 3*y - 5")
print("matrix:", [[str(v) for v in row] for row in to_matrix(p).tolist()])
for pair in eigen_pairs(p):
    ok = verify_eigenpair(p, pair.value, pair.eigen_poly)
    print(f"lambda = {pair.value}: X = {pair.eigen_poly}  (P (x) X == lambda X: {ok})")

# any nonzero multiple is an eigen-polynomial too
print("5x - 8 works for -1:", verify_eigenpair(p, -1, parse("5*x - 8", (2, 1))))
