"""Inverse, powers and the Cayley-Hamilton identity for a 2x2 example."""

from matpoly import (
    SingularMatrixError,
    cayley_hamilton_residual,
    char_poly_of,
    dp_inverse,
    dp_power,
    parse,
    to_matrix,
)

p = parse("-10*x*y + 14*x + 13*y - 18")
print("P      =", p, "  matrix", [[str(v) for v in row] for row in to_matrix(p).tolist()])
print("P^2    =", dp_power(p, 2))
print("char   =", char_poly_of(p))
print("CH residual =", cayley_hamilton_residual(p))

inv = dp_inverse(p)
print("P^-1   =", inv, "  matrix", [[str(v) for v in row] for row in to_matrix(inv).tolist()])

q = parse("15*x*y - 21*x - 20*y + 28")
try:
    dp_inverse(q)
except SingularMatrixError as exc:
    print("Q has no inverse:", exc)
