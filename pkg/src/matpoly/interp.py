"""Interpolating polynomials of matrices at the integer nodes.

``construct(a)`` returns the unique polynomial ``P`` of shape ``a.shape``
with ``P(i, j) == a[i-1, j-1]`` for ``1 <= i <= m`` and ``1 <= j <= n``.
All routes first interpolate each column in ``x`` and then combine the
column polynomials across ``y``, except the linear-system route which
solves for the coefficients directly.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from math import factorial

from .bipoly import BiPoly, Shape
from .scalar import Matrix, mat_inverse, solve
from .upoly import lagrange_basis, mul_linear

__all__ = [
    "ConstructionMethod",
    "construct",
    "construct_all",
    "to_matrix",
    "lagrange_basis",
    "forward_difference_table",
    "backward_difference_table",
    "sample_matrix",
]

# Above this many unknowns the sample system is solved through its
# Kronecker factors instead of by elimination on the full matrix.
DIRECT_SOLVE_LIMIT = 36


class ConstructionMethod(enum.Enum):
    LAGRANGE = "lagrange"
    NEWTON_FORWARD = "newton-fwd"
    NEWTON_BACKWARD = "newton-bwd"
    LINEAR_SYSTEM = "linsys"


def forward_difference_table(values) -> list[list[Fraction]]:
    """Rows of successive forward differences; ``table[k][0]`` is the k-th
    difference anchored at the first entry."""
    row = [Fraction(v) for v in values]
    if not row:
        raise ValueError("difference table of an empty sequence")
    table = [row]
    while len(row) > 1:
        row = [b - a for a, b in zip(row, row[1:])]
        table.append(row)
    return table


def backward_difference_table(values) -> list[list[Fraction]]:
    """Same rows as the forward table; ``table[k][-1]`` is the k-th backward
    difference anchored at the last entry."""
    return forward_difference_table(values)


def _newton_forward_basis(count: int) -> list[list[Fraction]]:
    # (x-1)(x-2)...(x-k) / k!
    basis = []
    poly = [Fraction(1)]
    for k in range(count):
        basis.append([c / factorial(k) for c in poly])
        poly = mul_linear(poly, Fraction(k + 1))
    return basis


def _newton_backward_basis(count: int) -> list[list[Fraction]]:
    # (x-m)(x-m+1)...(x-m+k-1) / k!
    basis = []
    poly = [Fraction(1)]
    for k in range(count):
        basis.append([c / factorial(k) for c in poly])
        poly = mul_linear(poly, Fraction(count - k))
    return basis


def _combine(column_coeffs, basis_y, m, n):
    # grid[k1][k2] = sum_r column_coeffs[r][k1] * basis_y[r][k2]
    grid = [[Fraction(0)] * n for _ in range(m)]
    for weights, yb in zip(column_coeffs, basis_y):
        for k1, w in enumerate(weights):
            if w:
                row = grid[k1]
                for k2, b in enumerate(yb):
                    if b:
                        row[k2] += w * b
    return grid


def _columns(a: Matrix):
    return [list(col) for col in zip(*a.rows)]


def _lagrange(a: Matrix):
    m, n = a.shape
    basis_x = [lagrange_basis(m, k) for k in range(1, m + 1)]
    column_polys = []
    for col in _columns(a):
        p = [Fraction(0)] * m
        for value, lb in zip(col, basis_x):
            if value:
                for k1, c in enumerate(lb):
                    p[k1] += value * c
        column_polys.append(p)
    basis_y = [lagrange_basis(n, r) for r in range(1, n + 1)]
    return _combine(column_polys, basis_y, m, n)


def _newton(a: Matrix, forward: bool):
    m, n = a.shape
    if forward:
        basis_x, basis_y, anchor = _newton_forward_basis(m), _newton_forward_basis(n), 0
    else:
        basis_x, basis_y, anchor = _newton_backward_basis(m), _newton_backward_basis(n), -1

    column_polys = []
    for col in _columns(a):
        diffs = [row[anchor] for row in forward_difference_table(col)]
        p = [Fraction(0)] * m
        for d, b in zip(diffs, basis_x):
            if d:
                for k1, c in enumerate(b):
                    p[k1] += d * c
        column_polys.append(p)

    # differences of whole column polynomials, taken coefficient-wise
    poly_diffs = [[Fraction(0)] * m for _ in range(n)]
    for k1 in range(m):
        table = forward_difference_table([p[k1] for p in column_polys])
        for r, row in enumerate(table):
            poly_diffs[r][k1] = row[anchor]
    return _combine(poly_diffs, basis_y, m, n)


def sample_matrix(m: int, n: int) -> Matrix:
    """Node-evaluation matrix: row ``(i, j)`` (row-major), column
    ``(k1, k2)`` (k1-major) holds ``i**k1 * j**k2``."""
    Shape.of((m, n))
    return Matrix(
        [Fraction(i**k1 * j**k2) for k1 in range(m) for k2 in range(n)]
        for i in range(1, m + 1)
        for j in range(1, n + 1)
    )


def _vandermonde(size: int) -> Matrix:
    return Matrix([Fraction(i**k) for k in range(size)] for i in range(1, size + 1))


def _linear_system(a: Matrix):
    m, n = a.shape
    if m * n <= DIRECT_SOLVE_LIMIT:
        flat = solve(sample_matrix(m, n), a.flatten())
        return [flat[k1 * n:(k1 + 1) * n] for k1 in range(m)]
    # sample matrix = V_m (x) V_n, so A = V_m C V_n^T
    coeffs = mat_inverse(_vandermonde(m)) @ a @ mat_inverse(_vandermonde(n)).T
    return coeffs.tolist()


_ROUTES = {
    ConstructionMethod.LAGRANGE: _lagrange,
    ConstructionMethod.NEWTON_FORWARD: lambda a: _newton(a, forward=True),
    ConstructionMethod.NEWTON_BACKWARD: lambda a: _newton(a, forward=False),
    ConstructionMethod.LINEAR_SYSTEM: _linear_system,
}


def construct(a, method=ConstructionMethod.LAGRANGE) -> BiPoly:
    """Interpolating polynomial of ``a`` in the space of shape ``a.shape``."""
    if not isinstance(a, Matrix):
        a = Matrix(a)
    method = ConstructionMethod(method)
    grid = _ROUTES[method](a)
    return BiPoly._from_trusted(tuple(map(tuple, grid)), Shape(*a.shape))


def construct_all(a) -> dict[ConstructionMethod, BiPoly]:
    if not isinstance(a, Matrix):
        a = Matrix(a)
    return {method: construct(a, method) for method in ConstructionMethod}


def to_matrix(p: BiPoly) -> Matrix:
    """Sample ``p`` at the integer nodes of its declared shape."""
    m, n = p.shape
    grid = p.coeffs
    rows = []
    for i in range(1, m + 1):
        # P(i, y) as coefficients in y, then evaluated at each j
        in_y = [Fraction(0)] * n
        for k1 in range(m - 1, -1, -1):
            in_y = [acc * i + c for acc, c in zip(in_y, grid[k1])]
        row = []
        for j in range(1, n + 1):
            acc = Fraction(0)
            for c in reversed(in_y):
                acc = acc * j + c
            row.append(acc)
        rows.append(tuple(row))
    return Matrix._from_trusted(tuple(rows))
