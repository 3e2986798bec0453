"""The DP product and the algebra it induces on square polynomial spaces.

``P (x) Q = sum_{k=1..n} P(x, k) * Q(k, y)`` for ``P`` of shape ``(m, n)``
and ``Q`` of shape ``(n, q)``; the result has shape ``(m, q)``.  Under
interpolation this is exactly matrix multiplication, which is what lets
inverses, characteristic polynomials and eigenvalues be computed on the
matrix side and carried back.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .bipoly import BiPoly, Shape, is_skew_symmetric, is_symmetric, scale, transpose
from .errors import ShapeError, SingularMatrixError
from .interp import construct, to_matrix
from .scalar import CharPolyCoeffs, Matrix, char_poly, det, mat_inverse, null_space, rational_roots
from .upoly import interpolate_nodes


def _slices_in_x(p: BiPoly, n: int) -> list[list[Fraction]]:
    # P(x, k) for k = 1..n, as coefficient lists in x
    out = []
    for k in range(1, n + 1):
        slice_ = []
        for row in p.coeffs:
            acc = Fraction(0)
            for c in reversed(row):
                acc = acc * k + c
            slice_.append(acc)
        out.append(slice_)
    return out


def _slices_in_y(q: BiPoly, n: int) -> list[list[Fraction]]:
    # Q(k, y) for k = 1..n, as coefficient lists in y
    out = []
    for k in range(1, n + 1):
        acc = [Fraction(0)] * q.shape.n
        for row in reversed(q.coeffs):
            acc = [a * k + c for a, c in zip(acc, row)]
        out.append(acc)
    return out


def dp_product(p: BiPoly, q: BiPoly) -> BiPoly:
    """DP product of ``p`` (shape ``(m, n)``) and ``q`` (shape ``(n, q)``)."""
    m, n = p.shape
    if q.shape.m != n:
        raise ShapeError(
            f"DP product undefined for shapes {tuple(p.shape)} and {tuple(q.shape)}"
        )
    width = q.shape.n
    grid = [[Fraction(0)] * width for _ in range(m)]
    for px, qy in zip(_slices_in_x(p, n), _slices_in_y(q, n)):
        for a, u in enumerate(px):
            if u:
                row = grid[a]
                for b, v in enumerate(qy):
                    if v:
                        row[b] += u * v
    return BiPoly._from_trusted(tuple(map(tuple, grid)), Shape(m, width))


@lru_cache(maxsize=64)
def identity_poly(n: int) -> BiPoly:
    """Interpolant of the ``n x n`` identity; the two-sided unit for ``dp_product``."""
    if n < 1:
        raise ShapeError("identity polynomial needs n >= 1")
    return construct(Matrix.identity(n))


def _require_square(p: BiPoly, what: str) -> int:
    if p.shape.m != p.shape.n:
        raise ShapeError(f"{what} needs a square shape, got {tuple(p.shape)}")
    return p.shape.m


def is_invertible(p: BiPoly) -> bool:
    _require_square(p, "invertibility")
    return det(to_matrix(p)) != 0


def dp_inverse(p: BiPoly) -> BiPoly:
    """Two-sided inverse under ``dp_product``.

    Computed through the sampled matrix and checked against the identity
    polynomial on both sides before it is returned.
    """
    n = _require_square(p, "inverse")
    try:
        inv = construct(mat_inverse(to_matrix(p)))
    except SingularMatrixError as exc:
        raise SingularMatrixError(f"polynomial {p} is not invertible", column=exc.column) from None
    eye = identity_poly(n)
    if dp_product(p, inv) != eye or dp_product(inv, p) != eye:
        raise ArithmeticError("inverse failed verification")
    return inv


def dp_power(p: BiPoly, r: int) -> BiPoly:
    """``r``-fold DP product of ``p`` with itself; ``r = 0`` gives the identity."""
    n = _require_square(p, "power")
    if r < 0:
        raise ValueError("negative powers are not supported; use dp_inverse")
    result = identity_poly(n)
    base = p
    while r:
        if r & 1:
            result = dp_product(result, base)
        r >>= 1
        if r:
            base = dp_product(base, base)
    return result


@dataclass(frozen=True)
class ClassificationReport:
    symmetric: bool
    skew_symmetric: bool
    orthogonal: bool
    invertible: bool
    involuntary: bool
    idempotent: bool
    nilpotent_index: Optional[int]
    periodic_index: Optional[int]

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def classify(p: BiPoly, max_period: int = 16) -> ClassificationReport:
    """Evaluate the structural predicates of a square polynomial.

    Nilpotency is searched up to the dimension (no nilpotent matrix of size
    n needs a higher power); periodicity up to ``max_period``.
    """
    n = _require_square(p, "classification")
    if max_period < 1:
        raise ValueError("max_period must be positive")
    eye = identity_poly(n)
    pt = transpose(p)
    square = dp_product(p, p)

    nilpotent_index = None
    power = p
    for r in range(1, n + 1):
        if power.is_zero():
            nilpotent_index = r
            break
        power = dp_product(power, p)

    periodic_index = None
    power = square
    for r in range(1, max_period + 1):
        if power == p:
            periodic_index = r
            break
        power = dp_product(power, p)

    return ClassificationReport(
        symmetric=is_symmetric(p),
        skew_symmetric=is_skew_symmetric(p),
        orthogonal=dp_product(p, pt) == eye and dp_product(pt, p) == eye,
        invertible=is_invertible(p),
        involuntary=square == eye,
        idempotent=square == p,
        nilpotent_index=nilpotent_index,
        periodic_index=periodic_index,
    )


def char_poly_of(p: BiPoly) -> CharPolyCoeffs:
    _require_square(p, "characteristic polynomial")
    return char_poly(to_matrix(p))


def cayley_hamilton_residual(p: BiPoly) -> BiPoly:
    """``sum_k c_k P^k`` over the characteristic coefficients; always zero."""
    n = _require_square(p, "Cayley-Hamilton residual")
    coeffs = char_poly_of(p).coeffs
    residual = BiPoly.zero(n, n)
    power = identity_poly(n)
    for k, c in enumerate(coeffs):
        if k:
            power = dp_product(power, p)
        if c:
            residual = residual + scale(c, power)
    return residual


@dataclass(frozen=True)
class EigenPair:
    value: Fraction
    eigen_poly: BiPoly


def _column_poly(values) -> BiPoly:
    return BiPoly([[c] for c in interpolate_nodes(values)])


def eigen_pairs(p: BiPoly) -> list[EigenPair]:
    """Rational eigenvalues with a basis of eigen-polynomials for each.

    Eigen-polynomials have shape ``(n, 1)`` and are scaled so that their
    first nonzero value at ``x = 1, 2, ...`` equals 1.  Irrational
    eigenvalues are skipped.
    """
    n = _require_square(p, "eigen decomposition")
    a = to_matrix(p)
    eye = Matrix.identity(n)
    pairs = []
    for value, _ in rational_roots(char_poly(a)):
        for vec in null_space(a - eye * value):
            samples = vec.flatten()
            lead = next(v for v in samples if v != 0)
            x = _column_poly([v / lead for v in samples])
            if not verify_eigenpair(p, value, x):
                raise ArithmeticError(f"eigen-polynomial for {value} failed verification")
            pairs.append(EigenPair(value, x))
    return pairs


def verify_eigenpair(p: BiPoly, value, x_poly: BiPoly) -> bool:
    n = _require_square(p, "eigenpair check")
    if x_poly.shape != (n, 1):
        raise ShapeError(f"eigen-polynomial must have shape ({n}, 1), got {tuple(x_poly.shape)}")
    if x_poly.is_zero():
        return False
    return dp_product(p, x_poly) == scale(value, x_poly)
