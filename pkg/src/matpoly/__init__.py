"""Exact interpolating polynomials of matrices and the DP-product algebra.

A matrix ``A`` of shape ``(m, n)`` corresponds to the unique polynomial
with x-degree below ``m`` and y-degree below ``n`` that takes the value
``A[i-1][j-1]`` at every integer node ``(i, j)``.  Matrix products become
DP products of polynomials, so the whole matrix algebra can be carried out
on the polynomial side.
"""

from .bipoly import (
    BiPoly,
    Shape,
    add,
    evaluate,
    from_json,
    is_skew_symmetric,
    is_symmetric,
    parse,
    poly_eq,
    reshape,
    scale,
    to_json,
    to_text,
    transpose,
)
from .dpalgebra import (
    ClassificationReport,
    EigenPair,
    cayley_hamilton_residual,
    char_poly_of,
    classify,
    dp_inverse,
    dp_power,
    dp_product,
    eigen_pairs,
    identity_poly,
    is_invertible,
    verify_eigenpair,
)
from .errors import MatpolyError, ParseError, ShapeError, SingularMatrixError
from .interp import (
    ConstructionMethod,
    backward_difference_table,
    construct,
    construct_all,
    forward_difference_table,
    lagrange_basis,
    to_matrix,
)
from .isomap import (
    check_linearity,
    check_product_structure,
    check_ring_axioms,
    coordinate_matrix,
    sampling_matrix,
)
from .scalar import (
    CharPolyCoeffs,
    Matrix,
    Rat,
    char_poly,
    det,
    format_rat,
    mat_inverse,
    mat_mul,
    null_space,
    parse_rat,
    rational_roots,
)
from .surface import SurfaceGrid, sample_surface

__version__ = "0.1.0"
