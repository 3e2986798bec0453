"""The interpolation map between matrices and polynomials as a linear map.

Coordinates are taken with respect to the row-major matrix units
``E_11, E_12, ..., E_mn`` and the monomials ``x**k1 * y**k2``.  Two monomial
orders are available: ``"x-major"`` (k1 major: 1, y, x, xy for 2x2) and
``"y-major"`` (k2 major: 1, x, y, xy for 2x2), the latter being the usual
textbook layout.

The ``check_*`` functions are randomized, seeded verification suites that
return a :class:`VerificationReport` instead of raising.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .bipoly import BiPoly, Shape, add, scale
from .dpalgebra import dp_product, identity_poly
from .interp import construct, to_matrix
from .scalar import Matrix, format_rat

ORDERS = ("x-major", "y-major")


def monomial_order(m: int, n: int, order: str = "x-major") -> list[tuple[int, int]]:
    Shape.of((m, n))
    if order == "x-major":
        return [(k1, k2) for k1 in range(m) for k2 in range(n)]
    if order == "y-major":
        return [(k1, k2) for k2 in range(n) for k1 in range(m)]
    raise ValueError(f"unknown monomial order {order!r}; expected one of {ORDERS}")


def matrix_basis(m: int, n: int) -> list[Matrix]:
    """Matrix units in row-major order."""
    basis = []
    for i in range(m):
        for j in range(n):
            rows = [[0] * n for _ in range(m)]
            rows[i][j] = 1
            basis.append(Matrix(rows))
    return basis


def to_coordinates(p: BiPoly, order: str = "x-major") -> list[Fraction]:
    return [p.coeff(k1, k2) for k1, k2 in monomial_order(*p.shape, order)]


def from_coordinates(values, m: int, n: int, order: str = "x-major") -> BiPoly:
    grid = [[Fraction(0)] * n for _ in range(m)]
    for (k1, k2), v in zip(monomial_order(m, n, order), values, strict=True):
        grid[k1][k2] = Fraction(v)
    return BiPoly(grid)


def coordinate_matrix(m: int, n: int, order: str = "x-major") -> Matrix:
    """Matrix of the interpolation map (``mn x mn``).

    Column ``t`` holds the monomial coordinates of the interpolant of the
    ``t``-th matrix unit, so multiplying the row-major entries of ``A`` by
    this matrix gives the coordinates of ``construct(A)``.
    """
    columns = [to_coordinates(construct(e), order) for e in matrix_basis(m, n)]
    return Matrix(zip(*columns))


def sampling_matrix(m: int, n: int, order: str = "x-major") -> Matrix:
    """Matrix of the inverse map: row ``(i, j)`` evaluates each monomial at the node."""
    monomials = monomial_order(m, n, order)
    return Matrix(
        [Fraction(i**k1 * j**k2) for k1, k2 in monomials]
        for i in range(1, m + 1)
        for j in range(1, n + 1)
    )


# -- randomized verification -------------------------------------------------

def random_rational(rng: random.Random, bound: int = 20, max_den: int = 9) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, max_den))


def random_matrix(rng: random.Random, m: int, n: int, **kw) -> Matrix:
    return Matrix([random_rational(rng, **kw) for _ in range(n)] for _ in range(m))


def random_poly(rng: random.Random, m: int, n: int, **kw) -> BiPoly:
    return BiPoly([random_rational(rng, **kw) for _ in range(n)] for _ in range(m))


@dataclass
class VerificationReport:
    name: str
    seed: int
    trials: int
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, check: str, expected, actual, **inputs):
        self.failures.append(
            {
                "check": check,
                "inputs": {k: _render(v) for k, v in inputs.items()},
                "expected": _render(expected),
                "actual": _render(actual),
            }
        )

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "seed": self.seed,
            "trials": self.trials,
            "passed": self.passed,
            "failures": self.failures,
        }


def _render(value):
    if isinstance(value, Matrix):
        return [[format_rat(v) for v in row] for row in value.rows]
    if isinstance(value, BiPoly):
        return str(value)
    if isinstance(value, Fraction):
        return format_rat(value)
    return value


def check_linearity(trials: int = 500, max_m: int = 6, max_n: int = 6, seed: int = 0) -> VerificationReport:
    """``construct(c*A + B) == c*construct(A) + construct(B)`` and the round trip."""
    rng = random.Random(seed)
    report = VerificationReport("linearity", seed, trials)
    for _ in range(trials):
        m, n = rng.randint(1, max_m), rng.randint(1, max_n)
        a, b = random_matrix(rng, m, n), random_matrix(rng, m, n)
        alpha = rng.choice([Fraction(0), Fraction(1), random_rational(rng)])
        lhs = construct(a * alpha + b)
        rhs = add(scale(alpha, construct(a)), construct(b))
        if lhs != rhs or lhs.shape != rhs.shape:
            report.fail("linearity", rhs, lhs, a=a, b=b, alpha=alpha)
        back = to_matrix(construct(a))
        if back != a:
            report.fail("round-trip", a, back, a=a)
    return report


def check_product_structure(trials: int = 200, max_dim: int = 5, seed: int = 0) -> VerificationReport:
    """``construct(A @ B) == construct(A) (x) construct(B)`` on random chains,
    plus three-term combinations ``sum c_i A_i B_i``."""
    rng = random.Random(seed)
    report = VerificationReport("product-structure", seed, trials)
    for _ in range(trials):
        m, n, q = (rng.randint(1, max_dim) for _ in range(3))
        a, b = random_matrix(rng, m, n), random_matrix(rng, n, q)
        lhs = construct(a @ b)
        rhs = dp_product(construct(a), construct(b))
        if lhs != rhs or lhs.shape != rhs.shape:
            report.fail("homomorphism", lhs, rhs, a=a, b=b)

        total_matrix = Matrix.zeros(m, q)
        total_poly = BiPoly.zero(m, q)
        for _ in range(3):
            c = random_rational(rng)
            ai, bi = random_matrix(rng, m, n), random_matrix(rng, n, q)
            total_matrix = total_matrix + (ai @ bi) * c
            total_poly = add(total_poly, scale(c, dp_product(construct(ai), construct(bi))))
        lhs = construct(total_matrix)
        if lhs != total_poly:
            report.fail("linear-combination", lhs, total_poly, shape=[m, n, q])
    return report


def check_ring_axioms(trials: int = 200, max_n: int = 4, seed: int = 0) -> VerificationReport:
    """Ring-with-unity laws of ``(+, dp_product)`` on random square triples."""
    rng = random.Random(seed)
    report = VerificationReport("ring-axioms", seed, trials)
    for _ in range(trials):
        n = rng.randint(1, max_n)
        p, q, r = (random_poly(rng, n, n) for _ in range(3))
        zero = BiPoly.zero(n, n)
        eye = identity_poly(n)
        laws = {
            "add-commutative": (p + q, q + p),
            "add-associative": ((p + q) + r, p + (q + r)),
            "add-identity": (p + zero, p),
            "add-inverse": (p + (-p), zero),
            "mul-associative": (dp_product(dp_product(p, q), r), dp_product(p, dp_product(q, r))),
            "left-distributive": (dp_product(p, q + r), dp_product(p, q) + dp_product(p, r)),
            "right-distributive": (dp_product(p + q, r), dp_product(p, r) + dp_product(q, r)),
            "right-unity": (dp_product(p, eye), p),
            "left-unity": (dp_product(eye, p), p),
        }
        for law, (lhs, rhs) in laws.items():
            if lhs != rhs:
                report.fail(law, rhs, lhs, p=p, q=q, r=r)
    return report
