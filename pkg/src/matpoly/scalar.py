"""Exact rational scalars and dense rational matrices.

Everything here works over :class:`fractions.Fraction`, so every identity the
polynomial side is checked against holds bit-for-bit.  The matrix routines
double as the oracle for the polynomial algebra.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ParseError, ShapeError, SingularMatrixError

Rat = Fraction

_RAT_RE = re.compile(
    r"""
    \s*
    (?P<sign>[-+−]?)
    (?:
        (?P<num>\d+)\s*/\s*(?P<den>\d+)          # p/q
      | (?P<int>\d+)(?:\.(?P<frac>\d*))?         # 12, 12., 12.5
      | \.(?P<frac_only>\d+)                     # .5
    )
    \s*\Z
    """,
    re.VERBOSE,
)


def parse_rat(text: str) -> Fraction:
    """Parse an integer, ``p/q`` fraction or finite decimal literal exactly.

    >>> parse_rat("3.25")
    Fraction(13, 4)
    >>> parse_rat("-7/14")
    Fraction(-1, 2)
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    match = _RAT_RE.match(text)
    if match is None:
        raise ParseError(f"not a rational literal: {text!r}")
    negative = match["sign"] in ("-", "−")
    if match["num"] is not None:
        den = int(match["den"])
        if den == 0:
            raise ParseError(f"zero denominator in {text!r}")
        value = Fraction(int(match["num"]), den)
    elif match["int"] is not None:
        digits = match["frac"] or ""
        value = Fraction(int(match["int"] + digits), 10 ** len(digits))
    else:
        digits = match["frac_only"]
        value = Fraction(int(digits), 10 ** len(digits))
    return -value if negative else value


def format_rat(value: Fraction) -> str:
    """Canonical text of a rational: ``"-3"`` or ``"7/2"``."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def as_rat(value) -> Fraction:
    """Coerce ints, Fractions and literal strings to a Fraction.

    Floats are rejected: they would silently smuggle rounding error into
    exact computations.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rat(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


class Matrix:
    """Immutable dense matrix of Fractions.

    Indexing is zero-based: ``a[i, j]``.  Entries are stored row-major as a
    tuple of row tuples.
    """

    __slots__ = ("_rows", "_hash")

    def __init__(self, rows: Iterable[Iterable]):
        grid = tuple(tuple(as_rat(v) for v in row) for row in rows)
        if not grid or not grid[0]:
            raise ShapeError("a matrix needs at least one row and one column")
        width = len(grid[0])
        if any(len(row) != width for row in grid):
            raise ShapeError("ragged rows")
        self._rows = grid
        self._hash = None

    @classmethod
    def _from_trusted(cls, grid):
        obj = cls.__new__(cls)
        obj._rows = grid
        obj._hash = None
        return obj

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        one, zero = Fraction(1), Fraction(0)
        return cls._from_trusted(
            tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))
        )

    @classmethod
    def zeros(cls, m: int, n: int) -> "Matrix":
        if m < 1 or n < 1:
            raise ShapeError(f"invalid matrix shape ({m}, {n})")
        zero = Fraction(0)
        return cls._from_trusted(tuple((zero,) * n for _ in range(m)))

    @classmethod
    def column(cls, values: Iterable) -> "Matrix":
        return cls([v] for v in values)

    @property
    def nrows(self) -> int:
        return len(self._rows)

    @property
    def ncols(self) -> int:
        return len(self._rows[0])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self._rows), len(self._rows[0])

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def __getitem__(self, index):
        i, j = index
        return self._rows[i][j]

    def flatten(self) -> list[Fraction]:
        return [v for row in self._rows for v in row]

    def tolist(self) -> list[list[Fraction]]:
        return [list(row) for row in self._rows]

    def transpose(self) -> "Matrix":
        return Matrix._from_trusted(tuple(zip(*self._rows)))

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def trace(self) -> Fraction:
        if not self.is_square():
            raise ShapeError("trace of a non-square matrix")
        return sum((self._rows[i][i] for i in range(self.nrows)), Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._rows)
        return self._hash

    def __add__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape} matrices")
        return Matrix._from_trusted(
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self._rows, other._rows)
            )
        )

    def __neg__(self) -> "Matrix":
        return Matrix._from_trusted(tuple(tuple(-a for a in row) for row in self._rows))

    def __sub__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar) -> "Matrix":
        if isinstance(scalar, Matrix):
            return NotImplemented
        c = as_rat(scalar)
        return Matrix._from_trusted(tuple(tuple(c * a for a in row) for row in self._rows))

    __rmul__ = __mul__

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        return mat_mul(self, other)

    def __repr__(self):
        body = "; ".join(" ".join(format_rat(v) for v in row) for row in self._rows)
        return f"Matrix([{body}])"


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a.ncols != b.nrows:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    b_cols = tuple(zip(*b.rows))
    return Matrix._from_trusted(
        tuple(
            tuple(sum(map(Fraction.__mul__, row, col), Fraction(0)) for col in b_cols)
            for row in a.rows
        )
    )


def _require_square(a: Matrix, what: str):
    if not a.is_square():
        raise ShapeError(f"{what} needs a square matrix, got {a.shape}")


def mat_inverse(a: Matrix) -> Matrix:
    """Exact inverse by Gauss-Jordan elimination on ``[a | I]``.

    Raises :class:`SingularMatrixError` carrying the column in which no
    pivot could be found.
    """
    _require_square(a, "inverse")
    n = a.nrows
    one, zero = Fraction(1), Fraction(0)
    work = [
        list(row) + [one if i == j else zero for j in range(n)]
        for i, row in enumerate(a.rows)
    ]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrixError(f"matrix is singular (no pivot in column {col})", column=col)
        work[col], work[pivot] = work[pivot], work[col]
        prow = work[col]
        inv = 1 / prow[col]
        prow = work[col] = [v * inv for v in prow]
        for r in range(n):
            if r == col:
                continue
            factor = work[r][col]
            if factor:
                row = work[r]
                work[r] = [x - factor * y for x, y in zip(row, prow)]
    return Matrix._from_trusted(tuple(tuple(row[n:]) for row in work))


def det(a: Matrix) -> Fraction:
    """Determinant by Gaussian elimination."""
    _require_square(a, "determinant")
    n = a.nrows
    work = [list(row) for row in a.rows]
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            result = -result
        prow = work[col]
        p = prow[col]
        result *= p
        for r in range(col + 1, n):
            factor = work[r][col]
            if factor:
                factor /= p
                row = work[r]
                for c in range(col + 1, n):
                    row[c] -= factor * prow[c]
    return result


def solve(a: Matrix, rhs: Sequence) -> list[Fraction]:
    """Solve ``a x = rhs`` exactly for square nonsingular ``a``."""
    _require_square(a, "solve")
    n = a.nrows
    if len(rhs) != n:
        raise ShapeError(f"right-hand side has length {len(rhs)}, expected {n}")
    work = [list(row) + [as_rat(b)] for row, b in zip(a.rows, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrixError(f"matrix is singular (no pivot in column {col})", column=col)
        work[col], work[pivot] = work[pivot], work[col]
        prow = work[col]
        p = prow[col]
        for r in range(col + 1, n):
            factor = work[r][col]
            if factor:
                factor /= p
                row = work[r]
                for c in range(col + 1, n + 1):
                    row[c] -= factor * prow[c]
    x = [Fraction(0)] * n
    for r in range(n - 1, -1, -1):
        row = work[r]
        acc = row[n]
        for c in range(r + 1, n):
            acc -= row[c] * x[c]
        x[r] = acc / row[r]
    return x


def rref(a: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form with unit pivots, plus the pivot columns."""
    work = [list(row) for row in a.rows]
    m, n = a.shape
    pivots = []
    r = 0
    for col in range(n):
        if r == m:
            break
        pivot = next((i for i in range(r, m) if work[i][col] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = 1 / work[r][col]
        prow = work[r] = [v * inv for v in work[r]]
        for i in range(m):
            if i != r and work[i][col]:
                factor = work[i][col]
                work[i] = [x - factor * y for x, y in zip(work[i], prow)]
        pivots.append(col)
        r += 1
    return work, pivots


def null_space(a: Matrix) -> list[Matrix]:
    """Basis of the kernel as column vectors.

    Each free variable (in increasing column order) is set to 1 with the
    others 0; full-rank input yields an empty list.
    """
    reduced, pivots = rref(a)
    n = a.ncols
    pivot_set = set(pivots)
    basis = []
    for free in range(n):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * n
        vec[free] = Fraction(1)
        for row, pcol in enumerate(pivots):
            vec[pcol] = -reduced[row][free]
        basis.append(Matrix.column(vec))
    return basis


@dataclass(frozen=True)
class CharPolyCoeffs:
    """Monic ``lambda^n + c_{n-1} lambda^{n-1} + ... + c_0``.

    ``coeffs`` is ascending: ``coeffs[k]`` multiplies ``lambda**k``.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs or self.coeffs[-1] != 1:
            raise ValueError("characteristic polynomial must be monic")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, value) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def at_matrix(self, a: Matrix) -> Matrix:
        """Horner evaluation with a matrix argument."""
        _require_square(a, "matrix polynomial evaluation")
        eye = Matrix.identity(a.nrows)
        acc = Matrix.zeros(*a.shape)
        for c in reversed(self.coeffs):
            acc = acc @ a + eye * c
        return acc

    def __str__(self):
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            power = "" if k == 0 else ("lambda" if k == 1 else f"lambda^{k}")
            if not power:
                body = format_rat(mag)
            elif mag == 1:
                body = power
            else:
                body = f"{format_rat(mag)}*{power}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def char_poly(a: Matrix) -> CharPolyCoeffs:
    """Characteristic polynomial ``det(lambda I - a)`` by Faddeev-LeVerrier."""
    _require_square(a, "characteristic polynomial")
    n = a.nrows
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    eye = Matrix.identity(n)
    m_k = Matrix.zeros(n, n)
    for k in range(1, n + 1):
        m_k = a @ m_k + eye * coeffs[n - k + 1]
        coeffs[n - k] = -(a @ m_k).trace() / k
    return CharPolyCoeffs(tuple(coeffs))


# -- rational roots ---------------------------------------------------------

def _trim(p: list[Fraction]) -> list[Fraction]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_eval(p: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _poly_divmod(num: Sequence[Fraction], den: Sequence[Fraction]):
    num = list(num)
    quot = [Fraction(0)] * max(1, len(num) - len(den) + 1)
    lead = den[-1]
    for shift in range(len(num) - len(den), -1, -1):
        factor = num[shift + len(den) - 1] / lead
        quot[shift] = factor
        if factor:
            for i, d in enumerate(den):
                num[shift + i] -= factor * d
    rem = _trim(num[: len(den) - 1] or [Fraction(0)])
    return _trim(quot), rem


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _trim(list(a)), _trim(list(b))
    while not (len(b) == 1 and b[0] == 0):
        _, r = _poly_divmod(a, b)
        a, b = b, r
    lead = a[-1]
    return [c / lead for c in a]


def _integer_coeffs(p: Sequence[Fraction]) -> list[int]:
    lcm = 1
    for c in p:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in p]
    content = 0
    for v in ints:
        content = math.gcd(content, v)
    return [v // content for v in ints] if content > 1 else ints


def _approximate_real_roots(squarefree: list[Fraction]) -> list:
    """Numerical roots of a square-free polynomial, used only as candidates."""
    import mpmath

    ints = _integer_coeffs(squarefree)
    digits = max(len(str(abs(v))) for v in ints)
    degree = len(ints) - 1
    with mpmath.workdps(max(50, 3 * digits + 2 * degree)):
        coeffs = [mpmath.mpf(v) for v in reversed(ints)]
        for attempt in range(4):
            try:
                roots = mpmath.polyroots(
                    coeffs, maxsteps=200 * (attempt + 1), extraprec=60 * (attempt + 1) + 4 * digits
                )
                break
            except mpmath.libmp.NoConvergence:
                continue
        else:
            raise ArithmeticError("root approximation failed to converge")
        tol = mpmath.mpf(10) ** (-(mpmath.mp.dps // 3))
        return [
            Fraction(str(mpmath.re(r)))
            for r in roots
            if abs(mpmath.im(r)) <= tol * max(1, abs(r))
        ]


def rational_roots(p) -> list[tuple[Fraction, int]]:
    """All rational roots of a polynomial with their multiplicities.

    ``p`` is a :class:`CharPolyCoeffs` or an ascending coefficient sequence.
    Denominators are cleared so that any root ``u/v`` in lowest terms has
    ``u`` dividing the constant term and ``v`` dividing the leading
    coefficient.  Candidates come from high-precision approximations of the
    square-free part, snapped to the nearest fraction whose denominator
    divides the leading coefficient, and every reported root is confirmed by
    exact evaluation.  Irrational roots are not returned.
    """
    coeffs = list(p.coeffs if isinstance(p, CharPolyCoeffs) else map(as_rat, p))
    coeffs = _trim(coeffs)
    if len(coeffs) == 1:
        return []
    found: list[tuple[Fraction, int]] = []
    zero_mult = 0
    while coeffs[0] == 0:
        coeffs.pop(0)
        zero_mult += 1
    if zero_mult:
        found.append((Fraction(0), zero_mult))
    if len(coeffs) == 1:
        return found

    ints = _integer_coeffs(coeffs)
    constant, leading = abs(ints[0]), abs(ints[-1])
    derivative = [k * c for k, c in enumerate(coeffs)][1:]
    squarefree, _ = _poly_divmod(coeffs, _poly_gcd(coeffs, derivative))

    candidates = set()
    if len(squarefree) == 2:
        candidates.add(-squarefree[0] / squarefree[1])
    else:
        for approx in _approximate_real_roots(squarefree):
            snapped = approx.limit_denominator(leading)
            candidates.add(snapped)
    remaining = coeffs
    for cand in sorted(candidates):
        if cand == 0 or constant % abs(cand.numerator) or leading % cand.denominator:
            continue
        mult = 0
        while len(remaining) > 1 and _poly_eval(remaining, cand) == 0:
            remaining, _ = _poly_divmod(remaining, [-cand, Fraction(1)])
            mult += 1
        if mult:
            found.append((cand, mult))
    found.sort(key=lambda pair: pair[0])
    return found
