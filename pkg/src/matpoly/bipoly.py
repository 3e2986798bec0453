"""Dense bivariate polynomials with a declared tensor-product shape.

A :class:`BiPoly` of shape ``(m, n)`` stores the coefficient grid
``coeffs[k1][k2]`` multiplying ``x**k1 * y**k2`` for ``k1 < m`` and
``k2 < n``.  The declared shape plays the role of matrix dimensions: it is
what addition and the DP product check, not the minimal degree.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple

from .errors import ParseError, ShapeError
from .scalar import as_rat, format_rat


class Shape(NamedTuple):
    m: int
    n: int

    @classmethod
    def of(cls, shape) -> "Shape":
        m, n = shape
        if not (isinstance(m, int) and isinstance(n, int)) or m < 1 or n < 1:
            raise ShapeError(f"invalid shape {tuple(shape)!r}; both sides must be >= 1")
        return cls(m, n)


class BiPoly:
    """Element of the space of polynomials with x-degree < m and y-degree < n."""

    __slots__ = ("_coeffs", "_shape")

    def __init__(self, coeffs: Iterable[Iterable], shape=None):
        grid = [[as_rat(c) for c in row] for row in coeffs]
        if not grid or not grid[0]:
            raise ShapeError("coefficient grid must be non-empty")
        width = len(grid[0])
        if any(len(row) != width for row in grid):
            raise ShapeError("ragged coefficient grid")
        if shape is None:
            shape = (len(grid), width)
        shape = Shape.of(shape)
        self._coeffs = _fit(grid, shape)
        self._shape = shape

    @classmethod
    def _from_trusted(cls, grid, shape):
        obj = cls.__new__(cls)
        obj._coeffs = grid
        obj._shape = shape
        return obj

    @classmethod
    def zero(cls, m: int, n: int) -> "BiPoly":
        shape = Shape.of((m, n))
        return cls._from_trusted(tuple((Fraction(0),) * n for _ in range(m)), shape)

    @classmethod
    def constant(cls, value, shape=(1, 1)) -> "BiPoly":
        shape = Shape.of(shape)
        grid = [[Fraction(0)] * shape.n for _ in range(shape.m)]
        grid[0][0] = as_rat(value)
        return cls._from_trusted(tuple(map(tuple, grid)), shape)

    @property
    def shape(self) -> Shape:
        return self._shape

    @property
    def coeffs(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._coeffs

    def coeff(self, k1: int, k2: int) -> Fraction:
        """Coefficient of ``x**k1 * y**k2`` (zero outside the grid)."""
        if 0 <= k1 < self._shape.m and 0 <= k2 < self._shape.n:
            return self._coeffs[k1][k2]
        return Fraction(0)

    def flatten(self) -> list[Fraction]:
        """Coefficients with ``k1`` major and ``k2`` minor."""
        return [c for row in self._coeffs for c in row]

    def is_zero(self) -> bool:
        return all(c == 0 for row in self._coeffs for c in row)

    def minimal_shape(self) -> Shape:
        m = n = 1
        for k1, row in enumerate(self._coeffs):
            for k2, c in enumerate(row):
                if c:
                    m = max(m, k1 + 1)
                    n = max(n, k2 + 1)
        return Shape(m, n)

    def reshape(self, shape) -> "BiPoly":
        return reshape(self, shape)

    def __call__(self, x, y) -> Fraction:
        return evaluate(self, x, y)

    def __add__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return add(self, other)

    def __neg__(self):
        return scale(-1, self)

    def __sub__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return add(self, scale(-1, other))

    def __mul__(self, c):
        if isinstance(c, BiPoly):
            return NotImplemented
        return scale(c, self)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        from .dpalgebra import dp_product

        return dp_product(self, other)

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return poly_eq(self, other)

    def __hash__(self):
        m, n = self.minimal_shape()
        return hash(tuple(row[:n] for row in self._coeffs[:m]))

    def transpose(self) -> "BiPoly":
        return transpose(self)

    @property
    def T(self) -> "BiPoly":
        return transpose(self)

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"BiPoly({to_text(self)!r}, shape=({self._shape.m}, {self._shape.n}))"


def _fit(grid, shape: Shape):
    """Pad or crop ``grid`` to ``shape``; cropping must only drop zeros."""
    out = []
    for k1 in range(max(len(grid), shape.m)):
        row = grid[k1] if k1 < len(grid) else []
        if k1 >= shape.m:
            if any(row):
                raise ShapeError(f"x-degree {k1} exceeds declared shape {tuple(shape)}")
            continue
        if any(row[shape.n:]):
            raise ShapeError(f"y-degree exceeds declared shape {tuple(shape)}")
        row = list(row[: shape.n]) + [Fraction(0)] * (shape.n - len(row))
        out.append(tuple(row))
    return tuple(out)


def reshape(p: BiPoly, shape) -> BiPoly:
    """Re-declare ``p`` in another space; fails if coefficients would be lost."""
    shape = Shape.of(shape)
    return BiPoly._from_trusted(_fit(p.coeffs, shape), shape)


def evaluate(p: BiPoly, x, y) -> Fraction:
    """Exact value at ``(x, y)``: Horner in y for each row, then in x."""
    x, y = as_rat(x), as_rat(y)
    acc = Fraction(0)
    for row in reversed(p.coeffs):
        inner = Fraction(0)
        for c in reversed(row):
            inner = inner * y + c
        acc = acc * x + inner
    return acc


def add(p: BiPoly, q: BiPoly) -> BiPoly:
    if p.shape != q.shape:
        raise ShapeError(
            f"cannot add polynomials declared in shapes {tuple(p.shape)} and {tuple(q.shape)}"
        )
    return BiPoly._from_trusted(
        tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(p.coeffs, q.coeffs)),
        p.shape,
    )


def scale(c, p: BiPoly) -> BiPoly:
    c = as_rat(c)
    return BiPoly._from_trusted(tuple(tuple(c * a for a in row) for row in p.coeffs), p.shape)


def poly_eq(p: BiPoly, q: BiPoly) -> bool:
    """Equality as polynomials, ignoring declared shapes (zero padding)."""
    m = max(p.shape.m, q.shape.m)
    n = max(p.shape.n, q.shape.n)
    return all(p.coeff(i, j) == q.coeff(i, j) for i in range(m) for j in range(n))


def transpose(p: BiPoly) -> BiPoly:
    """``P(y, x)``, declared in the transposed shape."""
    return BiPoly._from_trusted(tuple(zip(*p.coeffs)), Shape(p.shape.n, p.shape.m))


def is_symmetric(p: BiPoly) -> bool:
    if p.shape.m != p.shape.n:
        return False
    grid = p.coeffs
    return all(grid[i][j] == grid[j][i] for i in range(p.shape.m) for j in range(i + 1, p.shape.n))


def is_skew_symmetric(p: BiPoly) -> bool:
    if p.shape.m != p.shape.n:
        return False
    grid = p.coeffs
    n = p.shape.m
    return all(grid[i][j] == -grid[j][i] for i in range(n) for j in range(i, n))


# -- text form --------------------------------------------------------------

def _monomial(k1: int, k2: int) -> str:
    parts = []
    if k1:
        parts.append("x" if k1 == 1 else f"x^{k1}")
    if k2:
        parts.append("y" if k2 == 1 else f"y^{k2}")
    return "*".join(parts)


def to_text(p: BiPoly) -> str:
    """Canonical text: descending total degree, ties by descending x-degree.

    >>> to_text(BiPoly([[5, -3], [-3, 2]]))
    '2*x*y - 3*x - 3*y + 5'
    """
    terms = []
    for k1, row in enumerate(p.coeffs):
        for k2, c in enumerate(row):
            if c:
                terms.append((k1 + k2, k1, k2, c))
    if not terms:
        return "0"
    terms.sort(key=lambda t: (-t[0], -t[1]))
    pieces = []
    for _, k1, k2, c in terms:
        mono = _monomial(k1, k2)
        mag = abs(c)
        if not mono:
            body = format_rat(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_rat(mag)}*{mono}"
        pieces.append(("-" if c < 0 else "+", body))
    sign, body = pieces[0]
    text = "-" + body if sign == "-" else body
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, char: str) -> bool:
        if self.peek() == char:
            self.pos += 1
            return True
        return False

    def digits(self) -> str:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return self.text[start:self.pos]

    def error(self, message: str):
        raise ParseError(message, position=self.pos)


def _read_coeff(sc: _Scanner):
    start = sc.pos
    whole = sc.digits()
    if sc.take("."):
        frac = sc.digits()
        if not whole and not frac:
            sc.error("malformed decimal")
        return Fraction(int((whole or "0") + frac), 10 ** len(frac))
    if not whole:
        sc.pos = start
        return None
    if sc.take("/"):
        den = sc.digits()
        if not den:
            sc.error("expected denominator after '/'")
        if int(den) == 0:
            sc.error("zero denominator")
        return Fraction(int(whole), int(den))
    return Fraction(int(whole))


def _read_power(sc: _Scanner) -> int:
    if sc.take("^"):
        exp = sc.digits()
        if not exp:
            sc.error("expected integer exponent after '^'")
        return int(exp)
    return 1


def _read_term(sc: _Scanner):
    coeff = _read_coeff(sc)
    k1 = k2 = 0
    seen_var = False
    if coeff is not None:
        if sc.peek() == "*":
            sc.pos += 1
            if sc.peek() not in ("x", "y"):
                sc.error("expected 'x' or 'y' after '*'")
    if sc.take("x"):
        k1 = _read_power(sc)
        seen_var = True
        if sc.peek() == "*":
            sc.pos += 1
            if sc.peek() != "y":
                sc.error("expected 'y' after '*'")
    if sc.take("y"):
        k2 = _read_power(sc)
        seen_var = True
    if coeff is None and not seen_var:
        sc.error("expected a term")
    return (Fraction(1) if coeff is None else coeff), k1, k2


def parse(text: str, shape=None) -> BiPoly:
    """Parse polynomial text such as ``"2*x*y - 3*x - 3*y + 5"``.

    Without ``shape`` the minimal shape holding every term is used.  A term
    whose degree does not fit a given shape raises :class:`ShapeError`.
    """
    sc = _Scanner(text.replace("−", "-"))
    terms: dict[tuple[int, int], Fraction] = {}
    first = True
    while True:
        sign = 1
        if sc.take("-"):
            sign = -1
        elif sc.take("+"):
            pass
        elif not first:
            sc.error("expected '+' or '-' between terms")
        coeff, k1, k2 = _read_term(sc)
        terms[k1, k2] = terms.get((k1, k2), Fraction(0)) + sign * coeff
        first = False
        if sc.peek() == "":
            break
        if sc.peek() not in "+-":
            sc.error(f"unexpected character {sc.peek()!r}")
    m = 1 + max(k1 for k1, _ in terms)
    n = 1 + max(k2 for _, k2 in terms)
    grid = [[Fraction(0)] * n for _ in range(m)]
    for (k1, k2), c in terms.items():
        grid[k1][k2] = c
    if shape is None:
        poly = BiPoly(grid)
        return reshape(poly, poly.minimal_shape())
    shape = Shape.of(shape)
    if m > shape.m or n > shape.n:
        # only complain about terms that are actually nonzero
        live = [(k1, k2) for (k1, k2), c in terms.items() if c]
        if any(k1 >= shape.m or k2 >= shape.n for k1, k2 in live):
            raise ShapeError(f"polynomial {text!r} does not fit shape {tuple(shape)}")
    return reshape(BiPoly(grid), shape)


# -- JSON form --------------------------------------------------------------

def to_json(p: BiPoly) -> dict:
    return {
        "m": p.shape.m,
        "n": p.shape.n,
        "coeffs": [[format_rat(c) for c in row] for row in p.coeffs],
    }


def from_json(obj) -> BiPoly:
    try:
        m, n, coeffs = obj["m"], obj["n"], obj["coeffs"]
    except (KeyError, TypeError):
        raise ParseError("polynomial JSON needs keys 'm', 'n' and 'coeffs'") from None
    if not isinstance(m, int) or not isinstance(n, int):
        raise ParseError("'m' and 'n' must be integers")
    if not isinstance(coeffs, list) or len(coeffs) != m:
        raise ParseError(f"'coeffs' must be a list of {m} rows")
    grid = []
    for k1, row in enumerate(coeffs):
        if not isinstance(row, list) or len(row) != n:
            raise ParseError(f"coefficient row {k1} must have {n} entries")
        grid.append([as_rat(str(c)) for c in row])
    return BiPoly(grid, shape=(m, n))
