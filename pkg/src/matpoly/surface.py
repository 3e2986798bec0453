"""Rectangular sample grids of a polynomial, for external plotting."""

from __future__ import annotations

import csv
import decimal
import io
from dataclasses import dataclass
from fractions import Fraction

from .bipoly import BiPoly
from .scalar import as_rat, format_rat

DEFAULT_STEPS = 25
_DECIMAL = decimal.Context(prec=20)


@dataclass(frozen=True)
class SurfaceGrid:
    x_min: Fraction
    x_max: Fraction
    y_min: Fraction
    y_max: Fraction
    steps_x: int
    steps_y: int
    samples: tuple  # samples[a][b] == (x_a, y_b, P(x_a, y_b))

    def value_at(self, x, y) -> Fraction:
        """Exact sampled value at a grid point; KeyError if not on the grid."""
        x, y = as_rat(x), as_rat(y)
        for row in self.samples:
            if row[0][0] == x:
                for sx, sy, z in row:
                    if sy == y:
                        return z
        raise KeyError((x, y))

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["x", "y", "z", "z_decimal"])
        for row in self.samples:
            for x, y, z in row:
                writer.writerow([format_rat(x), format_rat(y), format_rat(z), to_decimal(z)])
        return buf.getvalue()


def to_decimal(value: Fraction) -> str:
    """Decimal rendering to 20 significant digits."""
    return str(_DECIMAL.divide(decimal.Decimal(value.numerator), decimal.Decimal(value.denominator)))


def _axis(lo: Fraction, hi: Fraction, steps: int) -> list[Fraction]:
    return [lo + (hi - lo) * k / (steps - 1) for k in range(steps)]


def sample_surface(p: BiPoly, x_range=None, y_range=None, steps=DEFAULT_STEPS) -> SurfaceGrid:
    """Evaluate ``p`` on an evenly spaced grid.

    Ranges default to the node box ``[1, m] x [1, n]``; ``steps`` is either
    one count for both axes or an ``(steps_x, steps_y)`` pair, each >= 2.
    """
    m, n = p.shape
    x_min, x_max = map(as_rat, x_range) if x_range else (Fraction(1), Fraction(m))
    y_min, y_max = map(as_rat, y_range) if y_range else (Fraction(1), Fraction(n))
    steps_x, steps_y = (steps, steps) if isinstance(steps, int) else steps
    if steps_x < 2 or steps_y < 2:
        raise ValueError("need at least 2 steps per axis")
    xs, ys = _axis(x_min, x_max, steps_x), _axis(y_min, y_max, steps_y)
    samples = tuple(tuple((x, y, p(x, y)) for y in ys) for x in xs)
    return SurfaceGrid(x_min, x_max, y_min, y_max, steps_x, steps_y, samples)
