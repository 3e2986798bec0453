"""Small helpers for univariate polynomials as ascending Fraction lists."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def padd(p: Sequence[Fraction], q: Sequence[Fraction]) -> list[Fraction]:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return out


def pscale(c: Fraction, p: Sequence[Fraction]) -> list[Fraction]:
    return [c * v for v in p]


def pmul(p: Sequence[Fraction], q: Sequence[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def mul_linear(p: Sequence[Fraction], root: Fraction) -> list[Fraction]:
    """``p(x) * (x - root)``."""
    out = [Fraction(0)] * (len(p) + 1)
    for i, a in enumerate(p):
        out[i + 1] += a
        out[i] -= root * a
    return out


def peval(p: Sequence[Fraction], x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def pad(p: Sequence[Fraction], length: int) -> list[Fraction]:
    if len(p) > length:
        raise ValueError(f"polynomial of length {len(p)} does not fit in {length}")
    return list(p) + [Fraction(0)] * (length - len(p))


def lagrange_basis(m: int, k: int) -> list[Fraction]:
    """Coefficients of the degree ``m-1`` cardinal polynomial for node ``k``.

    Nodes are the integers ``1..m``; the result is 1 at ``k`` and 0 at the
    other nodes.
    """
    if m < 1:
        raise ValueError("need at least one node")
    if not 1 <= k <= m:
        raise IndexError(f"node index {k} outside 1..{m}")
    poly = [Fraction(1)]
    denom = 1
    for alpha in range(1, m + 1):
        if alpha != k:
            poly = mul_linear(poly, Fraction(alpha))
            denom *= k - alpha
    return [c / denom for c in poly]


def interpolate_nodes(values: Sequence[Fraction]) -> list[Fraction]:
    """Polynomial of degree < len(values) taking ``values[i-1]`` at ``x = i``."""
    m = len(values)
    out = [Fraction(0)] * m
    for k, v in enumerate(values, start=1):
        if v:
            for i, c in enumerate(lagrange_basis(m, k)):
                out[i] += v * c
    return out
