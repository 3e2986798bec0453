"""Matrix CSV and polynomial JSON files."""

from __future__ import annotations

import json
from pathlib import Path

from .bipoly import BiPoly, from_json, to_json
from .errors import ParseError, ShapeError
from .scalar import Matrix, format_rat, parse_rat


def parse_matrix_csv(text: str) -> Matrix:
    """Comma-separated rows of integers, ``p/q`` fractions or finite decimals.

    Blank lines are ignored; every other line must have the same number of
    fields.
    """
    rows = []
    width = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        row = []
        col = 1
        for field in line.split(","):
            try:
                row.append(parse_rat(field))
            except ParseError:
                raise ParseError(f"bad matrix entry {field.strip()!r}", line=lineno, column=col) from None
            col += len(field) + 1
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError(f"expected {width} entries, found {len(row)}", line=lineno, column=1)
        rows.append(row)
    if not rows:
        raise ParseError("matrix file is empty", line=1, column=1)
    return Matrix(rows)


def format_matrix_csv(a: Matrix) -> str:
    return "".join(",".join(format_rat(v) for v in row) + "\n" for row in a.rows)


def read_matrix(path) -> Matrix:
    return parse_matrix_csv(Path(path).read_text())


def parse_poly_json(text: str) -> BiPoly:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno, column=exc.colno) from None
    try:
        return from_json(obj)
    except ShapeError as exc:
        raise ParseError(str(exc)) from None


def dump_poly_json(p: BiPoly) -> str:
    return json.dumps(to_json(p))


def read_poly(path) -> BiPoly:
    return parse_poly_json(Path(path).read_text())


def write_poly(path, p: BiPoly):
    Path(path).write_text(dump_poly_json(p) + "\n")
