"""Exception types shared across the package."""


class MatpolyError(Exception):
    """Base class for all errors raised by matpoly."""


class ShapeError(MatpolyError, ValueError):
    """Operands have incompatible or invalid dimensions."""


class SingularMatrixError(MatpolyError, ArithmeticError):
    """Raised when inverting a matrix (or polynomial) that has no inverse.

    ``column`` is the zero-based column where elimination found no pivot.
    """

    def __init__(self, message, column=None):
        super().__init__(message)
        self.column = column


class ParseError(MatpolyError, ValueError):
    """Malformed literal, polynomial text or matrix file.

    ``position`` is a zero-based character offset for single-line input;
    ``line``/``column`` are one-based and used for file input.
    """

    def __init__(self, message, position=None, line=None, column=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        if position is not None:
            where.append(f"position {position}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)
        self.position = position
        self.line = line
        self.column = column
