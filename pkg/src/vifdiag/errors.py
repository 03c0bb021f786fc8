"""Exception types shared across the package.

Every error raised by the library derives from :class:`VifdiagError`, so
front ends can catch one type and map it to an exit code or HTTP status.
"""

from __future__ import annotations


class VifdiagError(Exception):
    """Base class for all errors raised by this package."""


class RankDeficient(VifdiagError):
    """A QR pivot fell at or below the rank tolerance."""

    def __init__(self, column: int, message: str | None = None):
        self.column = int(column)
        super().__init__(message or f"rank deficient at column {self.column}")


class SingularTriangular(VifdiagError):
    """A triangular solve hit an exactly zero diagonal entry."""

    def __init__(self, index: int):
        self.index = int(index)
        super().__init__(f"zero diagonal at index {self.index}")


class NotPositiveDefinite(VifdiagError):
    """Cholesky factorization failed; the matrix is not positive definite."""

    def __init__(self, pivot: int):
        self.pivot = int(pivot)
        super().__init__(f"nonpositive pivot at index {self.pivot}")


class ExactCollinearity(VifdiagError):
    """Design columns are exactly (or numerically exactly) linearly dependent."""

    def __init__(self, message: str, column_name: str | None = None):
        self.column_name = column_name
        super().__init__(message)


class InsufficientData(VifdiagError):
    """Too few observations: the model needs n > k for a residual df."""


class PerfectFit(VifdiagError):
    """Residuals are numerically zero, so sigma vanishes and every
    t-statistic and threshold is undefined."""


class UndefinedForIntercept(VifdiagError):
    """The requested quantity has no definition for the intercept column."""


class ZeroTStatistic(VifdiagError):
    """A bound that divides by the t-statistic was requested at t = 0."""


class ZeroOrthonormalCoefficient(VifdiagError):
    """A bound that divides by the orthonormal coefficient was requested
    where that coefficient is numerically zero."""


class UnknownDataset(VifdiagError):
    """No builtin dataset with the requested name."""

    def __init__(self, name: str, known: tuple[str, ...] = ()):
        self.name = name
        hint = f"; known datasets: {', '.join(known)}" if known else ""
        super().__init__(f"unknown dataset {name!r}{hint}")


class ParseError(VifdiagError):
    """Structurally malformed CSV input (1-based line/column, header is line 1)."""

    def __init__(self, line: int, column: int, message: str):
        self.line = int(line)
        self.column = int(column)
        super().__init__(f"line {self.line}, column {self.column}: {message}")


class MissingColumn(VifdiagError):
    """A named column is absent from the table."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"column {name!r} not found")


class NonNumericCell(VifdiagError):
    """A data cell failed to parse as a finite number."""

    def __init__(self, line: int, column: int, cell: str = ""):
        self.line = int(line)
        self.column = int(column)
        self.cell = cell
        shown = f" ({cell!r})" if cell else ""
        super().__init__(
            f"line {self.line}, column {self.column}: not a finite number{shown}"
        )


class TooFewRows(VifdiagError):
    """The file contains no data rows."""
