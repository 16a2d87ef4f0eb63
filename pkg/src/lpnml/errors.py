"""Exception types shared across the package.

Built-in exceptions are reused where Python already has the right one:
``ZeroDivisionError`` for degenerate metric denominators and ``OSError``
for file-system failures.
"""


class LpnmlError(Exception):
    """Base class for all package-specific errors."""


class DimensionMismatchError(LpnmlError, ValueError):
    """Raised when array shapes are inconsistent or entries are not finite."""


class SingularMatrixError(LpnmlError):
    """Raised when an unregularized fit requires inverting a rank-deficient
    Gram matrix (smallest eigenvalue below the rank threshold)."""


class NumericalFailureError(LpnmlError):
    """Raised when a dense factorization fails to converge or the computed
    inverse does not reproduce the identity within tolerance."""


class InsufficientDataError(LpnmlError, ValueError):
    """Raised when an operation needs more samples than provided."""


class EmptySideError(LpnmlError, ValueError):
    """Raised when a threshold split leaves no rows on one side."""


class MissingLabelColumnError(LpnmlError, ValueError):
    """Raised when the requested label column is absent from a CSV file."""


class ParseError(LpnmlError, ValueError):
    """Raised for a malformed CSV cell; carries 1-based row/column indices."""

    def __init__(self, row, column, message):
        super().__init__(f"row {row}, column {column}: {message}")
        self.row = row
        self.column = column
