"""Exception types shared across the package."""

from __future__ import annotations


class ShapeError(ValueError):
    """Raised for dimension mismatches or inputs that are not symmetric."""


class NumericError(RuntimeError):
    """Raised when a matrix decomposition fails to converge."""


class SandwichError(ValueError):
    """Raised when two spectra overlap so no sandwich ordering exists.

    ``overlap`` carries the interval shared by the two spectral ranges.
    """

    def __init__(self, message: str, overlap: tuple[float, float]):
        super().__init__(message)
        self.overlap = overlap


class MatrixFileError(ValueError):
    """Raised for unreadable matrix files; names the path and line."""

    def __init__(self, path: str, line: int, reason: str):
        super().__init__(f"{path}:{line}: {reason}")
        self.path = path
        self.line = line
        self.reason = reason
