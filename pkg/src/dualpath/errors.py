"""Exception types shared across the package."""


class DualPathError(Exception):
    """Base class for every error raised by this package."""


class PathError(DualPathError, ValueError):
    """A path, segment sequence or score matrix violates its invariants."""


class DimensionError(DualPathError, ValueError):
    """Lengths or shapes of related objects are inconsistent."""


class ParseError(DualPathError, ValueError):
    """A file record could not be parsed. Carries a 1-based line number when known."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class MonotonicityError(DualPathError, ValueError):
    """Write positions decrease somewhere and strict handling was requested."""


class ZeroDistanceError(DualPathError, ArithmeticError):
    """Gradient requested at zero distance, where the norm is not differentiable."""


class MetricUndefinedError(DualPathError, ValueError):
    """A metric's denominator is empty (e.g. no aligned target words)."""
