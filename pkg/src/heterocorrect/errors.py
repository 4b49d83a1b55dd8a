"""Exception hierarchy shared across the package.

Everything raised on purpose derives from :class:`HeterocorrectError`, so the
CLI can map domain failures to exit code 1 while genuine bugs still surface
as ordinary tracebacks.
"""


class HeterocorrectError(Exception):
    """Base class for all errors raised by this package."""


class ArgumentError(HeterocorrectError, ValueError):
    """A parameter is outside its admissible range."""


class ShapeError(HeterocorrectError, ValueError):
    """Matrix dimensions do not line up; the message names the axis."""


class AlignmentError(HeterocorrectError, ValueError):
    """Labels (locations or dates) disagree between two matrices."""


class DomainError(HeterocorrectError, ValueError):
    """A value is outside the mathematical domain of an operation."""


class ParseError(HeterocorrectError, ValueError):
    """A file does not conform to the expected schema."""


class FetchError(HeterocorrectError, RuntimeError):
    """A remote fetch failed and no cached payload was available."""


class NumericalError(HeterocorrectError, RuntimeError):
    """A numerical routine could not produce a reliable result."""
