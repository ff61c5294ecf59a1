class BecountError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(BecountError, ValueError):
    """Malformed edge-list, coloring or config input."""


class GraphError(BecountError, ValueError):
    """A graph violates simplicity or a precondition on its shape."""


class ColoringError(BecountError):
    """A coloring is invalid or could not be computed."""


class DecompositionError(BecountError):
    """A treedepth decomposition is invalid for its component."""


class CountOverflowError(BecountError, OverflowError):
    """A count left the unsigned 64-bit range."""
