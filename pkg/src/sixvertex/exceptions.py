class SixVertexError(Exception):
    """Base class for errors raised by this package."""


class ModeError(SixVertexError, TypeError):
    """Exact and floating-point scalars were combined."""


class ParseError(SixVertexError, ValueError):
    pass


class NotInSError(SixVertexError, ValueError):
    """A matrix falls outside the set a construction or operation requires."""

    def __init__(self, message, vanishing=()):
        super().__init__(message)
        self.vanishing = tuple(vanishing)


class SingularMatrixError(SixVertexError, ZeroDivisionError):
    pass


class StatisticsUndefinedError(SixVertexError, ValueError):
    """The Delta statistics need both b-entries nonzero."""


class DegenerateProductError(SixVertexError, ValueError):
    """A composition produced a matrix outside the admissible set.

    ``vanishing`` names the quantities that vanished (for example ``"b1"`` or
    ``"det"``).
    """

    def __init__(self, message, vanishing=()):
        super().__init__(message)
        self.vanishing = tuple(vanishing)
