"""Exception types raised by tropolocate."""


class TropicalError(ValueError):
    """Base class for all errors raised by this package."""


class DomainError(TropicalError):
    """A value outside the extended reals, or an undefined power of zero."""


class DimensionMismatch(TropicalError):
    pass


class NotRegular(TropicalError):
    """A vector has a zero entry, or a matrix has a zero row."""


class NotSquare(TropicalError):
    pass


class ZeroVector(TropicalError):
    pass


class EmptyPlus(TropicalError):
    """No column of the closure ``A x A*`` has a unit diagonal entry."""


class NotIrreducible(TropicalError):
    pass


class PremiseViolation(TropicalError):
    """The trace condition ``Tr(A)`` required by a solver does not hold."""


class GridTooLarge(TropicalError):
    pass


class NoFeasibleNode(TropicalError):
    pass


class DimensionUnsupported(TropicalError):
    pass


class ProblemFileError(TropicalError):
    """A problem or report document failed schema validation."""
