"""Exception types shared across the package."""


class PortraitError(Exception):
    """Base class for all domain errors raised by this package."""


class NotSquareError(PortraitError):
    pass


class NotFiniteError(PortraitError):
    pass


class NotHermitianError(PortraitError):
    pass


class NotPSDError(PortraitError):
    pass


class NotUnitTraceError(PortraitError):
    pass


class NotDensityError(PortraitError):
    pass


class DimensionMismatchError(PortraitError):
    pass


class SpecTooSmallError(PortraitError):
    pass


class ShiftTooSmallError(PortraitError):
    pass


class EmptyKeepError(PortraitError):
    pass


class ZeroTraceError(PortraitError):
    pass


class DomainError(PortraitError):
    pass


class NoConvergenceError(PortraitError):
    pass


class MatrixFileError(PortraitError):
    """Raised when a matrix file does not conform to the schema."""
