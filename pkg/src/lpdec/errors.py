"""Exception types raised across the package."""


class LpDecodeError(Exception):
    """Base class for all package errors."""


class DimensionTooLarge(LpDecodeError, ValueError):
    pass


class LengthMismatch(LpDecodeError, ValueError):
    pass


class InvalidParameters(LpDecodeError, ValueError):
    pass


class UnknownCode(LpDecodeError, KeyError):
    pass


class InvalidRate(LpDecodeError, ValueError):
    pass


class EvenSet(LpDecodeError, ValueError):
    pass


class DegreeTooLarge(LpDecodeError, ValueError):
    pass


class UnknownConstraintId(LpDecodeError, KeyError):
    pass


class RemovalForbidden(LpDecodeError):
    pass


class Unbounded(LpDecodeError):
    """The LP objective is unbounded below (a construction bug for decoder LPs)."""


class NumericalFailure(LpDecodeError):
    pass


class UnknownPreset(LpDecodeError, KeyError):
    pass


class ConfigError(LpDecodeError, ValueError):
    pass
