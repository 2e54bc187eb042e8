"""Exception types raised across the package."""


class MoyalError(Exception):
    """Base class for every error raised by this package."""


class DivisionByZero(MoyalError, ZeroDivisionError):
    pass


class UnknownPreset(MoyalError, ValueError):
    pass


class OrderMismatch(MoyalError, ValueError):
    pass


class NonUnitConstantTerm(MoyalError, ValueError):
    pass


class IndexOutOfRange(MoyalError, IndexError):
    pass


class InsufficientOrder(MoyalError, ValueError):
    """A truncated series does not carry enough coefficients for the input."""

    def __init__(self, needed: int, available: int):
        super().__init__(f"series order {available} is too small, need at least {needed}")
        self.needed = needed
        self.available = available


class UndefinedForUnitCase(MoyalError, ValueError):
    pass


class DimMismatch(MoyalError, ValueError):
    pass


class MarginTooLarge(MoyalError, ValueError):
    pass


class InvalidOrdering(MoyalError, ValueError):
    """A custom ordering series is malformed (bad file, f_0 != 1)."""


class ExprSyntaxError(MoyalError, ValueError):
    """Malformed polynomial expression; ``position`` is a byte offset into the input."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.message = message
        self.position = position


class NegativeExponent(ExprSyntaxError):
    pass


class DivisionByZeroLiteral(ExprSyntaxError):
    pass
