"""Exception types raised by the engine."""


class RacahError(Exception):
    """Base class for every error raised by racahpbw."""


class FuelExhausted(RacahError):
    pass


class UnknownName(RacahError, KeyError):
    def __str__(self):
        return f"unknown element name: {self.args[0]!r}"


class PowerOutOfRange(RacahError, ValueError):
    pass


class ZeroPolynomial(RacahError, ValueError):
    pass


class BoundTooLarge(RacahError, ValueError):
    pass


class ExprError(RacahError, ValueError):
    """Bad expression text; ``offset`` is the byte offset of the offending input."""

    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}")
        self.message = message
        self.offset = offset


class LexError(ExprError):
    pass


class ParseError(ExprError):
    pass


class ZeroDenominator(ExprError):
    pass
