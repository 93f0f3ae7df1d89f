"""Exception hierarchy shared by the library and the CLI."""


class HodgeError(Exception):
    """Base class for every error raised by this package."""


class PreconditionViolation(HodgeError, ValueError):
    """An operation was called outside the parameter range it is proven for."""


class InvalidRange(PreconditionViolation):
    pass


class OutOfScope(HodgeError):
    """No known result applies to the requested parameters."""


class DivisionByZero(HodgeError, ZeroDivisionError):
    pass


class NotDivisible(HodgeError, ArithmeticError):
    """Raised by exact division when no polynomial quotient exists.

    ``remainder`` is a nonzero partial remainder ``r`` with
    ``dividend == divisor * quotient + r``.
    """

    def __init__(self, dividend, divisor, quotient, remainder):
        self.dividend = dividend
        self.divisor = divisor
        self.quotient = quotient
        self.remainder = remainder
        super().__init__(f"({dividend}) is not divisible by ({divisor}); remainder {remainder}")
