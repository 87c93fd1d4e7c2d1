"""Exception types raised by ringhull."""


class RingHullError(ValueError):
    """Base class for all input and consistency errors."""


class InvalidDigit(RingHullError):
    pass


class EmptyInput(RingHullError):
    pass


class NotMonic(RingHullError):
    pass


class InexactDivision(RingHullError):
    pass


class NonUnitConstantTerm(RingHullError):
    pass


class NotCoprime(RingHullError):
    pass


class EvenModulus(RingHullError):
    pass


class EvenLength(RingHullError):
    """Raised for even code lengths; x^n - 1 is not squarefree mod 2 there."""

    def __init__(self, n):
        super().__init__(f"length must be odd, got n={n}")
        self.n = n


class TableMismatch(RingHullError):
    pass


class IncompleteAssignment(RingHullError):
    pass


class CodeTooLarge(RingHullError):
    pass


class TooManyCodes(RingHullError):
    pass


class MalformedGenerator(RingHullError):
    pass


class NotADivisor(RingHullError):
    """A polynomial is not a product of factors of x^n - 1."""
