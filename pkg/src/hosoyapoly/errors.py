"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class HosoyaError(Exception):
    """Base class for every error raised by this package."""


class NotDivisible(HosoyaError, ArithmeticError):
    pass


class DivisionByZero(HosoyaError, ZeroDivisionError):
    pass


class NonIntegerIntegral(HosoyaError, ArithmeticError):
    pass


class EmptyInput(HosoyaError, ValueError):
    pass


class PolynomialParseError(HosoyaError, ValueError):
    pass


class UnknownFamily(HosoyaError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown family"


class NotBinetEligible(HosoyaError, ValueError):
    pass


class NotTheoremGrade(HosoyaError, ValueError):
    pass


class NotTyped(HosoyaError, ValueError):
    pass


class NotFibonacciType(HosoyaError, ValueError):
    pass


class OutOfRange(HosoyaError, IndexError):
    pass


class OutOfBounds(HosoyaError, IndexError):
    pass


class DegenerateCenter(HosoyaError, ValueError):
    pass


class UnclassifiedPart4(HosoyaError, ArithmeticError):
    """The interior-point product did not match c, c*G_t or c*G_t^2."""


class FamilyNotCovered(HosoyaError, ValueError):
    pass


class RequiresUnitG(HosoyaError, ValueError):
    pass


class ConstraintViolation(HosoyaError, ValueError):
    pass


class NotAPurePower(HosoyaError, ArithmeticError):
    pass
