"""Exception hierarchy shared by every module of the package."""


class SecureDSSError(Exception):
    """Base class for all package errors."""


class NonPrimeModulus(SecureDSSError, ValueError):
    pass


class ModulusTooLarge(SecureDSSError, ValueError):
    pass


class DivisionByZero(SecureDSSError, ZeroDivisionError):
    pass


class FieldMismatch(SecureDSSError, TypeError):
    pass


class DimensionMismatch(SecureDSSError, ValueError):
    pass


class SingularMatrix(SecureDSSError, ValueError):
    pass


class BadParameters(SecureDSSError, ValueError):
    pass


class DuplicateEvaluationPoints(BadParameters):
    pass


class InfoSetNotLeading(BadParameters):
    pass


class TooLargeForExhaustive(SecureDSSError):
    pass


class BudgetExceeded(SecureDSSError):
    pass


class SearchExhausted(SecureDSSError):
    pass


class ExceedsRMax(SecureDSSError):
    pass


class DomainError(SecureDSSError, ValueError):
    pass


class ParseError(SecureDSSError, ValueError):
    pass
