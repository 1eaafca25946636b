"""Exception hierarchy shared by every module of the package."""


class LRCError(Exception):
    """Base class for domain errors (CLI maps these to exit status 1)."""


class FieldError(LRCError):
    pass


class NotPrime(FieldError):
    pass


class NotPrimitive(FieldError):
    pass


class DegreeMismatch(FieldError):
    pass


class FieldMismatch(FieldError):
    pass


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class CodeError(LRCError):
    pass


class ZeroMatrix(CodeError):
    pass


class DegenerateCode(CodeError):
    pass


class RankError(CodeError):
    pass


class LengthMismatch(CodeError, ValueError):
    pass


class IndexOutOfRange(CodeError, IndexError):
    pass


class BudgetExceeded(LRCError):
    pass


class DistanceOne(LRCError):
    """Some coordinate has no recovery set (the code contains a weight-1 word)."""


class Unrecoverable(LRCError):
    pass


class RecoverySetErased(LRCError):
    pass


class NotACodeword(LRCError):
    pass


class Stalled(LRCError):
    """Iterated repair reached a fixpoint with positions still erased."""

    def __init__(self, residual, partial=None):
        self.residual = sorted(residual)
        self.partial = partial
        super().__init__(f"repair stalled, unrecoverable positions {self.residual}")


class ParseError(LRCError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
