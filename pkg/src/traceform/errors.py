"""Exception hierarchy shared by every module of the package."""


class TraceFormError(Exception):
    """Base class for all errors raised by traceform."""


class ModeMismatch(TraceFormError, TypeError):
    """Operands belong to different scalar modes (rational / real / complex)."""


class DivisionByZero(TraceFormError, ZeroDivisionError):
    pass


class NegativeTolerance(TraceFormError, ValueError):
    pass


class EmptyInput(TraceFormError, ValueError):
    pass


class SpectrumPoint(TraceFormError, ArithmeticError):
    """The requested point is a characteristic value, so the resolvent does not exist."""


class SingularMatrix(TraceFormError, ArithmeticError):
    pass


class DegenerateBackground(TraceFormError, ArithmeticError):
    pass


class DegenerateTotalMetric(TraceFormError, ArithmeticError):
    pass


class ShapeError(TraceFormError, ValueError):
    pass


class AsymmetricTensor(TraceFormError, ValueError):
    pass


class ParseError(TraceFormError, ValueError):
    """Malformed matrix or metric file; ``location`` names the first offending entry."""

    def __init__(self, message: str, location=None):
        super().__init__(message if location is None else f"{message} at {location}")
        self.location = location


class UsageError(TraceFormError, ValueError):
    pass
