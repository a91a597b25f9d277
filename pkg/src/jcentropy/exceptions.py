"""Exception types raised across the package."""


class JCEntropyError(Exception):
    """Base class for all package errors."""


class NumericalError(JCEntropyError):
    """A numerical precondition failed (maps to CLI exit code 3)."""


class TailMassError(NumericalError):
    """Probability mass was lost past the Fock-space truncation."""


class DimensionMismatch(JCEntropyError, ValueError):
    pass


class NormalizationError(NumericalError):
    pass


class NonHermitianError(NumericalError):
    pass


class NegativeEigenvalueError(NumericalError):
    """An eigenvalue was more negative than roundoff can explain."""


class UsageError(JCEntropyError):
    """Bad command-line flag or value (maps to CLI exit code 2)."""


class ConfigParseError(UsageError):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
