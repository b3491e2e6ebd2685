"""Exception types shared across the package."""


class FrComplexityError(Exception):
    """Base class for all package errors."""


class LoadError(FrComplexityError):
    """A resource or data file could not be read."""


class ParseError(LoadError):
    """A resource file is malformed.

    ``path`` and ``line`` point at the offending location when known.
    """

    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f"{path}:{line}: " if line is not None else f"{path}: "
        super().__init__(where + message)


class ValidationError(FrComplexityError, ValueError):
    """Input data violates a documented precondition."""


class ConfigurationError(FrComplexityError):
    """Rule sets or schemas are inconsistent."""


class TrainingError(FrComplexityError):
    """Model fitting failed (e.g. divergence)."""
