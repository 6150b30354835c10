"""Exception types shared across the package."""


class Zp2CoverError(Exception):
    """Base class for all package errors."""


class InvalidParameterError(Zp2CoverError, ValueError):
    """A value violates a documented precondition (bad prime, residue, matrix, ...)."""


class UndefinedDistanceError(InvalidParameterError):
    """Minimum distance requested for a code with fewer than two codewords."""


class ResourceLimitError(Zp2CoverError, RuntimeError):
    """An enumeration would exceed the configured cap; never silently truncated."""


class ConfigError(Zp2CoverError, ValueError):
    """Malformed suite configuration; message carries field diagnostics."""
