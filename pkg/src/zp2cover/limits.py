"""Enumeration caps.

Every exhaustive loop in the package is guarded by one of these caps and
raises ResourceLimitError instead of silently truncating.  The ambient scan
cap can be overridden with the ZP2COVER_ENUM_CAP environment variable
(integer word count).
"""

import os

from .errors import ConfigError, ResourceLimitError

ENUM_CAP_ENV = "ZP2COVER_ENUM_CAP"

# Ambient words scanned by covering-radius searches (default allows 9^8).
DEFAULT_ENUM_CAP = 1 << 26
# Coefficient vectors enumerated when spanning a generator matrix.
DEFAULT_SPAN_CAP = 1 << 24
# Codewords materialized as Python objects (span results, duals).
DEFAULT_MATERIALIZE_CAP = 1 << 20


def enum_cap() -> int:
    """Ambient-scan cap, honoring the environment override."""
    raw = os.environ.get(ENUM_CAP_ENV)
    if raw is None:
        return DEFAULT_ENUM_CAP
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{ENUM_CAP_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ConfigError(f"{ENUM_CAP_ENV} must be positive, got {value}")
    return value


def check_cap(needed: int, cap: int, what: str) -> None:
    if needed > cap:
        raise ResourceLimitError(
            f"{what} needs {needed} words, over the cap of {cap}"
            f" (set {ENUM_CAP_ENV} to raise the scan cap)"
        )
