"""Exception types shared across the package."""

from __future__ import annotations


class EwlinkError(Exception):
    """Base class for all package errors."""


class DomainError(EwlinkError, ValueError):
    """A physically meaningless input (non-positive power, range, RCS, ...)."""


class UsageError(EwlinkError, ValueError):
    """An operation was called with an incompatible combination of arguments."""


class ConfigError(EwlinkError, ValueError):
    """A scenario file or scenario definition is invalid.

    ``line`` and ``key`` locate the problem in the source text when known.
    """

    def __init__(self, message: str, *, line: int | None = None, key: str | None = None):
        self.line = line
        self.key = key
        where = []
        if line is not None:
            where.append(f"line {line}")
        if key is not None:
            where.append(f"key '{key}'")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)
