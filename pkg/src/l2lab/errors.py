"""Shared exception types."""


class ParseError(ValueError):
    """Malformed user input (polynomial text or algebra document)."""


class CapExceeded(RuntimeError):
    """An enumeration would exceed the configured size caps."""


class ConsistencyError(AssertionError):
    """A theorem-predicted value disagreed with a brute-force observation.

    Reaching this is always a bug in the package or an arithmetic error;
    the command line maps it to exit code 3.
    """
