"""Exceptions shared across the package."""


class InvariantViolation(RuntimeError):
    """An internal consistency guarantee failed.

    Raised when a computation that provably cannot fail on valid input does
    fail anyway; it signals a bug in this package, not bad user input.
    The command line maps it to its own exit code.
    """
