"""Error taxonomy shared by the library and the command line.

Each class carries the process exit code the CLI reports for it.
"""


class DeletionOrderError(Exception):
    exit_code = 1


class InputError(DeletionOrderError, ValueError):
    """Malformed word, matrix, letter index or option."""

    exit_code = 2


class ResourceCapExceeded(DeletionOrderError, RuntimeError):
    """An enumeration, word-length or frontier cap was hit."""

    exit_code = 3


class InfiniteGroupError(ResourceCapExceeded):
    """A whole-group computation was requested for an infinite group."""


class InvariantViolation(DeletionOrderError, AssertionError):
    """A computed result contradicts a proved property."""

    exit_code = 4
