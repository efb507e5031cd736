"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes, so library code raises them rather than
returning status values.
"""


class MonogenError(Exception):
    pass


class DomainError(MonogenError, ValueError):
    """Input outside the mathematical domain of an operation."""


class ResourceError(MonogenError, RuntimeError):
    """A precision ceiling or search guard was exceeded."""


class InternalError(MonogenError, AssertionError):
    """A consistency check failed; indicates a bug, never bad input."""
