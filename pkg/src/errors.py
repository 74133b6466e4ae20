"""Exception hierarchy shared by every module.

Each leaf class also derives from the closest builtin so callers that only
know about ``ValueError`` or ``MemoryError`` still catch it.
"""


class HPrimesError(Exception):
    """Base class for all errors raised by this package."""
    exit_code = 1


class DomainError(HPrimesError, ValueError):
    """An argument lies outside an operation's precondition."""
    exit_code = 3


class CapacityError(HPrimesError, OverflowError):
    """A value exceeds the supported 128-bit range."""
    exit_code = 4


class ResourceError(HPrimesError, MemoryError):
    """A memory, size or search budget would be exceeded."""
    exit_code = 5


class DeltaSearchError(ResourceError):
    """No admissible shift was found below the configured cap."""


class NumericError(HPrimesError, ArithmeticError):
    """An iterative numerical method failed to converge."""
    exit_code = 7


class InvariantError(HPrimesError, AssertionError):
    """An internal invariant was violated."""
    exit_code = 7


VERIFICATION_FAILED_EXIT = 6
