"""Exact computation of h(n), the largest product of distinct primes summing to at most n."""

from .core import Core
from .errors import (
    CapacityError,
    DeltaSearchError,
    DomainError,
    HPrimesError,
    InvariantError,
    NumericError,
    ResourceError,
)

__version__ = "0.1.0"

__all__ = [
    'Core',
    'HPrimesError',
    'DomainError',
    'CapacityError',
    'ResourceError',
    'DeltaSearchError',
    'NumericError',
    'InvariantError',
]
