#!/usr/bin/env python3

"""Error types raised by the library."""


class CoalescentZetaError(Exception):
    """Base class of the guard and range errors raised by the library."""


class PrecisionExceededError(CoalescentZetaError):
    """Requested more digits than the embedded constants carry."""


class DivergentTailError(CoalescentZetaError):
    """Requested a partial sum of a series whose tail cannot be bounded."""


class UnreliableTailError(CoalescentZetaError):
    """A truncated series is too close to its singular point to be trusted."""

    def __init__(self, message, tail_bound=None):
        super(UnreliableTailError, self).__init__(message)
        self.tail_bound = tail_bound


class ComplexityGuardError(CoalescentZetaError):
    """An enumeration would exceed the configured budget."""


class SizeGuardError(CoalescentZetaError):
    """An argument exceeds the size supported by an enumeration or oracle."""


class DuplicateRatesError(CoalescentZetaError):
    """Death rates of a pure death process are not pairwise distinct."""


class ScaleGuardError(CoalescentZetaError):
    """The norm of Q*t is too large for the matrix exponential oracle."""
