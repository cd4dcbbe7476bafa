"""Exception types shared across the package.

Everything derives from ShortPresError so callers can catch the package's
failures in one clause; the finer-grained classes exist because several of
them carry context (the offending point, symbol, or size) that tests and the
CLI want to surface.
"""


class ShortPresError(ValueError):
    """Base class for all errors raised by this package."""


class DomainMismatch(ShortPresError):
    """Two permutations with different domains were combined."""


class PointOutOfDomain(ShortPresError):
    """A cycle or lookup referenced a point outside the permutation's domain."""

    def __init__(self, point, lo, hi):
        super().__init__(f"point {point} outside domain [{lo}, {hi}]")
        self.point = point


class OverlappingCycles(ShortPresError):
    """A point appeared twice in a cycle list passed to from_cycles."""

    def __init__(self, point):
        super().__init__(f"point {point} appears more than once")
        self.point = point


class UnsupportedDegree(ShortPresError):
    """No construction covers the requested degree."""

    def __init__(self, n, why=""):
        msg = f"degree {n} is not covered"
        if why:
            msg += f": {why}"
        super().__init__(msg)
        self.degree = n


class BadPrimeClass(ShortPresError):
    """A builder was given a prime outside its congruence class."""


class ParityViolation(ShortPresError):
    """The unit-generator exponent pair has the wrong parity for the diagonal form."""


class InternalInvariantViolation(ShortPresError):
    """A derived parameter failed a consistency check that should always hold."""


class UnboundSymbol(ShortPresError):
    """A word referenced a symbol with no image and no earlier definition."""

    def __init__(self, name):
        super().__init__(f"no image or definition for symbol {name!r}")
        self.name = name


class EnumerationTooLarge(ShortPresError):
    """A matrix-group closure would exceed the configured enumeration bound."""


class DegreeTooLarge(ShortPresError):
    """A verification step was asked to run above its configured degree bound."""
