"""Exceptions raised by the exact core and the checkers built on it."""


class MbmError(Exception):
    """Base class for every error raised by the package."""


class ShapeError(MbmError, ValueError):
    """Domains, codomains, fields or grade groups do not fit together."""


class NotSurjective(MbmError):
    """A map that had to be onto is not; ``rank`` records what was found."""

    def __init__(self, message, rank=None, expected=None):
        super().__init__(message)
        self.rank = rank
        self.expected = expected


class InconsistentSystem(MbmError):
    """A linear system has no solution.

    ``witness`` is a vector (dict index -> scalar) certifying it, typically a
    kernel vector of the epimorphism on which the right-hand side is nonzero.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class Refused(MbmError):
    """A construction or check whose hypotheses do not hold."""

    def __init__(self, message, witness=None, data=None):
        super().__init__(message)
        self.witness = witness
        self.data = data or {}
