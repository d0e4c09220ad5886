"""Exception types raised by ptsym2.

Every error is a ``ValueError`` subclass so callers that only care about
"bad input" can catch one thing. Errors that come from a violated numerical
constraint carry the offending ``residual``.
"""

from __future__ import annotations


class PTSymError(ValueError):
    """Base class for all ptsym2 errors."""

    def __init__(self, message: str = "", residual: float | None = None):
        super().__init__(message or self.__class__.__name__)
        self.residual = residual

    @property
    def kind(self) -> str:
        return self.__class__.__name__


class NonFinite(PTSymError):
    """A NaN or infinite number reached an API boundary."""


class ConstraintViolated(PTSymError):
    """A defining equation of a parity operator does not hold."""


class ZeroOperator(PTSymError):
    pass


class NotPhaseReal(PTSymError):
    """Complex coefficients cannot be written as a phase times real numbers."""


class NotUnimodular(PTSymError):
    pass


class NotInvolutionLike(PTSymError):
    """The quadratic form of a time reversal is not +1 or -1."""


class NegativeSquare(PTSymError):
    """The operation needs T^2 = +I but received T^2 = -I."""


class TrivialParity(PTSymError):
    pass


class NotCommuting(PTSymError):
    pass


class NotDistinct(PTSymError):
    """Two time reversals coincide up to a phase."""


class OffSurface(PTSymError):
    pass


class ZeroAxis(PTSymError):
    pass


class ConditionsViolated(PTSymError):
    """A matrix fails the necessary conditions for PT symmetry."""


class NotHermitian(PTSymError):
    pass


class BrokenSymmetry(PTSymError):
    pass


class DefectiveCase(PTSymError):
    pass
