"""Typed errors raised by the library.

Validation-type errors derive from ``ValidationError`` so the CLI can map
them to a single exit code.
"""


class IcgError(Exception):
    """Base class for every error raised by icgdist."""


class ValidationError(IcgError, ValueError):
    pass


class ModulusTooSmall(ValidationError):
    pass


class NonDivisor(ValidationError):
    pass


class ImproperDivisor(ValidationError):
    pass


class EmptyDivisorSet(ValidationError):
    pass


class AsymmetricSymbol(ValidationError):
    pass


class SNotReduced(ValidationError):
    pass


class OddModulus(ValidationError):
    pass


class NotPrime(ValidationError):
    pass


class PTooSmall(ValidationError):
    pass


class OrderViolation(ValidationError):
    pass


class SameVertex(ValidationError):
    pass


class MultiplicityMismatch(ValidationError):
    pass


class Disconnected(IcgError):
    pass


class CapExceeded(IcgError):
    pass


class ClassInconsistency(IcgError, AssertionError):
    """A gcd class was found not to be distance-constant."""


class ClosedFormMismatch(IcgError, AssertionError):
    """A direct summation disagreed with its closed form."""


class SpectrumOverflow(IcgError, OverflowError):
    pass
