"""Shared exception types for the arithmetic and verification layers."""

from __future__ import annotations


class ExactAlgError(Exception):
    """Base class for all library errors."""


class NotDivisible(ExactAlgError):
    """Exact division failed; may carry the offending remainder."""

    def __init__(self, message: str = "not divisible", remainder=None):
        super().__init__(message)
        self.remainder = remainder


class OddUExponent(ExactAlgError):
    """A q-level operation hit a term with a half-integer q-exponent."""


class ZeroPolynomial(ExactAlgError):
    """An operation that needs a nonzero polynomial got the zero polynomial."""


class NonUnitConstantTerm(ExactAlgError):
    """Series reciprocal needs constant term exactly 1."""


class DegreeMismatch(ExactAlgError):
    """An input polynomial does not have the shape the recurrence expects."""


class OrderDeficit(ExactAlgError):
    """Numerator vanishes to lower order than denominator; no finite limit."""


class NotPrime(ExactAlgError):
    """A parameter that must be prime is not."""


class UnknownIdentity(ExactAlgError):
    """Catalog lookup with an id that is not registered."""


class UnknownFamily(ExactAlgError):
    """Recurrence-system lookup with a family tag that is not registered."""


class IdentityViolated(ExactAlgError):
    """A closed form asserted by construction failed to match; hard error."""
