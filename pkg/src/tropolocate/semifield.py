"""Scalar arithmetic of the max-plus semifield.

Scalars are plain Python floats.  The zero element is ``-inf`` and the one
element is ``0.0``; ``+inf`` and NaN are never valid values.
"""

from fractions import Fraction
import math

from .exceptions import DomainError

ZERO = -math.inf
ONE = 0.0

#: Default absolute tolerance for comparing finite values.
EPS = 1e-9


def check_scalar(a):
    """Coerce ``a`` to float and reject NaN and ``+inf``."""
    a = float(a)
    if math.isnan(a) or a == math.inf:
        raise DomainError(f"{a!r} is not an element of the max-plus semifield")
    return a


def is_zero(a):
    return a == ZERO


def oplus(a, b):
    """Idempotent addition: the larger of ``a`` and ``b``."""
    a, b = check_scalar(a), check_scalar(b)
    return a if a >= b else b


def otimes(a, b):
    """Multiplication: conventional sum, with ``ZERO`` absorbing."""
    a, b = check_scalar(a), check_scalar(b)
    if a == ZERO or b == ZERO:
        return ZERO
    return a + b


def inv(a):
    """Multiplicative inverse ``-a``; ``ZERO`` maps to itself."""
    a = check_scalar(a)
    if a == ZERO:
        return ZERO
    return -a


def _exponent(r):
    r = Fraction(r).limit_denominator(2) if isinstance(r, float) else Fraction(r)
    if r.denominator not in (1, 2):
        raise DomainError(f"only integer and half-integer exponents are supported, got {r}")
    return r


def power(a, r):
    """Rational power ``a**r``, i.e. ``r * a`` conventionally.

    Exponents must be integers or half-integers (``power(a, 0.5)`` is the
    square root).  ``ZERO`` raised to a non-positive power is undefined.
    """
    a = check_scalar(a)
    if isinstance(r, float) and (math.isnan(r) or math.isinf(r) or 2 * r != round(2 * r)):
        raise DomainError(f"only integer and half-integer exponents are supported, got {r}")
    r = _exponent(r)
    if a == ZERO:
        if r <= 0:
            raise DomainError("zero has no power with non-positive exponent")
        return ZERO
    if r == 0:
        return ONE
    return float(a * r.numerator) / r.denominator


def sqrt(a):
    return power(a, Fraction(1, 2))


def leq(a, b, tol=0.0):
    """Order of the semifield, ``a <= b`` (``a + b == b``), with slack ``tol``."""
    a, b = check_scalar(a), check_scalar(b)
    if a == ZERO:
        return True
    if b == ZERO:
        return False
    return a <= b + tol


def isclose(a, b, tol=EPS):
    """Equality up to ``tol`` for finite values, identity for ``ZERO``."""
    a, b = check_scalar(a), check_scalar(b)
    if a == ZERO or b == ZERO:
        return a == b
    return abs(a - b) <= tol
