"""Minimization of ``(A x)^- b + c^- A x`` over regular ``x``."""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import linalg, semifield
from ._validation import check_tropical_matrix, check_tropical_vector
from .exceptions import DimensionMismatch, NotRegular
from .linalg import mat_mul, pseudo_inverse


@dataclass(frozen=True)
class TwoSidedResult:
    delta: float
    minimizer: np.ndarray
    image_lower: np.ndarray
    image_upper: np.ndarray


class BoxResult(NamedTuple):
    delta: float
    lower: np.ndarray
    upper: np.ndarray


def _check_pair(b, c, m):
    b = check_tropical_vector(b, "b")
    c = check_tropical_vector(c, "c")
    if b.shape != c.shape or b.shape[0] != m:
        raise DimensionMismatch(f"b and c must have length {m}")
    if not (linalg.is_regular(b) and linalg.is_regular(c)):
        raise NotRegular("b and c must have no zero entries")
    return b, c


def two_sided_objective(A, x, b, c):
    """Evaluate ``(A x)^- b + c^- A x``."""
    y = mat_mul(A, x)
    return semifield.oplus(linalg.dot(pseudo_inverse(y), b), linalg.dot(pseudo_inverse(c), y))


def minimize_two_sided(A, b, c):
    """Closed-form minimum and one minimizer.

    ``image_lower`` and ``image_upper`` bound ``A x`` for every minimizer
    ``x``; the bound is necessary but in general not sufficient.
    """
    A = check_tropical_matrix(A, "A")
    b, c = _check_pair(b, c, A.shape[0])
    if not linalg.is_regular(A):
        raise NotRegular("A must have no zero rows")
    x0 = pseudo_inverse(mat_mul(pseudo_inverse(c), A))
    delta = semifield.sqrt(linalg.dot(pseudo_inverse(mat_mul(A, x0)), b))
    return TwoSidedResult(
        delta=delta,
        minimizer=linalg.scal_mul(delta, x0),
        image_lower=linalg.scal_mul(semifield.inv(delta), b),
        image_upper=linalg.scal_mul(delta, c),
    )


def minimizer_box(result, x, A, tol=semifield.EPS):
    """Check the necessary optimality condition ``lower <= A x <= upper``."""
    y = mat_mul(A, x)
    return linalg.leq(result.image_lower, y, tol) and linalg.leq(y, result.image_upper, tol)


def minimize_identity(b, c):
    """Minimum of ``x^- b + c^- x``, attained on the whole box ``[lower, upper]``."""
    b = check_tropical_vector(b, "b")
    b, c = _check_pair(b, c, b.shape[0])
    delta = semifield.sqrt(linalg.dot(pseudo_inverse(c), b))
    return BoxResult(
        delta=delta,
        lower=linalg.scal_mul(semifield.inv(delta), b),
        upper=linalg.scal_mul(delta, c),
    )
