"""Linear equations of the first and second kind over max-plus."""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import linalg, semifield
from ._validation import check_tropical_matrix, check_tropical_vector
from .exceptions import DimensionMismatch, NotIrreducible, NotRegular
from .linalg import mat_mul, pseudo_inverse


@dataclass(frozen=True)
class FirstKindResult:
    delta: float
    best_x: np.ndarray
    solvable: bool


@dataclass(frozen=True)
class SecondKindResult:
    """Generator of the solution family ``x = generator v``.

    ``generator`` is ``None`` when only the trivial zero solution exists.
    """

    generator: Optional[np.ndarray]
    trivial_only: bool


def _check_first_kind(A, d):
    A = check_tropical_matrix(A, "A")
    d = check_tropical_vector(d, "d")
    if A.shape[0] != d.shape[0]:
        raise DimensionMismatch(f"A has {A.shape[0]} rows, d has length {d.shape[0]}")
    if not linalg.is_regular(A):
        raise NotRegular("A must have no zero rows")
    if not linalg.is_regular(d):
        raise NotRegular("d must have no zero entries")
    return A, d


def _residual(A, d):
    x0 = pseudo_inverse(mat_mul(pseudo_inverse(d), A))
    delta = semifield.sqrt(linalg.dot(pseudo_inverse(mat_mul(A, x0)), d))
    return delta, x0


def first_kind_residual(A, d):
    """Minimum distance from ``d`` to the span of the columns of ``A``."""
    A, d = _check_first_kind(A, d)
    return _residual(A, d)[0]


def solve_first_kind(A, d, tol=semifield.EPS):
    """Solve ``A x = d`` for regular ``A`` and ``d``.

    When solvable, ``best_x`` is the maximum solution; otherwise it is the
    vector whose image is closest to ``d``.
    """
    A, d = _check_first_kind(A, d)
    delta, x0 = _residual(A, d)
    return FirstKindResult(
        delta=delta,
        best_x=linalg.scal_mul(delta, x0),
        solvable=abs(delta) <= tol,
    )


def _check_irreducible(A):
    A = check_tropical_matrix(A, "A")
    if not linalg.is_irreducible(A):
        raise NotIrreducible("A must be irreducible")
    return A


def solve_second_kind_eq(A, tol=semifield.EPS):
    """All solutions of ``A x = x`` for irreducible ``A``."""
    A = _check_irreducible(A)
    if abs(linalg.tr_closure(A)) > tol:
        return SecondKindResult(generator=None, trivial_only=True)
    return SecondKindResult(generator=linalg.plus_matrix(A, tol), trivial_only=False)


def solve_second_kind_ineq(A, tol=semifield.EPS):
    """All solutions of ``A x <= x`` for irreducible ``A``."""
    A = _check_irreducible(A)
    if linalg.tr_closure(A) > tol:
        return SecondKindResult(generator=None, trivial_only=True)
    return SecondKindResult(generator=linalg.star(A), trivial_only=False)
