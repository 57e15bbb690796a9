"""Minimax single-facility location under Chebyshev distance.

The problem is to find ``x`` minimizing ``max_i (rho(r_i, x) + w_i)`` over
all of R^n, over ``{x : A x = x}``, or over ``{x : A x <= x}``.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np

from . import linalg, semifield
from ._validation import check_finite_vector, check_points, check_tropical_matrix
from .exceptions import DimensionMismatch, NotIrreducible, NotSquare, PremiseViolation
from .linalg import mat_mul, pseudo_inverse
from .minimax import minimize_identity, minimize_two_sided


class ConstraintKind(str, Enum):
    NONE = "none"
    EQUALITY = "equality"
    INEQUALITY = "inequality"


@dataclass(frozen=True)
class Constraint:
    kind: ConstraintKind
    matrix: np.ndarray

    def __post_init__(self):
        kind = ConstraintKind(self.kind)
        if kind is ConstraintKind.NONE:
            raise ValueError("use constraint=None for an unconstrained problem")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "matrix", check_tropical_matrix(self.matrix, "constraint matrix"))

    @classmethod
    def equality(cls, matrix):
        return cls(ConstraintKind.EQUALITY, matrix)

    @classmethod
    def inequality(cls, matrix):
        return cls(ConstraintKind.INEQUALITY, matrix)


@dataclass(frozen=True)
class LocationProblem:
    """Points ``r_i`` (one per row), addends ``w_i`` and an optional constraint."""

    points: np.ndarray
    weights: Optional[np.ndarray] = None
    constraint: Optional[Constraint] = None

    def __post_init__(self):
        points = check_points(self.points)
        m, n = points.shape
        weights = np.zeros(m) if self.weights is None else check_finite_vector(self.weights, m, "weights")
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "weights", weights)
        if self.constraint is not None:
            shape = self.constraint.matrix.shape
            if shape[0] != shape[1]:
                raise NotSquare(f"constraint matrix must be square, got shape {shape}")
            if shape[0] != n:
                raise DimensionMismatch(f"constraint matrix is {shape[0]}x{shape[0]}, points have dimension {n}")

    @property
    def n_points(self):
        return self.points.shape[0]

    @property
    def dim(self):
        return self.points.shape[1]

    @property
    def constraint_kind(self):
        return ConstraintKind.NONE if self.constraint is None else self.constraint.kind


@dataclass(frozen=True)
class SolutionReport:
    """Optimal value ``delta`` and an optimal location ``witness``.

    For unconstrained problems ``box_lower``/``box_upper`` delimit the full
    set of optimal locations; constrained solvers leave them ``None``.
    """

    delta: float
    witness: np.ndarray
    p: np.ndarray
    q: np.ndarray
    constraint_kind: ConstraintKind
    box_lower: Optional[np.ndarray] = field(default=None)
    box_upper: Optional[np.ndarray] = field(default=None)


def derive_pq(problem):
    """Aggregate the data into ``p = max_i (r_i + w_i)`` and ``q = min_i (r_i - w_i)``."""
    p = linalg.zeros(problem.dim)
    q_inv = linalg.zeros((1, problem.dim))
    for r, w in zip(problem.points, problem.weights):
        p = linalg.vec_add(p, linalg.scal_mul(w, r))
        q_inv = linalg.vec_add(q_inv, linalg.scal_mul(w, pseudo_inverse(r)))
    return p, pseudo_inverse(q_inv)


def solve_unconstrained(problem):
    p, q = derive_pq(problem)
    delta, lower, upper = minimize_identity(p, q)
    return SolutionReport(
        delta=delta,
        witness=lower.copy(),
        p=p,
        q=q,
        constraint_kind=ConstraintKind.NONE,
        box_lower=lower,
        box_upper=upper,
    )


def _constraint_matrix(problem, kind):
    if problem.constraint_kind is not kind:
        raise ValueError(f"expected a problem with {kind.value} constraint, got {problem.constraint_kind.value}")
    A = problem.constraint.matrix
    if not linalg.is_irreducible(A):
        raise NotIrreducible("constraint matrix must be irreducible")
    return A


def _solve_on_span(problem, generator, kind):
    p, q = derive_pq(problem)
    res = minimize_two_sided(generator, p, q)
    return SolutionReport(
        delta=res.delta,
        witness=mat_mul(generator, res.minimizer),
        p=p,
        q=q,
        constraint_kind=kind,
    )


def solve_equality_constrained(problem, tol=semifield.EPS):
    """Optimal location on ``{x : A x = x}``; requires irreducible ``A`` with ``Tr(A) = 0``."""
    A = _constraint_matrix(problem, ConstraintKind.EQUALITY)
    tr = linalg.tr_closure(A)
    if not semifield.isclose(tr, semifield.ONE, tol):
        raise PremiseViolation(
            f"Tr(A) = {tr:g} but equality constraints need Tr(A) = 0; "
            "A x = x then has only the zero solution")
    return _solve_on_span(problem, linalg.plus_matrix(A, tol), ConstraintKind.EQUALITY)


def solve_inequality_constrained(problem, tol=semifield.EPS):
    """Optimal location on ``{x : A x <= x}``; requires irreducible ``A`` with ``Tr(A) <= 0``."""
    A = _constraint_matrix(problem, ConstraintKind.INEQUALITY)
    tr = linalg.tr_closure(A)
    if tr > semifield.ONE + tol:
        raise PremiseViolation(
            f"Tr(A) = {tr:g} > 0: A x <= x has only the zero solution, "
            "so no regular location is feasible")
    return _solve_on_span(problem, linalg.star(A), ConstraintKind.INEQUALITY)


def solve(problem, tol=semifield.EPS):
    kind = problem.constraint_kind
    if kind is ConstraintKind.NONE:
        return solve_unconstrained(problem)
    if kind is ConstraintKind.EQUALITY:
        return solve_equality_constrained(problem, tol)
    return solve_inequality_constrained(problem, tol)
