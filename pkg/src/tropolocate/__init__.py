"""Max-plus linear algebra and minimax Chebyshev facility location."""

from .estimator import ChebyshevCenter
from .exceptions import (
    DimensionMismatch,
    DimensionUnsupported,
    DomainError,
    EmptyPlus,
    GridTooLarge,
    NoFeasibleNode,
    NotIrreducible,
    NotRegular,
    NotSquare,
    PremiseViolation,
    ProblemFileError,
    TropicalError,
    ZeroVector,
)
from .location import (
    Constraint,
    ConstraintKind,
    LocationProblem,
    SolutionReport,
    derive_pq,
    solve,
    solve_equality_constrained,
    solve_inequality_constrained,
    solve_unconstrained,
)
from .oracle import OracleConfig, grid_minimize
from .semifield import ONE, ZERO

__version__ = "0.1.0"

__all__ = [
    "ChebyshevCenter",
    "Constraint",
    "ConstraintKind",
    "DimensionMismatch",
    "DimensionUnsupported",
    "DomainError",
    "EmptyPlus",
    "GridTooLarge",
    "LocationProblem",
    "NoFeasibleNode",
    "NotIrreducible",
    "NotRegular",
    "NotSquare",
    "ONE",
    "OracleConfig",
    "PremiseViolation",
    "ProblemFileError",
    "SolutionReport",
    "TropicalError",
    "ZERO",
    "ZeroVector",
    "derive_pq",
    "grid_minimize",
    "solve",
    "solve_equality_constrained",
    "solve_inequality_constrained",
    "solve_unconstrained",
]
