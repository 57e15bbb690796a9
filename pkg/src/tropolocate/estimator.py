"""scikit-learn compatible front end for the location solvers."""

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted, validate_data

from . import semifield
from ._validation import check_finite_vector
from .location import Constraint, LocationProblem, solve


class ChebyshevCenter(TransformerMixin, BaseEstimator):
    """Minimax facility location under Chebyshev distance.

    ``fit`` treats each row of ``X`` as a demand point and finds a location
    minimizing the largest distance plus addend.  ``transform`` returns the
    Chebyshev distance from each row to that location.

    Parameters
    ----------
    constraint : {None, "equality", "inequality"}, default=None
        Restrict the location to ``{x : A x = x}`` or ``{x : A x <= x}`` in
        max-plus arithmetic, where ``A`` is ``constraint_matrix``.
    constraint_matrix : array-like of shape (n_features, n_features), default=None
        Max-plus matrix with ``-inf`` for absent entries.
    tol : float, default=1e-9
        Tolerance for the trace premises of the constrained solvers.

    Attributes
    ----------
    delta_ : float
        Optimal objective value.
    location_ : ndarray of shape (n_features,)
        One optimal location.
    box_lower_, box_upper_ : ndarray of shape (n_features,) or None
        Bounds of the set of all optimal locations (unconstrained only).
    report_ : SolutionReport
    """

    def __init__(self, constraint=None, constraint_matrix=None, tol=semifield.EPS):
        self.constraint = constraint
        self.constraint_matrix = constraint_matrix
        self.tol = tol

    def _problem(self, X, addends):
        if self.constraint is None:
            return LocationProblem(X, addends)
        if self.constraint_matrix is None:
            raise ValueError(f"constraint={self.constraint!r} needs constraint_matrix")
        return LocationProblem(X, addends, Constraint(self.constraint, self.constraint_matrix))

    def fit(self, X, y=None, addends=None):
        """Locate the facility for demand points ``X``.

        ``addends`` holds one additive constant per point (default zeros).
        """
        X = validate_data(self, X, dtype=np.float64)
        if addends is not None:
            addends = check_finite_vector(addends, X.shape[0], "addends")
        report = solve(self._problem(X, addends), self.tol)
        self.report_ = report
        self.delta_ = report.delta
        self.location_ = report.witness
        self.box_lower_ = report.box_lower
        self.box_upper_ = report.box_upper
        return self

    def transform(self, X):
        check_is_fitted(self)
        X = validate_data(self, X, dtype=np.float64, reset=False)
        return np.max(np.abs(X - self.location_), axis=1, keepdims=True)

    def score(self, X, y=None, addends=None):
        """Negated minimax objective of the fitted location on ``X``."""
        d = self.transform(X)[:, 0]
        if addends is not None:
            d = d + check_finite_vector(addends, d.shape[0], "addends")
        return -float(np.max(d))
