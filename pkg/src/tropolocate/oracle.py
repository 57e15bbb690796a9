"""Brute-force grid search for the location problem.

Everything here is conventional arithmetic on plain numpy arrays and does
not import the max-plus modules, so agreement with the closed-form solvers
is an independent check.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .exceptions import DimensionMismatch, GridTooLarge, NoFeasibleNode

MAX_NODES = 10**7
_CHUNK = 1 << 17


@dataclass(frozen=True)
class OracleConfig:
    lower: np.ndarray
    upper: np.ndarray
    step: float = 0.05
    feas_tol: float = 1e-6
    max_nodes: int = MAX_NODES

    def __post_init__(self):
        lower = np.asarray(self.lower, dtype=float).ravel()
        upper = np.asarray(self.upper, dtype=float).ravel()
        if lower.shape != upper.shape:
            raise DimensionMismatch("lower and upper bounds differ in length")
        if not (np.all(np.isfinite(lower)) and np.all(np.isfinite(upper))):
            raise ValueError("grid bounds must be finite")
        if np.any(lower >= upper):
            raise ValueError("grid bounds need lower < upper in every coordinate")
        if not self.step > 0:
            raise ValueError("step must be positive")
        if not self.feas_tol > 0:
            raise ValueError("feas_tol must be positive")
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)
        object.__setattr__(self, "step", float(self.step))

    @property
    def shape(self):
        return tuple(int(k) for k in np.floor((self.upper - self.lower) / self.step + 1e-9) + 1)

    @property
    def n_nodes(self):
        return math.prod(self.shape)


class OracleResult(NamedTuple):
    value: float
    argmin: np.ndarray


def objective(problem, x):
    """``max_i (max_k |r_ik - x_k| + w_i)`` in ordinary arithmetic."""
    x = np.asarray(x, dtype=float)
    points = np.asarray(problem.points, dtype=float)
    if x.shape != (points.shape[1],):
        raise DimensionMismatch(f"x must have length {points.shape[1]}")
    return float(np.max(np.max(np.abs(points - x), axis=1) + problem.weights))


def _objective_rows(points, weights, X):
    val = np.full(X.shape[0], -np.inf)
    for r, w in zip(points, weights):
        np.maximum(val, np.max(np.abs(X - r), axis=1) + w, out=val)
    return val


def _feasible_rows(constraint, X, tol):
    A = np.asarray(constraint.matrix, dtype=float)
    ok = np.ones(X.shape[0], dtype=bool)
    for i, row in enumerate(A):
        image = np.max(X + row, axis=1)
        if _kind(constraint) == "equality":
            ok &= np.abs(image - X[:, i]) <= tol
        else:
            ok &= image <= X[:, i] + tol
    return ok


def _kind(constraint):
    kind = constraint.kind
    return getattr(kind, "value", kind)


def feasible(problem, x, tol=1e-6):
    """Whether ``x`` passes the same feasibility filter the grid scan uses."""
    if problem.constraint is None:
        return True
    X = np.asarray(x, dtype=float)[None, :]
    return bool(_feasible_rows(problem.constraint, X, tol)[0])


def default_config(problem, step=0.05, feas_tol=1e-6):
    """Grid bounds that contain an optimal location.

    Unconstrained problems use the sublevel set of the objective at the
    centre of the points' bounding box, which is a box containing every
    minimizer.  Constrained problems use the bounding box inflated by the
    weight range, the point spread and the largest constraint entry.  Bounds
    are snapped outward to integers so grids of different steps nest.
    """
    points = np.asarray(problem.points, dtype=float)
    weights = np.asarray(problem.weights, dtype=float)
    lo, hi = points.min(axis=0), points.max(axis=0)
    if problem.constraint is None:
        level = objective(problem, (lo + hi) / 2)
        radius = (level - weights)[:, None]
        lower = np.max(points - radius, axis=0)
        upper = np.min(points + radius, axis=0)
    else:
        A = np.asarray(problem.constraint.matrix, dtype=float)
        finite = A[np.isfinite(A)]
        pad = np.ptp(weights) + np.max(hi - lo) + (np.max(np.abs(finite)) if finite.size else 0.0)
        lower, upper = lo - pad, hi + pad
    lower = np.floor(lower)
    upper = np.maximum(np.ceil(upper), lower + 1)
    return OracleConfig(lower, upper, step=step, feas_tol=feas_tol)


def grid_minimize(problem, cfg=None):
    """Scan every grid node and return the smallest objective value.

    Ties go to the lexicographically smallest node.  With a constraint,
    only nodes passing the feasibility filter within ``cfg.feas_tol`` count.
    """
    if cfg is None:
        cfg = default_config(problem)
    points = np.asarray(problem.points, dtype=float)
    weights = np.asarray(problem.weights, dtype=float)
    if cfg.lower.shape[0] != points.shape[1]:
        raise DimensionMismatch("grid bounds do not match the problem dimension")
    shape = cfg.shape
    total = cfg.n_nodes
    if total > cfg.max_nodes:
        raise GridTooLarge(f"grid has {total} nodes, limit is {cfg.max_nodes}")

    best_value, best_index = math.inf, -1
    for start in range(0, total, _CHUNK):
        flat = np.arange(start, min(start + _CHUNK, total))
        X = cfg.lower + cfg.step * np.stack(np.unravel_index(flat, shape), axis=1)
        values = _objective_rows(points, weights, X)
        if problem.constraint is not None:
            values[~_feasible_rows(problem.constraint, X, cfg.feas_tol)] = math.inf
        k = int(np.argmin(values))
        if values[k] < best_value:
            best_value, best_index = float(values[k]), int(flat[k])

    if best_index < 0:
        raise NoFeasibleNode("no grid node satisfies the constraint within feas_tol")
    argmin = cfg.lower + cfg.step * np.array(np.unravel_index(best_index, shape), dtype=float)
    return OracleResult(best_value, argmin)
