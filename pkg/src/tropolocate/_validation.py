"""Input validation for arrays over the max-plus semifield.

Orientation is carried by shape: a column vector is a 1-D array of length
``n``, a row vector (co-vector) is a 2-D array of shape ``(1, n)``, and a
matrix is any 2-D array.
"""

import numpy as np
from sklearn.utils.validation import check_array

from .exceptions import DimensionMismatch, DomainError


def _reject_bad_values(arr, name):
    if np.isnan(arr).any() or np.isposinf(arr).any():
        raise DomainError(f"{name} contains NaN or +inf; only reals and -inf are allowed")
    return arr


def check_tropical_vector(x, name="x"):
    """Return ``x`` as a float 1-D array (column vector)."""
    arr = np.asarray(x, dtype=float)
    if arr.ndim != 1:
        raise DimensionMismatch(f"{name} must be a 1-D vector, got shape {arr.shape}")
    if arr.size == 0:
        raise DimensionMismatch(f"{name} must have at least one entry")
    return _reject_bad_values(arr, name)


def check_tropical_matrix(A, name="A"):
    """Return ``A`` as a float 2-D array with at least one row and column."""
    arr = np.asarray(A, dtype=float)
    if arr.ndim != 2:
        raise DimensionMismatch(f"{name} must be a 2-D matrix, got shape {arr.shape}")
    if arr.shape[0] == 0 or arr.shape[1] == 0:
        raise DimensionMismatch(f"{name} must be non-empty, got shape {arr.shape}")
    return _reject_bad_values(arr, name)


def check_tropical_array(x, name="x"):
    """Accept either a vector or a matrix."""
    arr = np.asarray(x, dtype=float)
    if arr.ndim == 1:
        return check_tropical_vector(arr, name)
    return check_tropical_matrix(arr, name)


def check_points(X, name="points"):
    """Points are finite real coordinates, one point per row."""
    return check_array(X, dtype=np.float64, ensure_all_finite=True, input_name=name)


def check_finite_vector(x, n=None, name="x"):
    x = check_array(np.asarray(x, dtype=float).reshape(1, -1), dtype=np.float64,
                    ensure_all_finite=True, input_name=name).ravel()
    if n is not None and x.shape[0] != n:
        raise DimensionMismatch(f"{name} has length {x.shape[0]}, expected {n}")
    return x
