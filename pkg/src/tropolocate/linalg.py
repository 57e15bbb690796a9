"""Vectors and matrices over the max-plus semifield.

Arrays hold floats with ``-inf`` for the zero element.  Orientation is
carried by shape: 1-D arrays are column vectors, ``(1, n)`` arrays are row
vectors, and other 2-D arrays are matrices.  Products follow the usual
conformability rules with ``max`` in place of sum and ``+`` in place of
product.
"""

import numpy as np
from scipy.sparse.csgraph import connected_components

from . import semifield
from ._validation import (
    check_tropical_array,
    check_tropical_matrix,
    check_tropical_vector,
)
from .exceptions import (
    DimensionMismatch,
    EmptyPlus,
    NotRegular,
    NotSquare,
    ZeroVector,
)

EPS = semifield.EPS
ZERO = semifield.ZERO


def identity(n):
    eye = np.full((n, n), ZERO)
    np.fill_diagonal(eye, semifield.ONE)
    return eye


def zeros(shape):
    return np.full(shape, ZERO)


def is_regular(x):
    """True if a vector has no zero entries, or a matrix has no zero rows."""
    x = check_tropical_array(x)
    if x.ndim == 1:
        return bool(np.all(x > ZERO))
    return bool(np.all(np.any(x > ZERO, axis=1)))


def _require_regular(x, name):
    if not is_regular(x):
        raise NotRegular(f"{name} must be regular")


def _require_square(A, name="A"):
    A = check_tropical_matrix(A, name)
    if A.shape[0] != A.shape[1]:
        raise NotSquare(f"{name} must be square, got shape {A.shape}")
    return A


def vec_add(x, y):
    x = check_tropical_array(x, "x")
    y = check_tropical_array(y, "y")
    if x.shape != y.shape:
        raise DimensionMismatch(f"cannot add shapes {x.shape} and {y.shape}")
    return np.maximum(x, y)


mat_add = vec_add


def scal_mul(c, x):
    """Multiply every entry of ``x`` by the scalar ``c``."""
    c = semifield.check_scalar(c)
    x = check_tropical_array(x)
    if c == ZERO:
        return zeros(x.shape)
    # -inf + finite stays -inf; +inf is excluded by validation.
    return x + c


def _product(A, B):
    return np.max(A[:, :, None] + B[None, :, :], axis=1)


def mat_mul(A, B):
    """Max-plus product ``A B``.

    ``A`` is a matrix, a row vector, or a column vector (the latter only
    against a row vector, giving an outer product).  ``B`` is a matrix or a
    column vector; the result has the orientation of ``B``.
    """
    A = check_tropical_array(A, "A")
    B = check_tropical_array(B, "B")
    if A.ndim == 1:
        if B.ndim == 1 or B.shape[0] != 1:
            raise DimensionMismatch(
                f"a column vector can only multiply a row vector, got {B.shape}")
        return _product(A[:, None], B)
    if B.ndim == 1:
        if A.shape[1] != B.shape[0]:
            raise DimensionMismatch(f"cannot multiply {A.shape} by vector of length {B.shape[0]}")
        return _product(A, B[:, None])[:, 0]
    if A.shape[1] != B.shape[0]:
        raise DimensionMismatch(f"cannot multiply {A.shape} by {B.shape}")
    return _product(A, B)


def dot(u, x):
    """Scalar product of a row vector ``u`` (shape ``(1, n)``) with a column ``x``."""
    u = check_tropical_matrix(u, "u")
    if u.shape[0] != 1:
        raise DimensionMismatch(f"left operand must be a row vector, got shape {u.shape}")
    return float(mat_mul(u, x)[0])


def pseudo_inverse(x):
    """Entrywise inverse with transposition, zero entries kept as zero.

    A column vector of length ``n`` becomes a ``(1, n)`` row and a row
    becomes a column.
    """
    x = check_tropical_array(x)
    if x.ndim == 2 and x.shape[0] != 1:
        raise DimensionMismatch(f"pseudo-inverse is defined for vectors, got shape {x.shape}")
    if np.all(x == ZERO):
        raise ZeroVector("pseudo-inverse of the zero vector is undefined")
    out = np.where(x > ZERO, -x, ZERO)
    return out[None, :] if x.ndim == 1 else out[0]


def metric_rho(x, y):
    """Distance ``y^- x + x^- y``; the Chebyshev distance for regular vectors."""
    x = check_tropical_vector(x, "x")
    y = check_tropical_vector(y, "y")
    if x.shape != y.shape:
        raise DimensionMismatch(f"vectors of length {x.size} and {y.size}")
    _require_regular(x, "x")
    _require_regular(y, "y")
    return semifield.oplus(dot(pseudo_inverse(y), x), dot(pseudo_inverse(x), y))


def mat_power(A, k):
    A = _require_square(A)
    P = identity(A.shape[0])
    for _ in range(k):
        P = _product(P, A)
    return P


def trace(A):
    A = _require_square(A)
    return float(np.max(np.diag(A)))


def tr_closure(A):
    """``Tr(A)``: the sum of ``tr(A^m)`` for ``m = 1..n``."""
    A = _require_square(A)
    P = A
    t = trace(P)
    for _ in range(1, A.shape[0]):
        P = _product(P, A)
        t = max(t, trace(P))
    return t


def star(A):
    """Partial Kleene closure ``I + A + ... + A^(n-1)``."""
    A = _require_square(A)
    n = A.shape[0]
    S = P = identity(n)
    for _ in range(n - 1):
        P = _product(P, A)
        S = np.maximum(S, P)
    return S


def times_closure(A):
    """``A A*``."""
    A = _require_square(A)
    return _product(A, star(A))


def span_member(y, X, tol=EPS):
    """Test whether ``y`` lies in the span of the columns of ``X``.

    Returns ``(member, coefficients)`` where ``coefficients[i]`` is the
    largest ``c`` with ``c x_i <= y``.  The combination of the columns with
    these coefficients is the greatest element of the span below ``y``, so
    ``y`` is a member exactly when that combination reaches it.
    """
    y = check_tropical_vector(y, "y")
    X = check_tropical_matrix(X, "X")
    if X.shape[0] != y.shape[0]:
        raise DimensionMismatch(f"X has {X.shape[0]} rows, y has length {y.shape[0]}")
    if np.all(y == ZERO):
        raise ZeroVector("span membership of the zero vector is trivial and not supported")
    finite = X > ZERO
    with np.errstate(invalid="ignore"):
        gaps = np.where(finite, y[:, None] - np.where(finite, X, 0.0), np.inf)
    coef = gaps.min(axis=0)
    # all-zero columns contribute nothing
    coef[np.isposinf(coef)] = ZERO
    combo = mat_mul(X, coef)
    match = np.where(y > ZERO, np.abs(combo - np.where(y > ZERO, y, 0.0)) <= tol, combo == ZERO)
    return bool(np.all(match)), coef


def plus_matrix(A, tol=EPS):
    """Independent columns of ``A x A*`` that carry a unit diagonal entry.

    Columns are scanned in index order and a column is dropped when it lies
    in the span of the other columns still retained.
    """
    X = times_closure(A)
    diag = np.diag(X)
    keep = [j for j in range(X.shape[1]) if diag[j] > ZERO and abs(diag[j]) <= tol]
    if not keep:
        raise EmptyPlus("no column of A x A* has a unit diagonal entry")
    for j in list(keep):
        others = [k for k in keep if k != j]
        if others and span_member(X[:, j], X[:, others], tol)[0]:
            keep.remove(j)
    return X[:, keep]


def is_irreducible(A):
    """True if the digraph of finite entries of ``A`` is strongly connected."""
    A = _require_square(A)
    if A.shape[0] == 1:
        return True
    n_comp, _ = connected_components(A > ZERO, directed=True, connection="strong")
    return n_comp == 1


def leq(x, y, tol=0.0):
    """Componentwise order ``x <= y`` with slack ``tol`` on finite entries."""
    x = check_tropical_array(x, "x")
    y = check_tropical_array(y, "y")
    if x.shape != y.shape:
        raise DimensionMismatch(f"cannot compare shapes {x.shape} and {y.shape}")
    return bool(np.all((x == ZERO) | (x <= y + tol)))


def allclose(x, y, tol=EPS):
    """Entrywise equality: within ``tol`` for finite entries, exact for zero."""
    x = check_tropical_array(x, "x")
    y = check_tropical_array(y, "y")
    if x.shape != y.shape:
        return False
    zx, zy = x == ZERO, y == ZERO
    if np.any(zx != zy):
        return False
    return bool(np.all(np.abs(x[~zx] - y[~zy]) <= tol))
