"""Random instance generators and strategies shared by the test modules."""

import math
from fractions import Fraction

import numpy as np
from hypothesis import strategies as st

from tropolocate import linalg

NEG_INF = -math.inf

finite = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False, allow_infinity=False)
small_int = st.integers(min_value=-10, max_value=10).map(float)
scalar = st.one_of(st.just(NEG_INF), small_int, finite)


def vectors(n, elements=small_int):
    return st.lists(elements, min_size=n, max_size=n).map(np.array)


def matrices(m, n, elements=small_int):
    return st.lists(st.lists(elements, min_size=n, max_size=n), min_size=m, max_size=m).map(np.array)


def max_cycle_mean(A):
    """Exact maximum cycle mean of an integer matrix by enumerating powers."""
    n = A.shape[0]
    best = None
    P = A
    for k in range(1, n + 1):
        if k > 1:
            P = linalg.mat_mul(P, A)
        d = np.max(np.diag(P))
        if d > NEG_INF:
            mean = Fraction(int(d), k)
            best = mean if best is None or mean > best else best
    return best


def irreducible_matrix(rng, n, low=-6, high=3, sparsity=0.0):
    """Integer irreducible matrix; entries dropped to -inf with probability ``sparsity``."""
    while True:
        A = rng.integers(low, high + 1, size=(n, n)).astype(float)
        A[rng.random((n, n)) < sparsity] = NEG_INF
        if linalg.is_irreducible(A) and max_cycle_mean(A) is not None:
            return A


def trace_one_matrix(rng, n, **kw):
    """Integer irreducible matrix with Tr(A) = 0 (maximum cycle mean shifted to 0)."""
    while True:
        A = irreducible_matrix(rng, n, **kw)
        lam = max_cycle_mean(A)
        if lam.denominator == 1:
            return np.where(A > NEG_INF, A - int(lam), NEG_INF)


def trace_at_most_one_matrix(rng, n, **kw):
    A = trace_one_matrix(rng, n, **kw)
    return np.where(A > NEG_INF, A - int(rng.integers(0, 3)), NEG_INF)


ACCEPTANCE_RESULTS = {}


def criterion(number, title):
    """Record PASS/FAIL for an acceptance test so the run can print a summary line."""
    import functools

    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                ACCEPTANCE_RESULTS[number] = (title, "FAIL")
                print(f"[acceptance {number}] FAIL  {title}")
                raise
            ACCEPTANCE_RESULTS[number] = (title, "PASS")
            print(f"[acceptance {number}] PASS  {title}")
        return wrapper
    return deco
