import numpy as np
import pytest
from sklearn.base import clone
from sklearn.pipeline import make_pipeline
from sklearn.preprocessing import FunctionTransformer
from sklearn.utils.estimator_checks import parametrize_with_checks

from tropolocate import ChebyshevCenter, NotIrreducible, PremiseViolation

POINTS = np.array([[-2.0, 5.0], [6.0, 13.0]])
A62 = np.array([[0.0, -3.0], [-5.0, -2.0]])


@parametrize_with_checks([ChebyshevCenter()])
def test_sklearn_compatible(estimator, check):
    check(estimator)


@pytest.mark.parametrize("kind,delta,location", [
    (None, 4, [2, 9]), ("equality", 10, [8, 3]), ("inequality", 6, [4, 7])])
def test_worked_example(kind, delta, location):
    est = ChebyshevCenter(constraint=kind, constraint_matrix=None if kind is None else A62).fit(POINTS)
    assert est.delta_ == delta
    np.testing.assert_array_equal(est.location_, location)
    np.testing.assert_array_equal(est.transform(POINTS).ravel(), [delta, delta])
    assert est.score(POINTS) == -delta


def test_addends():
    est = ChebyshevCenter().fit([[0.0, 0.0], [2.0, 2.0]], addends=[1.0, 0.0])
    assert est.delta_ == 1.5
    assert est.score([[0.0, 0.0], [2.0, 2.0]], addends=[1.0, 0.0]) == -1.5
    with pytest.raises(ValueError):
        est.fit([[0.0, 0.0]], addends=[1.0, 2.0])


def test_params_and_clone():
    est = ChebyshevCenter(constraint="equality", constraint_matrix=A62, tol=1e-6)
    assert est.get_params()["tol"] == 1e-6
    twin = clone(est).set_params(constraint="inequality")
    assert twin.fit(POINTS).delta_ == 6
    assert not hasattr(est, "delta_")


def test_errors():
    with pytest.raises(ValueError, match="constraint_matrix"):
        ChebyshevCenter(constraint="equality").fit(POINTS)
    with pytest.raises(PremiseViolation):
        ChebyshevCenter(constraint="inequality", constraint_matrix=A62 + 1).fit(POINTS)
    with pytest.raises(NotIrreducible):
        ChebyshevCenter(constraint="equality", constraint_matrix=[[0.0, -np.inf], [-np.inf, 0.0]]).fit(POINTS)


def test_in_pipeline():
    pipe = make_pipeline(FunctionTransformer(lambda X: X + 1.0), ChebyshevCenter())
    pipe.fit(POINTS)
    np.testing.assert_array_equal(pipe[-1].location_, [3, 10])
