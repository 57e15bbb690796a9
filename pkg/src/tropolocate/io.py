"""JSON problem and report files.

The zero element ``-inf`` is written as ``null``; every other number must be
finite.  Reports are emitted with a fixed key order so output bytes are
stable for a given input.
"""

import json
import math
from numbers import Real

import numpy as np

from .exceptions import ProblemFileError
from .location import Constraint, ConstraintKind, LocationProblem, SolutionReport


def _reject_constant(name):
    raise ProblemFileError(f"non-finite literal {name} is not allowed; use null for -inf")


def loads(text):
    try:
        return json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ProblemFileError(f"invalid JSON: {exc}") from None


def _is_number(v):
    return isinstance(v, Real) and not isinstance(v, bool) and math.isfinite(v)


def _number_list(value, key, allow_null=False):
    if not isinstance(value, list) or not value:
        raise ProblemFileError(f"'{key}' must be a non-empty array")
    out = []
    for v in value:
        if v is None and allow_null:
            out.append(-math.inf)
        elif _is_number(v):
            out.append(float(v))
        else:
            raise ProblemFileError(f"'{key}' contains {v!r}; expected a finite number"
                                   + (" or null" if allow_null else ""))
    return out


def _number_grid(value, key, allow_null=False):
    if not isinstance(value, list) or not value:
        raise ProblemFileError(f"'{key}' must be a non-empty array of arrays")
    rows = [_number_list(row, key, allow_null) for row in value]
    if len({len(row) for row in rows}) != 1:
        raise ProblemFileError(f"'{key}' is ragged: rows have different lengths")
    return np.array(rows, dtype=float)


def problem_from_dict(doc):
    """Validate a parsed problem document and build a :class:`LocationProblem`."""
    if not isinstance(doc, dict):
        raise ProblemFileError("problem document must be a JSON object")
    if "points" not in doc:
        raise ProblemFileError("missing required key 'points'")
    points = _number_grid(doc["points"], "points")
    m, n = points.shape

    weights = None
    if doc.get("weights") is not None:
        weights = _number_list(doc["weights"], "weights")
        if len(weights) != m:
            raise ProblemFileError(f"'weights' has {len(weights)} entries, expected {m} (one per point)")

    constraint = None
    raw = doc.get("constraint")
    if raw is not None:
        if not isinstance(raw, dict):
            raise ProblemFileError("'constraint' must be an object with 'kind' and 'matrix'")
        kind = raw.get("kind")
        if kind not in (ConstraintKind.EQUALITY.value, ConstraintKind.INEQUALITY.value):
            raise ProblemFileError(f"'constraint.kind' must be 'equality' or 'inequality', got {kind!r}")
        if "matrix" not in raw:
            raise ProblemFileError("missing key 'constraint.matrix'")
        matrix = _number_grid(raw["matrix"], "constraint.matrix", allow_null=True)
        if matrix.shape != (n, n):
            raise ProblemFileError(f"'constraint.matrix' must be {n}x{n}, got {matrix.shape[0]}x{matrix.shape[1]}")
        constraint = Constraint(kind, matrix)

    return LocationProblem(points, weights, constraint)


def load_problem(path):
    with open(path, encoding="utf-8") as fh:
        return problem_from_dict(loads(fh.read()))


def _encode_scalar(v):
    v = float(v)
    if v == -math.inf:
        return None
    return v + 0.0  # drops the sign of -0.0


def _encode_vector(x, digits=None):
    if digits is None:
        return [_encode_scalar(v) for v in x]
    return [_encode_scalar(round(float(v), digits)) for v in x]


def _decode_vector(x):
    return np.array([-math.inf if v is None else float(v) for v in x])


def problem_to_dict(problem):
    doc = {
        "points": [_encode_vector(r) for r in problem.points],
        "weights": _encode_vector(problem.weights),
    }
    if problem.constraint is not None:
        doc["constraint"] = {
            "kind": problem.constraint.kind.value,
            "matrix": [_encode_vector(row) for row in problem.constraint.matrix],
        }
    return doc


def report_to_dict(report, oracle=None):
    """Serialize a report, optionally with an ``oracle`` comparison block.

    ``oracle`` is a mapping with keys ``value``, ``argmin`` and ``step``.
    """
    doc = {
        "constraint_kind": ConstraintKind(report.constraint_kind).value,
        "delta": _encode_scalar(report.delta),
        "witness": _encode_vector(report.witness),
    }
    if report.box_lower is not None:
        doc["box_lower"] = _encode_vector(report.box_lower)
        doc["box_upper"] = _encode_vector(report.box_upper)
    doc["p"] = _encode_vector(report.p)
    doc["q"] = _encode_vector(report.q)
    if oracle is not None:
        doc["oracle"] = {
            "value": _encode_scalar(round(float(oracle["value"]), 10)),
            "argmin": _encode_vector(oracle["argmin"], digits=10),
            "step": float(oracle["step"]),
        }
    return doc


def report_from_dict(doc):
    """Inverse of :func:`report_to_dict`; returns ``(report, oracle_or_None)``."""
    report = SolutionReport(
        delta=float(doc["delta"]),
        witness=_decode_vector(doc["witness"]),
        p=_decode_vector(doc["p"]),
        q=_decode_vector(doc["q"]),
        constraint_kind=ConstraintKind(doc["constraint_kind"]),
        box_lower=_decode_vector(doc["box_lower"]) if "box_lower" in doc else None,
        box_upper=_decode_vector(doc["box_upper"]) if "box_upper" in doc else None,
    )
    oracle = doc.get("oracle")
    if oracle is not None:
        oracle = dict(oracle, argmin=_decode_vector(oracle["argmin"]))
    return report, oracle


def dumps(doc):
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"
