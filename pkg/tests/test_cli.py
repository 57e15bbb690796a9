import json
import subprocess
import sys
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from tropolocate import io
from tropolocate.cli import main

DATA = Path(__file__).parent / "data"
GOLDEN = DATA / "golden"
CASES = ["unconstrained", "equality", "inequality"]
SVG = "{http://www.w3.org/2000/svg}"


def run(argv, capsys):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, doc, name="p.json"):
    path = tmp_path / name
    path.write_text(doc if isinstance(doc, str) else json.dumps(doc))
    return path


@pytest.mark.parametrize("case", CASES)
def test_solve_matches_golden(case, capsys):
    code, out, _ = run(["solve", DATA / f"example_{case}.json"], capsys)
    assert code == 0
    assert out == (GOLDEN / f"{case}.json").read_text()


@pytest.mark.parametrize("case,delta,witness", [
    ("unconstrained", 4, [2, 9]), ("equality", 10, [8, 3]), ("inequality", 6, [4, 7])])
def test_report_values(case, delta, witness, capsys):
    _, out, _ = run(["solve", DATA / f"example_{case}.json"], capsys)
    doc = json.loads(out)
    assert doc["delta"] == delta and doc["witness"] == witness
    assert doc["constraint_kind"] == ("none" if case == "unconstrained" else case)
    assert ("box_lower" in doc) == (case == "unconstrained")


@pytest.mark.parametrize("case", CASES)
def test_report_round_trip(case):
    text = (GOLDEN / f"{case}.json").read_text()
    report, oracle = io.report_from_dict(json.loads(text))
    assert io.dumps(io.report_to_dict(report, oracle)) == text


def test_oracle_block(capsys):
    code, out, _ = run(["solve", DATA / "example_equality.json", "--oracle", "--step", "0.1"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["oracle"] == {"value": 10.0, "argmin": [8.0, 3.0], "step": 0.1}
    report, oracle = io.report_from_dict(doc)
    assert io.dumps(io.report_to_dict(report, oracle)) == out


def test_text_format(capsys):
    code, out, _ = run(["solve", DATA / "example_inequality.json", "--format", "text"], capsys)
    assert code == 0
    assert "optimum:    6" in out and "(4, 7)" in out


def test_premise_violation_exit_code(capsys):
    code, out, err = run(["solve", DATA / "premise_violation.json"], capsys)
    assert code == 2 and out == ""
    assert "Tr(A)" in err and len(err.strip().splitlines()) == 1


def test_reducible_exit_code(tmp_path, capsys):
    path = write(tmp_path, {"points": [[0, 0]], "constraint": {"kind": "equality", "matrix": [[0, None], [None, 0]]}})
    code, _, err = run(["solve", path], capsys)
    assert code == 2 and "irreducible" in err


def test_tolerance_from_environment(tmp_path, capsys, monkeypatch):
    path = write(tmp_path, {"points": [[0, 0]],
                            "constraint": {"kind": "equality", "matrix": [[1e-7, -3], [-5, -2]]}})
    assert run(["solve", path], capsys)[0] == 2
    monkeypatch.setenv("TROPOLOCATE_TOL", "1e-6")
    assert run(["solve", path], capsys)[0] == 0
    assert run(["solve", path, "--tol", "1e-9"], capsys)[0] == 2
    monkeypatch.setenv("TROPOLOCATE_TOL", "abc")
    assert run(["solve", path], capsys)[0] == 1


@pytest.mark.parametrize("doc,key", [
    ('{"points": [[0, 1], [2]]}', "points"),
    ('{"points": [[0, NaN]]}', "NaN"),
    ('{"points": [[0, Infinity]]}', "Infinity"),
    ('{"points": [[0, null]]}', "points"),
    ('{"points": [[0, "1"]]}', "points"),
    ('{"points": []}', "points"),
    ('{"weights": [1]}', "points"),
    ('{"points": [[0, 1]], "weights": [1, 2]}', "weights"),
    ('{"points": [[0, 1]], "constraint": {"kind": "equality", "matrix": [[0]]}}', "constraint.matrix"),
    ('{"points": [[0, 1]], "constraint": {"kind": "equality", "matrix": [[0, 1], [2]]}}', "constraint.matrix"),
    ('{"points": [[0, 1]], "constraint": {"kind": "sideways", "matrix": [[0, 0], [0, 0]]}}', "constraint.kind"),
    ('{"points": [[0, 1]], "constraint": {"kind": "equality"}}', "constraint.matrix"),
    ('[1, 2]', "object"),
    ('{"points": ', "JSON"),
])
def test_schema_errors(doc, key, tmp_path, capsys):
    code, out, err = run(["solve", write(tmp_path, doc)], capsys)
    assert code == 1 and out == ""
    assert key in err


def test_missing_file(capsys):
    assert run(["solve", "/nonexistent/problem.json"], capsys)[0] == 1


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["solve"])
    assert exc.value.code == 1


@pytest.mark.parametrize("case", CASES)
def test_plot_matches_golden(case, tmp_path, capsys):
    out = tmp_path / "out.svg"
    code, _, _ = run(["plot", DATA / f"example_{case}.json", "--out", out], capsys)
    assert code == 0
    assert out.read_bytes() == (GOLDEN / f"{case}.svg").read_bytes()


def _markers(svg_path, cls):
    root = ET.parse(svg_path).getroot()
    return [el for el in root.iter() if el.get("class") == cls]


def test_plot_unconstrained_content():
    points = _markers(GOLDEN / "unconstrained.svg", "point")
    assert len(points) == 2
    (witness,) = _markers(GOLDEN / "unconstrained.svg", "witness")
    assert (witness.get("data-x"), witness.get("data-y")) == ("2", "9")
    assert len(_markers(GOLDEN / "unconstrained.svg", "solution-set")) == 1
    assert not _markers(GOLDEN / "unconstrained.svg", "constraint")


def test_plot_equality_content():
    lines = _markers(GOLDEN / "equality.svg", "constraint")
    assert sorted(line.get("data-offset") for line in lines) == ["-5", "3"]
    for line in lines:
        dx = float(line.get("x2")) - float(line.get("x1"))
        dy = float(line.get("y2")) - float(line.get("y1"))
        assert dx == pytest.approx(-dy)
    (witness,) = _markers(GOLDEN / "equality.svg", "witness")
    assert (witness.get("data-x"), witness.get("data-y")) == ("8", "3")


def test_plot_single_point(tmp_path, capsys):
    out = tmp_path / "one.svg"
    assert run(["plot", DATA / "single_point.json", "--out", out], capsys)[0] == 0
    (witness,) = _markers(out, "witness")
    (point,) = _markers(out, "point")
    assert (witness.get("cx"), witness.get("cy")) == (point.get("cx"), point.get("cy"))


def test_plot_rejects_other_dimensions(tmp_path, capsys):
    path = write(tmp_path, {"points": [[0, 1, 2]]})
    code, _, err = run(["plot", path, "--out", tmp_path / "x.svg"], capsys)
    assert code == 1 and "2-D" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "tropolocate", "solve", str(DATA / "example_unconstrained.json")],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == (GOLDEN / "unconstrained.json").read_text()
