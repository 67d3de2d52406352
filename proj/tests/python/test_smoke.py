import json
import os
import pathlib
import subprocess

import pytest
import jsonschema
from referencing import Registry, Resource

import veronormal

SCHEMAS = pathlib.Path(os.environ.get("VERONORMAL_SCHEMAS", pathlib.Path(__file__).parents[2] / "schemas"))
CLI = os.environ.get("VERONORMAL_CLI")


def _registry():
    resources = []
    for p in SCHEMAS.glob("*.schema.json"):
        doc = json.loads(p.read_text())
        resources.append((doc["$id"], Resource.from_contents(doc)))
    return Registry().with_resources(resources)


def validate(doc, name):
    schema = json.loads((SCHEMAS / f"{name}.schema.json").read_text())
    jsonschema.Draft202012Validator(schema, registry=_registry()).validate(doc)


def test_normal_quadric_surface():
    out = veronormal.normal(2, 2)
    assert out["rank"] == 3 and out["degree"] == 9 and out["slope"] == "3"
    assert out["chern"] == ["1", "9", "30"]
    validate(out, "normal")


def test_degree_one_rejected():
    with pytest.raises(veronormal.MathError, match="d=1 is an isomorphism"):
        veronormal.normal(3, 1)


def test_restrict_lines_and_curves():
    lines = veronormal.restrict(3, 2, "line", seed=0, samples=3)
    assert all(s["splitting"]["degrees"] == [4, 3, 3, 2, 2, 2] for s in lines["samples"])
    curves = veronormal.restrict(2, 2, "rnc", seed=1, samples=2)
    assert all(s["splitting"]["degrees"] == [6, 6, 6] for s in curves["samples"])
    validate(lines, "restrict")


def test_restrict_missing_file():
    with pytest.raises(veronormal.FormatError):
        veronormal.restrict(2, 2, "file", path="/nonexistent/curve.json", samples=1)


def test_slopes():
    out = veronormal.slopes(2, 2)
    assert [r["slope"] for r in out["rows"]] == ["-1", "-2/5", "0"]
    validate(out, "slopes")


def test_splitting_type_from_presentation():
    pres = {"numVars": 2, "sourceTwists": [-1], "targetTwists": [0, 0], "entries": [["s"], ["t"]]}
    assert veronormal.splitting_type(pres) == [1]


def test_criterion_through_binding():
    passed, detail, _ = veronormal.run_criterion("C1")
    assert passed, detail


@pytest.mark.skipif(CLI is None, reason="command-line tool not built")
@pytest.mark.parametrize("args,name", [
    (["normal", "--n", "3", "--d", "3"], "normal"),
    (["slopes", "--n", "4", "--d", "5"], "slopes"),
    (["restrict", "--n", "2", "--d", "3", "--samples", "2"], "restrict"),
    (["restrict", "--n", "2", "--d", "2", "--curve", "file", "--path",
      str(pathlib.Path(__file__).parents[2] / "data" / "twisted_conic.json")], "restrict"),
])
def test_cli_output_matches_schema(args, name):
    out = subprocess.run([CLI, *args], check=True, capture_output=True, text=True).stdout
    validate(json.loads(out), name)


@pytest.mark.skipif(CLI is None, reason="command-line tool not built")
def test_cli_verify_report_schema(tmp_path):
    report = tmp_path / "verify.json"
    subprocess.run([CLI, "verify", "--scope", "fast", "--out", str(report)], check=True, capture_output=True)
    validate(json.loads(report.read_text()), "verify")


def test_curve_example_schema():
    validate(json.loads((pathlib.Path(__file__).parents[2] / "data" / "twisted_conic.json").read_text()), "curve")
