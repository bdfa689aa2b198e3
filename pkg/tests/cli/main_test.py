"""
tests > cli > main_test

Tests for the command line, including exit codes and machine-readable
output

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

import json
from pathlib import Path

import pytest
from jestspectation import Any

from cli import main
from tests.helpers.scenes import fixture, writeScene

ELEMENTS = fixture("elements")


def run(capsys, *argv: str) -> tuple[int, str]:
    code = main(list(argv))
    return code, capsys.readouterr().out


def runMachine(capsys, *argv: str) -> tuple[int, dict]:
    code, out = run(capsys, *argv, "--format", "machine")
    return code, json.loads(out)


@pytest.mark.parametrize(
    ("label", "kind"),
    [
        ("unipotent", "parabolic"),
        ("loxodromic", "loxodromic"),
        ("identity", "elliptic"),
        ("rotation", "elliptic"),
    ]
)
def test_classify_element(capsys, label: str, kind: str):
    code, doc = runMachine(capsys, "classify-element", ELEMENTS, label)
    assert code == 0
    assert doc["schema_version"] == "1"
    assert doc["command"] == "classify-element"
    assert doc["result"]["label"] == label
    assert doc["result"]["kind"] == kind
    assert doc["result"]["lift"] == Any(list)


def test_classify_element_text(capsys):
    code, out = run(capsys, "classify-element", ELEMENTS, "loxodromic")
    assert code == 0
    assert "loxodromic" in out


@pytest.mark.parametrize(
    ("label", "rank", "kernel"),
    [
        ("loxodromic", 1, "line"),
        ("unipotent", 1, "line"),
        ("identity", 3, "empty"),
    ]
)
def test_power_limit(capsys, label: str, rank: int, kernel: str):
    code, doc = runMachine(capsys, "power-limit", ELEMENTS, label)
    assert code == 0
    assert doc["result"]["rank"] == rank
    assert doc["result"]["kernel"]["type"] == kernel


def test_power_limit_of_rotation_diverges(capsys):
    code, doc = runMachine(capsys, "power-limit", ELEMENTS, "rotation")
    assert code == 4
    assert doc["error"]["type"] == "NonConvergentError"
    assert doc["error"]["exit_code"] == 4


@pytest.mark.parametrize(
    ("label", "nodes", "cusps", "genus"),
    [
        ("cusp", 0, 1, 0),
        ("node", 1, 0, 0),
        ("conic", 0, 0, 0),
    ]
)
def test_curve_invariants(
    capsys,
    label: str,
    nodes: int,
    cusps: int,
    genus: int,
):
    code, doc = runMachine(capsys, "curve-invariants", ELEMENTS, label)
    assert code == 0
    result = doc["result"]
    assert (result["nodes"], result["cusps"], result["genus"]) \
        == (nodes, cusps, genus)
    assert result["consistent"]


def test_dual_curve(capsys):
    code, doc = runMachine(capsys, "dual-curve", ELEMENTS, "cusp")
    assert code == 0
    assert doc["result"]["degree"] == 3
    code, out = run(capsys, "dual-curve", ELEMENTS, "conic")
    assert code == 0
    assert "degree 2" in out


def test_dual_of_nodal_cubic_is_unsupported(capsys):
    code, doc = runMachine(capsys, "dual-curve", ELEMENTS, "node")
    assert code == 1
    assert doc["error"]["type"] == "UnsupportedDualError"


@pytest.mark.parametrize(
    ("name", "code"),
    [
        ("cubic_axis_lines", 0),
        ("veronese_iota", 0),
        ("pencil_lines", 0),
        ("four_general_lines", 5),
        ("perturbed_cubic", 6),
    ]
)
def test_report_exit_codes(capsys, name: str, code: int):
    assert run(capsys, "report", fixture(name))[0] == code


def test_report_document(capsys):
    code, doc = runMachine(capsys, "report", fixture("cubic_axis_lines"))
    assert code == 0
    result = doc["result"]
    assert result["compliant"] is True
    assert [c["label"] for c in result["components"]] == ["C", "X", "Y"]
    assert result["components"][0]["class"]["kind"] == "cuspidal-cubic"
    assert result["lines"]["max_nonconcurrent"] == 2
    assert result["tangency"]["C"]["tangents"] == 2
    assert {v["status"] for v in result["verdicts"]} \
        <= {"compliant", "not-applicable"}


def test_report_output_is_deterministic(capsys):
    first = run(capsys, "report", fixture("four_general_lines"),
                "--format", "machine")
    second = run(capsys, "report", fixture("four_general_lines"),
                 "--format", "machine")
    assert first == second


def test_not_invariant_error_document(capsys):
    code, doc = runMachine(capsys, "report", fixture("perturbed_cubic"))
    assert code == 6
    assert doc["error"]["type"] == "OrbitNotInvariantError"
    assert doc["error"]["component"] == "C"
    assert doc["error"]["residual"] > 0


def test_invariance_check(capsys):
    code, doc = runMachine(
        capsys, "invariance-check", fixture("cubic_axis_lines"))
    assert code == 0
    assert doc["result"]["invariant"] is True
    assert len(doc["result"]["checks"]) == 3


def test_invariance_check_failure(capsys):
    code, doc = runMachine(
        capsys,
        "invariance-check",
        fixture("perturbed_cubic"),
        "--component", "C",
    )
    assert code == 6
    [check] = doc["result"]["checks"]
    assert check["invariant"] is False
    assert check["scale"] is None


def test_invariance_check_restricted(capsys):
    code, doc = runMachine(
        capsys,
        "invariance-check",
        fixture("four_general_lines"),
        "--generator", "r",
        "--component", "W",
    )
    assert code == 0
    assert doc["result"]["checks"] == [{
        "generator": "r",
        "component": "W",
        "invariant": True,
        "scale": Any(list),
        "residual": Any(float),
    }]


@pytest.mark.parametrize(
    "argv",
    [
        ("classify-element", ELEMENTS, "missing"),
        ("curve-invariants", ELEMENTS, "missing"),
        ("invariance-check", ELEMENTS, "--generator", "missing"),
    ]
)
def test_missing_label(capsys, argv: tuple[str, ...]):
    code, out = run(capsys, *argv)
    assert code == 3
    assert out == ""


def test_bad_scene_file(capsys, tmp_path: Path):
    path = writeScene(tmp_path, {"group": []})
    code, doc = runMachine(capsys, "report", path)
    assert code == 2
    assert doc["error"]["type"] == "SceneParseError"
    assert run(capsys, "report", str(tmp_path / "missing.json"))[0] == 2


def test_error_message_on_stderr(capsys):
    assert main(["classify-element", ELEMENTS, "missing"]) == 3
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "excurve: error:" in captured.err


def test_tolerance_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("EXCURVE_TOL", "1e-8")
    assert run(capsys, "report", fixture("cubic_axis_lines"))[0] == 0
    monkeypatch.setenv("EXCURVE_TOL", "tiny")
    with pytest.raises(SystemExit) as e:
        main(["report", fixture("cubic_axis_lines")])
    assert e.value.code == 2


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["unknown-command"],
        ["report"],
        ["report", ELEMENTS, "--tol", "-1"],
        ["report", ELEMENTS, "--format", "yaml"],
    ]
)
def test_usage_errors(argv: list[str]):
    with pytest.raises(SystemExit) as e:
        main(argv)
    assert e.value.code == 2


def test_options_are_accepted(capsys):
    code, _ = run(
        capsys,
        "report", fixture("veronese_iota"),
        "--tol", "1e-9", "--seed", "3", "-vv",
    )
    assert code == 0
