"""
tests > cli > scene_test

Tests for reading and writing scene files

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

import json
from pathlib import Path
from typing import Any

import pytest

from classifier import Hypotheses
from cli.scene import dumpScene, loadScene, parseScene, serializeScene
from common.exceptions import MissingLabelError, SceneParseError
from curves import HomPoly
from tests.helpers.scenes import FIXTURE_NAMES, fixture, writeScene

IDENTITY = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
LINE = {"label": "L", "terms": [{"exp": [1, 0, 0], "coeff": 1}]}


def scene(**changes: Any) -> dict[str, Any]:
    data: dict[str, Any] = {
        "schema": "1",
        "group": [{"label": "g", "matrix": IDENTITY}],
        "curve": [LINE],
    }
    data.update(changes)
    return data


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_fixtures_load(name: str):
    loaded = loadScene(fixture(name))
    assert len(loaded.group) >= 1


def test_complex_entries():
    loaded = parseScene(scene(
        group=[{
            "label": "g",
            "matrix": [[1, 0, [0, 1]], [0, 1, 0], [0, 0, 1]],
        }],
        curve=[{"label": "L", "terms": [
            {"exp": [0, 1, 0], "coeff": [0.5, -2]},
            {"exp": [0, 1, 0], "coeff": 1},
        ]}],
    ))
    assert loaded.generator("g").matrix[0, 2] != 0
    assert loaded.component("L").polynomial.coefficient((0, 1, 0)) \
        == complex(1.5, -2)


def test_assertions():
    loaded = parseScene(scene(assertions={
        "infinite": True,
        "virtually_commutative": False,
    }))
    assert loaded.hypotheses == Hypotheses(
        infinite=True, virtually_commutative=False)
    assert parseScene(scene()).hypotheses == Hypotheses()


def test_curve_may_be_empty():
    assert parseScene(scene(curve=[])).componentLabels == []


@pytest.mark.parametrize(
    "data",
    [
        [],
        scene(schema="2"),
        scene(group=[]),
        scene(group={"g": IDENTITY}),
        scene(group=[{"matrix": IDENTITY}]),
        scene(group=[{"label": "g", "matrix": [[1, 0], [0, 1]]}]),
        scene(group=[{"label": "g", "matrix": [[1, 0, 0], [0, 1, 0]]}]),
        scene(group=[{"label": "g", "matrix": [[1, 1, 0]] * 3}]),
        scene(group=[{"label": "g", "matrix": [[True, 0, 0]] * 3}]),
        scene(group=[{"label": "g", "matrix": [["1", 0, 0]] * 3}]),
        scene(group=[
            {"label": "g", "matrix": IDENTITY},
            {"label": "g", "matrix": IDENTITY},
        ]),
        scene(curve=[LINE, LINE]),
        scene(curve=[{"label": "L", "terms": []}]),
        scene(curve=[{"label": "L", "terms": [
            {"exp": [1, 0, 0], "coeff": 1},
            {"exp": [2, 0, 0], "coeff": 1},
        ]}]),
        scene(curve=[{"label": "L", "terms": [
            {"exp": [1, -1, 1], "coeff": 1},
        ]}]),
        scene(curve=[{"label": "L", "terms": [
            {"exp": [1, 0, 0], "coeff": 0},
        ]}]),
        scene(curve=[{"label": "L", "terms": [
            {"exp": [1, 0, 0], "coeff": [1, 2, 3]},
        ]}]),
        scene(assertions={"discrete": True}),
        scene(assertions={"infinite": "yes"}),
        scene(assertions=[True]),
    ]
)
def test_parse_errors(data: Any):
    with pytest.raises(SceneParseError) as e:
        parseScene(data)
    assert e.value.exit_code == 2


def test_missing_labels():
    loaded = parseScene(scene())
    with pytest.raises(MissingLabelError) as e:
        loaded.component("M")
    assert e.value.exit_code == 3
    with pytest.raises(MissingLabelError):
        loaded.generator("h")


def test_unreadable_files(tmp_path: Path):
    with pytest.raises(SceneParseError):
        loadScene(str(tmp_path / "missing.json"))
    broken = tmp_path / "broken.json"
    broken.write_text("{\"group\": [", encoding="utf-8")
    with pytest.raises(SceneParseError):
        loadScene(str(broken))


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_serialized_scenes_parse_back(name: str):
    original = loadScene(fixture(name))
    parsed = parseScene(serializeScene(original))
    assert parsed.group.labels == original.group.labels
    for label, g in original.group:
        assert parsed.generator(label).isEqual(g)
    assert parsed.componentLabels == original.componentLabels
    for c in original.components:
        assert parsed.component(c.label).polynomial.isEqual(c.polynomial)
    assert parsed.hypotheses == original.hypotheses


def test_dumped_scenes_load(tmp_path: Path):
    original = loadScene(fixture("cubic_axis_lines"))
    text = dumpScene(original)
    assert json.loads(text) == serializeScene(original)
    loaded = loadScene(writeScene(tmp_path, json.loads(text)))
    assert loaded.component("C").polynomial == HomPoly(
        3, {(1, 2, 0): 1, (0, 0, 3): -1})
