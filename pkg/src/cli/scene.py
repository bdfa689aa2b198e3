"""
cli > scene

Scene files: JSON documents describing a group by labelled generator
matrices, a curve by labelled polynomial components, and the hypotheses
asserted about the group.

```json
{
    "schema": "1",
    "group": [
        {"label": "g", "matrix": [[1, 0, 0], [0, 2, 0], [0, 0, [0, 1]]]}
    ],
    "curve": [
        {"label": "C", "terms": [{"exp": [1, 2, 0], "coeff": [1, 0]}]}
    ],
    "assertions": {"infinite": true, "virtually_cyclic": true}
}
```

Complex numbers are given as `[re, im]`, or as plain real numbers.

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

__all__ = [
    'SCENE_SCHEMA',
    'Scene',
    'parseScene',
    'loadScene',
    'serializeScene',
    'dumpScene',
]

import json
from dataclasses import dataclass
from typing import Any

from classifier import CurveComponent, GroupPresentation, Hypotheses
from common.exceptions import (
    ClassifierError,
    MissingLabelError,
    NumericInputError,
    ProjectiveError,
    SceneParseError,
)
from common.logger import log, verbosity
from curves import HomPoly
from projective import ProjTransform

SCENE_SCHEMA = "1"
"""Schema version of scene files"""

ASSERTION_KEYS = ("infinite", "virtually_cyclic", "virtually_commutative")


@dataclass(frozen=True, eq=False)
class Scene:
    group: GroupPresentation
    components: tuple[CurveComponent, ...]
    hypotheses: Hypotheses

    def generator(self, label: str) -> ProjTransform:
        return self.group[label]

    def component(self, label: str) -> CurveComponent:
        """
        ### Raises:
        * `MissingLabelError`: no component has the label
        """
        for c in self.components:
            if c.label == label:
                return c
        raise MissingLabelError(f"No curve component labelled '{label}'")

    @property
    def componentLabels(self) -> list[str]:
        return [c.label for c in self.components]


def _parseComplex(value: Any, where: str) -> complex:
    if isinstance(value, bool):
        raise SceneParseError(f"Expected a number at {where}")
    if isinstance(value, (int, float)):
        return complex(value)
    if (
        isinstance(value, list)
        and len(value) == 2
        and all(
            isinstance(v, (int, float)) and not isinstance(v, bool)
            for v in value
        )
    ):
        return complex(value[0], value[1])
    raise SceneParseError(
        f"Expected a number or [re, im] at {where}, not {value!r}")


def _expectList(value: Any, where: str) -> list:
    if not isinstance(value, list):
        raise SceneParseError(f"Expected a list at {where}")
    return value


def _expectLabel(entry: Any, where: str) -> str:
    if not isinstance(entry, dict):
        raise SceneParseError(f"Expected an object at {where}")
    label = entry.get("label")
    if not isinstance(label, str) or not label:
        raise SceneParseError(f"Missing label at {where}")
    return label


def _parseGenerator(entry: Any, where: str) -> tuple[str, ProjTransform]:
    label = _expectLabel(entry, where)
    rows = _expectList(entry.get("matrix"), f"{where}.matrix")
    if len(rows) != 3:
        raise SceneParseError(f"Matrix of '{label}' must have 3 rows")
    matrix = []
    for i, row in enumerate(rows):
        row = _expectList(row, f"{where}.matrix[{i}]")
        if len(row) != 3:
            raise SceneParseError(f"Matrix of '{label}' must have 3 columns")
        matrix.append([
            _parseComplex(v, f"{where}.matrix[{i}][{j}]")
            for j, v in enumerate(row)
        ])
    try:
        return label, ProjTransform(matrix)
    except (NumericInputError, ProjectiveError) as e:
        raise SceneParseError(f"Invalid generator '{label}': {e}") from e


def _parseComponent(entry: Any, where: str) -> CurveComponent:
    label = _expectLabel(entry, where)
    terms = _expectList(entry.get("terms"), f"{where}.terms")
    if not terms:
        raise SceneParseError(f"Component '{label}' has no terms")
    coefficients: dict[tuple[int, int, int], complex] = {}
    degrees = set()
    for k, term in enumerate(terms):
        at = f"{where}.terms[{k}]"
        if not isinstance(term, dict):
            raise SceneParseError(f"Expected an object at {at}")
        exp = _expectList(term.get("exp"), f"{at}.exp")
        if len(exp) != 3 or not all(
            isinstance(e, int) and not isinstance(e, bool) and e >= 0
            for e in exp
        ):
            raise SceneParseError(
                f"Exponent at {at} must be 3 nonnegative integers")
        key = (exp[0], exp[1], exp[2])
        degrees.add(sum(key))
        coefficients[key] = coefficients.get(key, 0) \
            + _parseComplex(term.get("coeff"), f"{at}.coeff")
    if len(degrees) != 1:
        raise SceneParseError(f"Component '{label}' isn't homogeneous")
    try:
        return CurveComponent(label, HomPoly(degrees.pop(), coefficients))
    except NumericInputError as e:
        raise SceneParseError(f"Invalid component '{label}': {e}") from e


def _parseAssertions(value: Any) -> Hypotheses:
    if value is None:
        return Hypotheses()
    if not isinstance(value, dict):
        raise SceneParseError("Expected an object for assertions")
    for key, flag in value.items():
        if key not in ASSERTION_KEYS:
            raise SceneParseError(f"Unknown assertion '{key}'")
        if flag is not None and not isinstance(flag, bool):
            raise SceneParseError(f"Assertion '{key}' must be a boolean")
    return Hypotheses(**value)


def parseScene(data: Any) -> Scene:
    """
    Build a scene from a decoded JSON document

    ### Args:
    * `data` (`Any`): decoded document

    ### Raises:
    * `SceneParseError`: the document isn't a valid scene

    ### Returns:
    * `Scene`: scene
    """
    if not isinstance(data, dict):
        raise SceneParseError("A scene must be a JSON object")
    schema = data.get("schema", SCENE_SCHEMA)
    if schema != SCENE_SCHEMA:
        raise SceneParseError(f"Unsupported scene schema {schema!r}")
    generators = [
        _parseGenerator(entry, f"group[{i}]")
        for i, entry in enumerate(_expectList(data.get("group"), "group"))
    ]
    components = tuple(
        _parseComponent(entry, f"curve[{i}]")
        for i, entry in enumerate(_expectList(data.get("curve", []), "curve"))
    )
    labels = [c.label for c in components]
    for label in labels:
        if labels.count(label) > 1:
            raise SceneParseError(
                f"Component label '{label}' is used more than once")
    try:
        group = GroupPresentation(generators)
    except (ClassifierError, NumericInputError) as e:
        raise SceneParseError(str(e)) from e
    scene = Scene(group, components, _parseAssertions(data.get("assertions")))
    log(
        "cli.scene",
        f"Parsed scene with generators {', '.join(group.labels)} and "
        f"components {', '.join(labels) or '(none)'}",
        verbosity.INFO,
    )
    return scene


def loadScene(path: str) -> Scene:
    """
    Read and parse a scene file

    ### Raises:
    * `SceneParseError`: the file can't be read, isn't JSON or isn't a
      valid scene
    """
    try:
        with open(path, encoding="utf-8") as f:
            data = json.load(f)
    except OSError as e:
        raise SceneParseError(f"Couldn't read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise SceneParseError(f"{path} isn't valid JSON: {e}") from e
    return parseScene(data)


def _encodeComplex(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def serializeScene(scene: Scene) -> dict[str, Any]:
    """
    The JSON document for a scene, which parses back to an equal scene

    Generators are written as their canonical matrices, so they compare
    equal up to scale with the originals.
    """
    assertions = {
        key: getattr(scene.hypotheses, key)
        for key in ASSERTION_KEYS
        if getattr(scene.hypotheses, key) is not None
    }
    return {
        "schema": SCENE_SCHEMA,
        "group": [
            {
                "label": label,
                "matrix": [
                    [_encodeComplex(v) for v in row] for row in g.matrix
                ],
            }
            for label, g in scene.group
        ],
        "curve": [
            {
                "label": c.label,
                "terms": [
                    {"exp": list(exp), "coeff": _encodeComplex(coeff)}
                    for exp, coeff in sorted(
                        c.polynomial.coefficients.items(), reverse=True)
                ],
            }
            for c in scene.components
        ],
        "assertions": assertions,
    }


def dumpScene(scene: Scene) -> str:
    return json.dumps(serializeScene(scene), indent=2, sort_keys=True)
