"""
tests > classifier > report_test

Tests for reports on invariant curves

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

import numpy as np
import pytest
from jestspectation import Any, ObjectContainingItems

from classifier import (
    ComponentKind,
    CurveComponent,
    GroupPresentation,
    Hypotheses,
    VerdictStatus,
    theoremReport,
)
from classifier.report import (
    COMPONENT_TYPES,
    LINE_CONFIGURATION,
    NON_COMMUTATIVE_STRUCTURE,
    SINGLE_CURVE_TYPE,
    TANGENT_SECANT_LIMITS,
)
from cli.scene import loadScene
from common.exceptions import (
    DuplicateComponentError,
    OrbitNotInvariantError,
    ReducibleCurveError,
)
from curves import HomPoly
from families import CUSPIDAL_CUBIC, VERONESE_CONIC
from projective import ProjPoint, ProjTransform
from tests.helpers.scenes import fixture

TRIVIAL = GroupPresentation([("e", np.eye(3))])
CYCLIC = Hypotheses(infinite=True, virtually_cyclic=True)

NODE = HomPoly(3, {(0, 2, 1): 1, (3, 0, 0): -1, (2, 0, 1): -1})


def line(a: complex, b: complex, c: complex) -> HomPoly:
    return HomPoly(1, {(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): c})


def statuses(report) -> dict[str, VerdictStatus]:
    return {v.rule: v.status for v in report.verdicts}


def fixtureReport(name: str):
    scene = loadScene(fixture(name))
    return theoremReport(scene.group, scene.components, scene.hypotheses)


def test_cubic_with_its_tangents():
    report = fixtureReport("cubic_axis_lines")
    assert report.compliant
    assert report.labelsOfKind(ComponentKind.CUSPIDAL_CUBIC) == ["C"]
    assert report.labelsOfKind(ComponentKind.LINE) == ["X", "Y"]
    assert report.nonconcurrent == 2
    assert report.concurrencyPoint == ProjPoint([0, 0, 1])
    assert report.censuses["C"] == ObjectContainingItems({
        "tangents": 2,
        "secants": 0,
    })
    assert statuses(report) == {
        COMPONENT_TYPES: VerdictStatus.COMPLIANT,
        LINE_CONFIGURATION: VerdictStatus.COMPLIANT,
        SINGLE_CURVE_TYPE: VerdictStatus.COMPLIANT,
        TANGENT_SECANT_LIMITS: VerdictStatus.COMPLIANT,
        NON_COMMUTATIVE_STRUCTURE: VerdictStatus.NOT_APPLICABLE,
    }


def test_veronese_conic():
    report = fixtureReport("veronese_iota")
    assert report.compliant
    assert report.classes["V"] == ObjectContainingItems({
        "kind": ComponentKind.VERONESE_CONIC,
        "normalizer": Any(ProjTransform),
    })
    assert report.nonconcurrent is None
    assert report.verdict(LINE_CONFIGURATION).status \
        == VerdictStatus.NOT_APPLICABLE
    assert report.action.isTrivial()


def test_pencil_of_lines():
    report = fixtureReport("pencil_lines")
    assert report.compliant
    assert report.nonconcurrent == 2
    assert report.concurrencyPoint == ProjPoint([1, 0, 0])
    assert report.censuses == {}


def test_four_lines_in_general_position():
    report = fixtureReport("four_general_lines")
    assert not report.compliant
    assert report.nonconcurrent == 4
    assert report.concurrencyPoint is None
    assert report.verdict(LINE_CONFIGURATION).status \
        == VerdictStatus.VIOLATION
    orbits = sorted(sorted(o) for o in report.action.orbits())
    assert orbits == [["W"], ["X", "Y", "Z"]]


def test_perturbed_curve_is_not_invariant():
    with pytest.raises(OrbitNotInvariantError):
        fixtureReport("perturbed_cubic")


def test_conic_and_cubic():
    report = theoremReport(
        TRIVIAL, [VERONESE_CONIC, CUSPIDAL_CUBIC], CYCLIC)
    assert [c.label for c in report.components] == ["C1", "C2"]
    assert report.verdict(SINGLE_CURVE_TYPE).status \
        == VerdictStatus.VIOLATION
    assert not report.compliant


def test_conic_and_cubic_for_non_cyclic_groups():
    report = theoremReport(
        TRIVIAL,
        [VERONESE_CONIC, CUSPIDAL_CUBIC],
        Hypotheses(infinite=True, virtually_cyclic=False),
    )
    assert report.verdict(SINGLE_CURVE_TYPE).status \
        == VerdictStatus.NOT_APPLICABLE


def test_too_many_tangents():
    tangents = [line(0, 0, 1), line(1, -1, 1), line(1, 1, 1)]
    report = theoremReport(TRIVIAL, [VERONESE_CONIC] + tangents, CYCLIC)
    assert report.censuses["C1"].tangents == 3
    assert report.verdict(TANGENT_SECANT_LIMITS).status \
        == VerdictStatus.VIOLATION
    assert report.verdict(LINE_CONFIGURATION).status \
        == VerdictStatus.COMPLIANT


def test_too_many_secants():
    secants = [line(0, 1, 0), line(1, 0, -1)]
    report = theoremReport(TRIVIAL, [VERONESE_CONIC] + secants, CYCLIC)
    assert report.censuses["C1"].secants == 2
    assert report.verdict(TANGENT_SECANT_LIMITS).status \
        == VerdictStatus.VIOLATION


def test_nodal_cubic():
    report = theoremReport(TRIVIAL, [CurveComponent("N", NODE)], CYCLIC)
    assert report.classes["N"].kind == ComponentKind.OTHER
    verdict = report.verdict(COMPONENT_TYPES)
    assert verdict.status == VerdictStatus.VIOLATION
    assert "N" in verdict.message
    assert verdict.statement


@pytest.mark.parametrize(
    ("components", "status"),
    [
        ([CUSPIDAL_CUBIC], VerdictStatus.VIOLATION),
        ([VERONESE_CONIC], VerdictStatus.COMPLIANT),
        ([line(1, 0, 0), line(0, 1, 0)], VerdictStatus.COMPLIANT),
        ([VERONESE_CONIC, line(1, 0, 0)], VerdictStatus.VIOLATION),
    ]
)
def test_non_commutative_structure(components: list, status):
    report = theoremReport(
        TRIVIAL,
        components,
        Hypotheses(infinite=True, virtually_commutative=False),
    )
    assert report.verdict(NON_COMMUTATIVE_STRUCTURE).status == status


def test_virtually_commutative_lines():
    lines = [line(1, 0, 0), line(0, 1, 0), line(0, 0, 1), line(1, 1, 1)]
    report = theoremReport(
        TRIVIAL,
        lines,
        Hypotheses(
            infinite=True,
            virtually_cyclic=False,
            virtually_commutative=True,
        ),
    )
    assert report.nonconcurrent == 4
    assert report.verdict(LINE_CONFIGURATION).status \
        == VerdictStatus.NOT_APPLICABLE


def test_finite_groups():
    report = theoremReport(
        TRIVIAL, [NODE], Hypotheses(infinite=False))
    assert report.compliant
    assert set(statuses(report).values()) == {VerdictStatus.NOT_APPLICABLE}


def test_without_hypotheses():
    lines = [line(1, 0, 0), line(0, 1, 0), line(0, 0, 1), line(1, 1, 1)]
    report = theoremReport(TRIVIAL, lines)
    assert report.hypotheses == Hypotheses()
    assert report.verdict(LINE_CONFIGURATION).status \
        == VerdictStatus.VIOLATION


def test_reducible_component():
    with pytest.raises(ReducibleCurveError):
        theoremReport(TRIVIAL, [HomPoly(2, {(1, 1, 0): 1})])


def test_duplicate_components():
    with pytest.raises(DuplicateComponentError):
        theoremReport(TRIVIAL, [line(1, 0, 0), line(2, 0, 0)])
