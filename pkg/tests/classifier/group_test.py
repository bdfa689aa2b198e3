"""
tests > classifier > group_test

Tests for group presentations and labelled components

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

import numpy as np
import pytest

from classifier import (
    CurveComponent,
    GroupPresentation,
    Hypotheses,
    labelComponents,
)
from common.exceptions import (
    DuplicateLabelError,
    MissingLabelError,
    NumericInputError,
    SingularTransformError,
)
from curves import HomPoly
from projective import ProjTransform

A = np.array([[1, 1, 0], [0, 1, 0], [0, 0, 1]])
B = np.diag([2, 1, 0.5])


def test_generators_are_converted():
    G = GroupPresentation([("a", A), ("b", ProjTransform(B))])
    assert G.labels == ["a", "b"]
    assert len(G) == 2
    assert G["a"] == ProjTransform(A)
    assert [label for label, _ in G] == ["a", "b"]


def test_word_applies_last_label_first():
    G = GroupPresentation([("a", A), ("b", B)])
    assert G.word(["a", "b"]) == ProjTransform(A @ B)
    assert G.word(["b", "a"]) == ProjTransform(B @ A)
    assert G.word(["a", "a^-1"]) == ProjTransform.identity()
    assert G.word([]) == ProjTransform.identity()


def test_missing_label():
    G = GroupPresentation([("a", A)])
    with pytest.raises(MissingLabelError):
        G["b"]
    with pytest.raises(MissingLabelError):
        G.word(["c^-1"])


def test_duplicate_generator_label():
    with pytest.raises(DuplicateLabelError):
        GroupPresentation([("a", A), ("a", B)])


def test_no_generators():
    with pytest.raises(NumericInputError):
        GroupPresentation([])


def test_singular_generator():
    with pytest.raises(SingularTransformError):
        GroupPresentation([("a", np.diag([1, 1, 0]))])


def test_label_components():
    x = HomPoly(1, {(1, 0, 0): 1})
    y = HomPoly(1, {(0, 1, 0): 1})
    labelled = labelComponents([x, CurveComponent("Y", y)])
    assert [c.label for c in labelled] == ["C1", "Y"]
    assert labelled[1].degree == 1


def test_label_components_duplicate():
    x = HomPoly(1, {(1, 0, 0): 1})
    with pytest.raises(DuplicateLabelError):
        labelComponents([x, CurveComponent("C1", x)])


def test_label_components_empty():
    with pytest.raises(NumericInputError):
        labelComponents([])


def test_hypotheses_default_to_unknown():
    assert Hypotheses() == Hypotheses(None, None, None)
