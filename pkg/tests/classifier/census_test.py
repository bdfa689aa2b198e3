"""
tests > classifier > census_test

Tests for counting tangent and secant lines

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

import pytest

from classifier import TangencyKind, tangencyCensus
from common.exceptions import DegreeUnsupportedError
from curves import HomPoly, pullback
from families import CUSPIDAL_CUBIC, VERONESE_CONIC
from projective import ProjLine, applyToLine
from tests.helpers.generators import randomLine, randomTransform, rng


def kinds(curve: HomPoly, lines: list) -> list:
    return [i.kind for i in tangencyCensus(curve, lines).incidences]


def test_cubic_lines():
    lines = [
        # Inflectional tangent
        ProjLine([1, 0, 0]),
        # Cuspidal tangent
        ProjLine([0, 1, 0]),
        # Through the cusp
        ProjLine([0, 0, 1]),
        # Tangent at [1:1:1]
        ProjLine([1, 2, -3]),
    ]
    assert kinds(CUSPIDAL_CUBIC, lines) == [
        TangencyKind.TANGENT,
        TangencyKind.TANGENT,
        TangencyKind.OTHER,
        TangencyKind.TANGENT,
    ]


def test_cubic_census_counts():
    gen = rng(140)
    lines = [ProjLine([1, 0, 0]), ProjLine([0, 0, 1]), randomLine(gen)]
    census = tangencyCensus(CUSPIDAL_CUBIC, lines)
    assert census.tangents == 1
    assert census.secants == 1
    assert census.other == [ProjLine([0, 0, 1])]


def test_conic_lines():
    lines = [ProjLine([1, 0, 0]), ProjLine([0, 1, 0]), ProjLine([1, -1, 1])]
    assert kinds(VERONESE_CONIC, lines) == [
        TangencyKind.TANGENT,
        TangencyKind.SECANT,
        TangencyKind.TANGENT,
    ]


def test_profiles_are_kept():
    [incidence] = tangencyCensus(
        VERONESE_CONIC, [ProjLine([1, 0, 0])]).incidences
    assert incidence.profile.total == 2


def test_lines_only_count_against_conics_and_cubics():
    with pytest.raises(DegreeUnsupportedError):
        tangencyCensus(HomPoly(1, {(1, 0, 0): 1}), [ProjLine([0, 1, 0])])


@pytest.mark.parametrize(
    ("curve", "lines"),
    [
        (
            CUSPIDAL_CUBIC,
            [ProjLine([1, 0, 0]), ProjLine([0, 1, 0]), ProjLine([0, 0, 1]),
             ProjLine([1, 2, -3]), ProjLine([1, 1, 1])],
        ),
        (
            VERONESE_CONIC,
            [ProjLine([1, 0, 0]), ProjLine([0, 1, 0]), ProjLine([1, -1, 1])],
        ),
    ]
)
def test_census_is_unchanged_by_transforming_everything(curve, lines):
    gen = rng(141)
    before = kinds(curve, lines)
    for _ in range(10):
        g = randomTransform(gen)
        moved = [applyToLine(g.inverse(), ell) for ell in lines]
        assert kinds(pullback(curve, g), moved) == before
