"""
tests > curves > intersection_test

Tests for intersections of lines and curves

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

import numpy as np
import pytest

from common.exceptions import (
    CommonComponentError,
    DegreeUnsupportedError,
    LineIsComponentError,
)
from common.util.numeric import randomComplex
from curves import (
    BinaryForm,
    HomPoly,
    intersectCurves,
    lineCurveIntersection,
)
from projective import ProjLine, ProjPoint
from tests.helpers.generators import randomLine, rng

CUSP = HomPoly(3, {(1, 2, 0): 1, (0, 0, 3): -1})
CONIC = HomPoly(2, {(0, 2, 0): 1, (1, 0, 1): -4})


def onCurve(F: HomPoly, p: ProjPoint, tol: float = 1e-6) -> bool:
    v = p.coords
    return abs(F(v)) < tol * F.norm() * np.linalg.norm(v) ** F.degree


def randomCurve(gen: np.random.Generator, degree: int) -> HomPoly:
    size = (degree + 1) * (degree + 2) // 2
    return HomPoly.fromVector(degree, randomComplex(gen, size))


def test_binary_roots_with_multiplicity():
    # s^2 t (s - t)^2
    form = BinaryForm([0, 1, -2, 1, 0, 0])
    roots = form.roots()
    assert sorted(m for _, m in roots) == [1, 2, 2]


def test_binary_root_at_infinity():
    roots = BinaryForm([0, 1, 0]).roots()
    assert sorted(m for _, m in roots) == [1, 1]
    assert any(np.allclose(r, [1, 0]) for r, _ in roots)


def test_tangent_line_to_conic():
    profile = lineCurveIntersection(CONIC, ProjLine([1, 0, 0]))
    assert len(profile) == 1
    assert profile.total == 2
    assert profile.multiplicityAt(ProjPoint([0, 0, 1])) == 2


def test_line_through_cusp():
    profile = lineCurveIntersection(CUSP, ProjLine([0, 0, 1]))
    assert profile.total == 3
    assert profile.multiplicityAt(ProjPoint([1, 0, 0])) == 2
    assert profile.multiplicityAt(ProjPoint([0, 1, 0])) == 1


def test_inflectional_tangent():
    profile = lineCurveIntersection(CUSP, ProjLine([1, 0, 0]))
    assert profile.multiplicityAt(ProjPoint([0, 1, 0])) == 3


def test_random_lines_meet_transversally():
    gen = rng(70)
    for _ in range(10):
        profile = lineCurveIntersection(CUSP, randomLine(gen))
        assert [m for _, m in profile.entries] == [1, 1, 1]
        assert all(onCurve(CUSP, p) for p in profile.points)


def test_line_component():
    xy = HomPoly(2, {(1, 1, 0): 1})
    with pytest.raises(LineIsComponentError):
        lineCurveIntersection(xy, ProjLine([1, 0, 0]))


def test_bezout():
    gen = rng(71)
    degrees = [(1, 2), (2, 2), (2, 3), (3, 3), (1, 3)]
    for k in range(50):
        m, n = degrees[k % len(degrees)]
        F, G = randomCurve(gen, m), randomCurve(gen, n)
        profile = intersectCurves(F, G)
        assert profile.total == m * n
        for p in profile.points:
            assert onCurve(F, p)
            assert onCurve(G, p)


def test_tangent_curves():
    # Two conics tangent to each other at [0:0:1] and [1:0:0]
    other = HomPoly(2, {(0, 2, 0): 1, (1, 0, 1): -1})
    profile = intersectCurves(CONIC, other)
    assert profile.total == 4
    assert profile.multiplicityAt(ProjPoint([0, 0, 1]), 1e-4) == 2
    assert profile.multiplicityAt(ProjPoint([1, 0, 0]), 1e-4) == 2


def test_common_component():
    F = HomPoly(2, {(1, 1, 0): 1})
    G = HomPoly(2, {(1, 0, 1): 1})
    with pytest.raises(CommonComponentError):
        intersectCurves(F, G)


def test_degree_too_large():
    quartic = HomPoly(4, {(4, 0, 0): 1, (0, 0, 4): 1})
    with pytest.raises(DegreeUnsupportedError):
        intersectCurves(quartic, CONIC)
