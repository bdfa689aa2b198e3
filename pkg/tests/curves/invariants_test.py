"""
tests > curves > invariants_test

Tests for the numeric invariants of curves and their duals

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

import numpy as np
import pytest
from jestspectation import Any

from common.exceptions import (
    DegenerateCurveError,
    InconsistentInvariantsError,
    NegativeGenusError,
    NumericInputError,
    ReducibleCurveError,
    UnsupportedDualError,
)
from curves import (
    BinaryForm,
    CurveInvariants,
    HomPoly,
    RationalCurve,
    clebschGenus,
    curveInvariants,
    dualCurve,
    plueckerClass,
    plueckerInflections,
)
from projective import ProjPoint
from tests.helpers import proportional
from tests.helpers.generators import rng

CUSP = HomPoly(3, {(1, 2, 0): 1, (0, 0, 3): -1})
NODE = HomPoly(3, {(0, 2, 1): 1, (3, 0, 0): -1, (2, 0, 1): -1})
FERMAT = HomPoly(3, {(3, 0, 0): 1, (0, 3, 0): 1, (0, 0, 3): 1})
CONIC = HomPoly(2, {(0, 2, 0): 1, (1, 0, 1): -4})


@pytest.mark.parametrize(
    ("n", "d", "s", "genus", "curve_class", "inflections"),
    [
        (2, 0, 0, 0, 2, 0),
        (3, 0, 0, 1, 6, 9),
        (3, 1, 0, 0, 4, 3),
        (3, 0, 1, 0, 3, 1),
        (4, 0, 0, 3, 12, 24),
        (4, 3, 0, 0, 6, 6),
    ]
)
def test_formulas(
    n: int,
    d: int,
    s: int,
    genus: int,
    curve_class: int,
    inflections: int,
):
    assert clebschGenus(n, d, s) == genus
    assert plueckerClass(n, d, s) == curve_class
    assert plueckerInflections(n, d, s) == inflections


def test_negative_genus():
    with pytest.raises(NegativeGenusError):
        clebschGenus(3, 2, 0)


def test_negative_class():
    with pytest.raises(InconsistentInvariantsError):
        plueckerClass(2, 2, 0)


def test_invalid_counts():
    with pytest.raises(NumericInputError):
        clebschGenus(3, -1, 0)
    with pytest.raises(NumericInputError):
        plueckerClass(1, 0, 0)


@pytest.mark.parametrize(
    ("F", "expected"),
    [
        (CUSP, CurveInvariants(3, 0, 1, 3, 1, 0, 1)),
        (NODE, CurveInvariants(3, 1, 0, 4, 3, 0, 3)),
        (FERMAT, CurveInvariants(3, 0, 0, 6, 9, 1, 9)),
        (CONIC, CurveInvariants(2, 0, 0, 2, 0, 0, 0)),
        (HomPoly(1, {(1, 0, 0): 2}), CurveInvariants(1, 0, 0, 0, 0, 0, 0)),
    ]
)
def test_curve_invariants(F: HomPoly, expected: CurveInvariants):
    invariants = curveInvariants(F)
    assert invariants == expected
    assert invariants.consistent


def test_reducible_cubics():
    triangle = HomPoly(3, {(1, 1, 1): 1})
    with pytest.raises(ReducibleCurveError):
        curveInvariants(triangle)
    conic_and_line = CONIC * HomPoly(1, {(1, 0, 0): 1, (0, 1, 0): 1})
    with pytest.raises(ReducibleCurveError):
        curveInvariants(conic_and_line)


def test_dual_of_veronese_conic():
    dual = dualCurve(CONIC)
    assert dual.degree == 2
    assert dual.parametrization is None
    assert dual.implicit.isEqual(HomPoly(2, {(0, 2, 0): 1, (1, 0, 1): -1}))


def test_dual_of_conic_is_involutive():
    F = HomPoly(2, {(2, 0, 0): 1, (0, 1, 1): 2j, (1, 0, 1): 0.5})
    assert dualCurve(dualCurve(F).implicit).implicit.isEqual(F, 1e-8)


def test_biduality_of_random_conics():
    gen = rng(70)
    checked = 0
    while checked < 20:
        a = gen.standard_normal((3, 3)) + 1j * gen.standard_normal((3, 3))
        a = a + a.T
        if abs(np.linalg.det(a)) < 0.1 * np.linalg.norm(a) ** 3:
            continue
        F = HomPoly.fromQuadraticForm(a)
        dual = dualCurve(F).implicit
        assert dual.degree == 2
        b = dual.quadraticFormMatrix()
        assert abs(np.linalg.det(b)) > 1e-6 * np.linalg.norm(b) ** 3
        assert dualCurve(dual).implicit.isEqual(F, 1e-7)
        checked += 1


def test_dual_of_cuspidal_cubic():
    dual = dualCurve(CUSP)
    assert dual.degree == 3
    assert dual.parametrization is not None
    expected = HomPoly(3, {(1, 2, 0): 27, (0, 0, 3): 4})
    assert proportional(expected.toVector(), dual.implicit.toVector(), 1e-6)


def test_dual_from_given_parametrization():
    # [s:t] -> [t^3:s^3:s^2 t], which is t -> [t^3:1:t] in the chart s = 1
    gamma = RationalCurve([
        BinaryForm([0, 0, 0, 1]),
        BinaryForm([1, 0, 0, 0]),
        BinaryForm([0, 1, 0, 0]),
    ])
    dual = dualCurve(CUSP, gamma)
    assert dual.degree == 3
    assert dual.parametrization is gamma
    expected = HomPoly(3, {(1, 2, 0): 27, (0, 0, 3): 4})
    assert proportional(expected.toVector(), dual.implicit.toVector(), 1e-6)


def test_dual_of_cusp_contains_tangent_lines():
    dual = dualCurve(CUSP)
    for t in (0.5, 1 + 1j, -2):
        tangent = CUSP.gradient([1, t ** 3, t ** 2])
        value = dual.implicit(tangent)
        assert abs(value) < 1e-6 * dual.implicit.norm() \
            * np.linalg.norm(tangent) ** 3


def test_dual_of_nodal_cubic_is_quartic():
    with pytest.raises(UnsupportedDualError):
        dualCurve(NODE)


def test_dual_of_line_pair():
    with pytest.raises(DegenerateCurveError):
        dualCurve(HomPoly(2, {(1, 1, 0): 1}))


def test_invariants_are_a_dataclass():
    assert curveInvariants(CUSP) == Any(CurveInvariants)


def test_invariants_keep_their_points():
    invariants = curveInvariants(CUSP)
    [cusp] = invariants.singularities
    assert cusp.location.isEqual(ProjPoint([1, 0, 0]), 1e-6)
    [flex] = invariants.inflectionLocations
    assert flex.isEqual(ProjPoint([0, 1, 0]), 1e-6)
    assert len(curveInvariants(FERMAT).inflectionLocations) == 9
