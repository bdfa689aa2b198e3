"""
tests > curves > invariance_test

Tests for checking that curves are invariant under transformations

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

import numpy as np
import pytest

from common.exceptions import NotInvariantError
from curves import HomPoly, invarianceCheck, proportionalityResidual, pullback
from projective import ProjTransform
from tests.helpers.generators import randomTransform, rng

CUSP = HomPoly(3, {(1, 2, 0): 1, (0, 0, 3): -1})


def test_pullback_composes():
    gen = rng(80)
    g, h = randomTransform(gen), randomTransform(gen)
    # F(ghv) is the pullback by g followed by the pullback by h
    left = pullback(pullback(CUSP, g), h)
    right = pullback(CUSP, g @ h)
    _, residual = proportionalityResidual(left, right)
    assert residual < 1e-10


def test_diagonal_invariance():
    a = 2
    g = ProjTransform(np.diag([a ** -5, a ** 4, a]))
    cert = invarianceCheck(CUSP, g)
    assert abs(cert.scale - a ** 3) < 1e-9
    assert cert.residual < 1e-12


def test_scale_is_multiplicative():
    g = ProjTransform(np.diag([2 ** -5, 2 ** 4, 2]))
    h = ProjTransform(np.diag([1j ** -5, 1j ** 4, 1j]))
    product = invarianceCheck(CUSP, g @ h).scale
    assert abs(
        product - invarianceCheck(CUSP, g).scale
        * invarianceCheck(CUSP, h).scale
    ) < 1e-9


def test_not_invariant():
    g = ProjTransform([[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    with pytest.raises(NotInvariantError) as e:
        invarianceCheck(CUSP, g)
    assert e.value.residual > 0.01
    assert e.value.exit_code == 6


def test_tolerance_is_respected():
    g = ProjTransform(np.diag([1, 1, 1 + 1e-7]))
    with pytest.raises(NotInvariantError):
        invarianceCheck(CUSP, g)
    assert invarianceCheck(CUSP, g, tol=1e-5).residual < 1e-5
