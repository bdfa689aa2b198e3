"""
tests > families > veronese_test

Tests for the Veronese conic and the representation preserving it

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

import numpy as np
import pytest

from common.exceptions import NumericInputError
from common.util.numeric import randomComplex
from curves import invarianceCheck
from families import VERONESE_CONIC, MoebiusClass, iota, veroneseEmbed
from projective import ProjTransform, apply
from tests.helpers.generators import randomMoebius, rng


def test_embedding_lies_on_conic():
    gen = rng(90)
    for _ in range(20):
        p = veroneseEmbed(randomComplex(gen, 2))
        v = p.coords
        assert abs(VERONESE_CONIC(v)) < 1e-12 * np.linalg.norm(v) ** 2


def test_embedding_of_zero():
    with pytest.raises(NumericInputError):
        veroneseEmbed([0, 0])


def test_equivariance():
    gen = rng(91)
    for _ in range(100):
        m = randomMoebius(gen)
        point = randomComplex(gen, 2)
        lhs = apply(iota(m), veroneseEmbed(point))
        rhs = veroneseEmbed(m.apply(point))
        assert lhs.isEqual(rhs, 1e-8)


def test_iota_preserves_conic():
    gen = rng(92)
    for _ in range(20):
        cert = invarianceCheck(VERONESE_CONIC, iota(randomMoebius(gen)))
        assert cert.residual < 1e-9


def test_iota_is_a_homomorphism():
    gen = rng(93)
    for _ in range(10):
        m, n = randomMoebius(gen), randomMoebius(gen)
        assert iota(m @ n).isEqual(iota(m) @ iota(n), 1e-8)


@pytest.mark.parametrize(
    ("m", "expected"),
    [
        (
            MoebiusClass([[2, 0], [0, 1]]),
            np.diag([2, 1, 0.5]),
        ),
        (
            MoebiusClass([[1, 1], [0, 1]]),
            [[1, 1, 1], [0, 1, 2], [0, 0, 1]],
        ),
    ]
)
def test_iota_normal_forms(m: MoebiusClass, expected):
    assert iota(m) == ProjTransform(expected)
