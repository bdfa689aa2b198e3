"""
families > pencil

The group of transformations fixing every line through [1:0:0].

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

__all__ = [
    'PENCIL_CENTRE',
    'pencilElement',
]

from projective import ProjPoint, ProjTransform

PENCIL_CENTRE = ProjPoint([1, 0, 0])
"""The common point of the invariant lines"""


def pencilElement(a: complex, b: complex) -> ProjTransform:
    """
    The transformation [[1, a, b], [0, 1, 0], [0, 0, 1]], which leaves every
    line through [1:0:0] invariant with scale 1
    """
    return ProjTransform([[1, a, b], [0, 1, 0], [0, 0, 1]])
