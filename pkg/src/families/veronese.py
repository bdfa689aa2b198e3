"""
families > veronese

The Veronese embedding of the projective line as the conic y^2 - 4xz = 0,
and the irreducible representation of PSL(2, C) that preserves it.

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

__all__ = [
    'VERONESE_CONIC',
    'veroneseEmbed',
    'iota',
]

from typing import Any

from common.util.numeric import asComplexArray
from curves import HomPoly
from projective import MoebiusClass, ProjPoint, ProjTransform

VERONESE_CONIC = HomPoly(2, {(0, 2, 0): 1, (1, 0, 1): -4})
"""The conic y^2 - 4xz, which is the image of the Veronese embedding"""


def veroneseEmbed(point: Any) -> ProjPoint:
    """
    The Veronese embedding [z:w] -> [z^2:2zw:w^2]

    ### Args:
    * `point` (`Any`): nonzero pair [z:w]

    ### Raises:
    * `NumericInputError`: the pair is zero or not finite

    ### Returns:
    * `ProjPoint`: image, which lies on `VERONESE_CONIC`
    """
    z, w = asComplexArray(point, (2,), "projective line point")
    return ProjPoint([z * z, 2 * z * w, w * w])


def iota(m: MoebiusClass) -> ProjTransform:
    """
    The transformation induced on the plane by a Moebius transformation
    through the Veronese embedding, so that
    iota(m)(veroneseEmbed(p)) = veroneseEmbed(m(p))

    ### Args:
    * `m` (`MoebiusClass`): Moebius transformation

    ### Returns:
    * `ProjTransform`: transformation preserving the Veronese conic
    """
    a, b, c, d = m.coefficients
    return ProjTransform([
        [a * a, a * b, b * b],
        [2 * a * c, a * d + b * c, 2 * b * d],
        [c * c, c * d, d * d],
    ])
