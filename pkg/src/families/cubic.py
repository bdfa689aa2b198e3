"""
families > cubic

The cuspidal cubic xy^2 - z^3 = 0 and the diagonal group preserving it.

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

__all__ = [
    'CUSPIDAL_CUBIC',
    'cubicStabilizerElement',
    'stabilizerConstraintCheck',
]

from typing import Optional

import numpy as np

from common.exceptions import NotDiagonalError, ZeroParameterError
from common.util.numeric import tolerance
from curves import HomPoly
from projective import ProjTransform

CUSPIDAL_CUBIC = HomPoly(3, {(1, 2, 0): 1, (0, 0, 3): -1})
"""The cubic xy^2 - z^3, with its cusp at [1:0:0] and inflection at [0:1:0]"""


def cubicStabilizerElement(a: complex) -> ProjTransform:
    """
    The element diag(a^-5, a^4, a) of the group preserving the cuspidal
    cubic, which scales its polynomial by a^3

    ### Raises:
    * `ZeroParameterError`: a is zero
    """
    if a == 0:
        raise ZeroParameterError("The stabilizer parameter can't be zero")
    a = complex(a)
    return ProjTransform(np.diag([a ** -5, a ** 4, a]))


def stabilizerConstraintCheck(
    g: ProjTransform,
    tol: Optional[float] = None,
) -> bool:
    """
    Returns whether a diagonal transformation preserves the cuspidal cubic

    The pullback of xy^2 - z^3 by diag(g1, g2, g3) is g1 g2^2 xy^2 - g3^3 z^3,
    so with the determinant 1 lift this holds exactly when g2 = g3^4 and
    g1 = g3^-5. These equations don't depend on which cube root is used for
    the lift.

    ### Args:
    * `g` (`ProjTransform`): diagonal transformation
    * `tol` (`float`, optional): relative tolerance. Defaults to the
      configured tolerance.

    ### Raises:
    * `NotDiagonalError`: g isn't diagonal

    ### Returns:
    * `bool`: whether g is in the stabilizer
    """
    tol = tolerance(tol)
    lift = g.lift
    off = lift - np.diag(np.diag(lift))
    if np.max(np.abs(off)) >= tol * np.max(np.abs(lift)):
        raise NotDiagonalError(f"{g} isn't diagonal")
    g1, g2, g3 = np.diag(lift)

    def close(u: complex, v: complex) -> bool:
        return abs(u - v) < tol * max(abs(u), abs(v))

    return close(g2, g3 ** 4) and close(g1 * g3 ** 5, 1)
