"""
projective > projection

The Moebius action induced on a line by a transformation with a fixed point,
through central projection from that point.

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

__all__ = [
    'projectionMorphism',
]

from typing import Optional

import numpy as np

from common.exceptions import NotFixedError, PointOnLineError
from common.logger import log, verbosity
from .moebius import MoebiusClass
from .point import ProjLine, ProjPoint
from .transform import ProjTransform, apply


def projectionMorphism(
    g: ProjTransform,
    p: ProjPoint,
    ell: ProjLine,
    tol: Optional[float] = None,
) -> MoebiusClass:
    """
    The Moebius transformation by which g acts on the line `ell`, when points
    are projected onto it from `p`

    Coordinates on the line come from `ProjLine.basis`, so for example on the
    line x = 0 they are [y:z]. Since g fixes p, the matrix of g in the frame
    (basis of ell, p) is block triangular and its upper left block is the
    induced action.

    ### Args:
    * `g` (`ProjTransform`): transformation fixing p
    * `p` (`ProjPoint`): centre of projection
    * `ell` (`ProjLine`): target line, not through p
    * `tol` (`float`, optional): tolerance. Defaults to the configured
      tolerance.

    ### Raises:
    * `NotFixedError`: g doesn't fix p
    * `PointOnLineError`: p lies on ell

    ### Returns:
    * `MoebiusClass`: induced transformation of the line
    """
    if not apply(g, p).isEqual(p, tol):
        raise NotFixedError(f"{g} doesn't fix the point {p}")
    if ell.contains(p, tol):
        raise PointOnLineError(f"Centre {p} lies on the line {ell}")
    b1, b2 = ell.basis()
    frame = np.column_stack([b1, b2, p.coords])
    adapted = np.linalg.solve(frame, g.lift @ frame)
    log(
        "projective.projection",
        f"Projecting {g} from {p} onto {ell}",
        verbosity.EVENT,
    )
    return MoebiusClass(adapted[:2, :2])
