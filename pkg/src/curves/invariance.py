"""
curves > invariance

Pulling curves back by projective transformations, and checking whether a
curve is invariant under a transformation.

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

__all__ = [
    'InvarianceCertificate',
    'pullback',
    'proportionalityResidual',
    'invarianceCheck',
]

from dataclasses import dataclass
from typing import Optional

import numpy as np

from common.exceptions import NotInvariantError
from common.logger import log, verbosity
from common.util.numeric import proportionalityScale, tolerance
from projective import ProjTransform
from .hompoly import HomPoly, pullbackMatrix


@dataclass(frozen=True)
class InvarianceCertificate:
    """
    Certifies that F(gv) = scale * F(v), up to the residual
    """
    scale: complex
    residual: float


def pullback(F: HomPoly, g: ProjTransform) -> HomPoly:
    """
    The polynomial v -> F(gv), using the determinant 1 lift of g

    The zero set of the result is the preimage of the curve under g.

    ### Args:
    * `F` (`HomPoly`): polynomial
    * `g` (`ProjTransform`): transformation

    ### Returns:
    * `HomPoly`: pulled back polynomial of the same degree
    """
    return pullbackMatrix(F, g.lift)


def proportionalityResidual(F: HomPoly, G: HomPoly) -> tuple[complex, float]:
    """
    The scale s minimizing |G - sF|, and that minimum relative to |G|
    """
    f = F.toVector()
    g = G.toVector()
    scale = proportionalityScale(f, g)
    return scale, float(np.linalg.norm(g - scale * f) / np.linalg.norm(g))


def invarianceCheck(
    F: HomPoly,
    g: ProjTransform,
    tol: Optional[float] = None,
) -> InvarianceCertificate:
    """
    Check that a curve is invariant under a transformation

    The scale is taken relative to the determinant 1 lift of g, so it is
    multiplicative over commuting transformations.

    ### Args:
    * `F` (`HomPoly`): curve
    * `g` (`ProjTransform`): transformation
    * `tol` (`float`, optional): tolerance on the relative residual.
      Defaults to the configured tolerance.

    ### Raises:
    * `NotInvariantError`: F(gv) isn't proportional to F(v)

    ### Returns:
    * `InvarianceCertificate`: scale and residual
    """
    scale, residual = proportionalityResidual(F, pullback(F, g))
    if residual >= tolerance(tol):
        raise NotInvariantError(
            f"{F} isn't invariant under {g} (residual {residual:.3e})",
            residual,
        )
    log(
        "curves.invariance",
        f"{F} is invariant under {g} with scale {scale}",
        verbosity.INFO,
    )
    return InvarianceCertificate(scale, residual)
