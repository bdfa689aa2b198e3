"""
curves > inflection

Inflection points of curves of degree at most 3.

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

__all__ = [
    'inflectionPoints',
]

from typing import Optional

import numpy as np

from common.exceptions import DegreeUnsupportedError, ReducibleCurveError
from common.logger import log, verbosity
from common.util.numeric import (
    linkClusters,
    numericRank,
    projectiveDistance,
    setting,
    tolerance,
)
from projective import ProjPoint
from .hompoly import HomPoly
from .intersection import intersectCurves
from .rational import RationalCurve, parametrizeSingularCubic
from .singular import SingularKind, singularPoints


def _parametricInflections(
    curve: RationalCurve,
    singular: ProjPoint,
) -> list[ProjPoint]:
    """
    Curve points at the roots of the inflection form, other than the
    singular point
    """
    radius = setting("curves.merge_radius")
    scale = max(f.norm() for f in curve.components)
    points = []
    for (s, t), _ in curve.inflectionForm().roots():
        v = curve.evaluate(s, t)
        if np.linalg.norm(v) <= 1e-9 * scale:
            continue
        p = ProjPoint(v)
        if projectiveDistance(p.coords, singular.coords) < radius:
            continue
        points.append(p)
    return points


def inflectionPoints(
    F: HomPoly,
    tol: Optional[float] = None,
) -> list[ProjPoint]:
    """
    Smooth points of a curve where the tangent line meets it with
    multiplicity at least 3

    * Lines and smooth conics have none.
    * Smooth cubics have 9, where the curve meets its Hessian curve.
    * Cubics with one node or cusp are parametrized from it, and the
      inflections are the points at the roots of the inflection form.

    ### Args:
    * `F` (`HomPoly`): squarefree curve of degree at most 3
    * `tol` (`float`, optional): tolerance. Defaults to the configured
      tolerance.

    ### Raises:
    * `DegreeUnsupportedError`: degree above 3
    * `RepeatedFactorError`: F has a repeated factor
    * `ReducibleCurveError`: F is a degenerate conic or a cubic with more
      than one singular point

    ### Returns:
    * `list[ProjPoint]`: inflection points
    """
    if F.degree > 3:
        raise DegreeUnsupportedError(
            f"Inflections are only found up to degree 3, not {F.degree}")
    if F.degree <= 1:
        return []
    if F.degree == 2:
        if numericRank(F.quadraticFormMatrix(), tolerance(tol)) < 3:
            raise ReducibleCurveError(f"The conic {F} is degenerate")
        return []

    singular = singularPoints(F, tol)
    if not singular:
        points = intersectCurves(F, F.hessianPoly(), tol).points
    elif len(singular) == 1 and singular[0].kind != SingularKind.OTHER:
        location = singular[0].location
        points = _parametricInflections(
            parametrizeSingularCubic(F, location), location)
    else:
        raise ReducibleCurveError(
            f"The cubic {F} has {len(singular)} singular points")

    radius = setting("curves.merge_radius")
    groups = linkClusters(
        points, lambda a, b: projectiveDistance(a.coords, b.coords) < radius)
    result = [g[0] for g in groups]
    log(
        "curves.inflection",
        f"{F} has inflections at {', '.join(str(p) for p in result)}",
        verbosity.INFO,
    )
    return result
