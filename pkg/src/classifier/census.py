"""
classifier > census

Counting the lines of a configuration that are tangent or secant to a conic
or cubic component.

* A line is tangent when it meets the curve with multiplicity at least 2 at
  a smooth point, or when it is the tangent line at a cusp.
* A line is secant when it only meets the curve transversally at smooth
  points.
* Any other line passes through a singular point without being a cuspidal
  tangent, and is counted separately.

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

__all__ = [
    'TangencyKind',
    'LineIncidence',
    'TangencyCensus',
    'tangencyCensus',
]

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from common.exceptions import DegreeUnsupportedError
from common.logger import log, verbosity
from common.util.numeric import projectiveDistance, setting
from curves import (
    HomPoly,
    IntersectionProfile,
    SingularKind,
    lineCurveIntersection,
    singularPoints,
)
from projective import ProjLine


class TangencyKind(Enum):
    TANGENT = "tangent"
    SECANT = "secant"
    OTHER = "other"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, eq=False)
class LineIncidence:
    """
    How a line meets a curve
    """
    line: ProjLine
    kind: TangencyKind
    profile: IntersectionProfile


@dataclass(frozen=True, eq=False)
class TangencyCensus:
    incidences: tuple[LineIncidence, ...]

    def _count(self, kind: TangencyKind) -> int:
        return sum(1 for i in self.incidences if i.kind == kind)

    @property
    def tangents(self) -> int:
        return self._count(TangencyKind.TANGENT)

    @property
    def secants(self) -> int:
        return self._count(TangencyKind.SECANT)

    @property
    def other(self) -> list[ProjLine]:
        """Lines through a singular point that aren't cuspidal tangents"""
        return [
            i.line for i in self.incidences if i.kind == TangencyKind.OTHER
        ]


def tangencyCensus(
    curve: HomPoly,
    lines: Sequence[ProjLine],
    tol: Optional[float] = None,
) -> TangencyCensus:
    """
    Classify each line as tangent, secant or other to a conic or cubic

    ### Args:
    * `curve` (`HomPoly`): curve of degree 2 or 3
    * `lines` (`Sequence[ProjLine]`): lines, none of them a component of the
      curve
    * `tol` (`float`, optional): tolerance. Defaults to the configured
      tolerance.

    ### Raises:
    * `DegreeUnsupportedError`: curve isn't a conic or cubic
    * `LineIsComponentError`: a line is a component of the curve

    ### Returns:
    * `TangencyCensus`: classification of every line, in the given order
    """
    if curve.degree not in (2, 3):
        raise DegreeUnsupportedError(
            f"Tangency is only counted for conics and cubics, not degree "
            f"{curve.degree}")
    radius = setting("curves.merge_radius")
    singular = singularPoints(curve, tol)
    cusp_tangents = [
        ell
        for p in singular if p.kind == SingularKind.CUSP
        for ell in p.tangents
    ]

    incidences = []
    for ell in lines:
        profile = lineCurveIntersection(curve, ell, tol)
        if any(
            projectiveDistance(ell.coords, m.coords) < radius
            for m in cusp_tangents
        ):
            kind = TangencyKind.TANGENT
        elif any(
            projectiveDistance(q.coords, p.location.coords) < radius
            for q in profile.points
            for p in singular
        ):
            kind = TangencyKind.OTHER
        elif any(m >= 2 for _, m in profile.entries):
            kind = TangencyKind.TANGENT
        else:
            kind = TangencyKind.SECANT
        log(
            "classifier.census",
            f"Line {ell} is {kind} to {curve} ({profile})",
            verbosity.INFO,
        )
        incidences.append(LineIncidence(ell, kind, profile))
    return TangencyCensus(tuple(incidences))
