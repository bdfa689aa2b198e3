"""
classifier > component

Classification of a single irreducible component of an invariant curve as a
line, a conic equivalent to the Veronese curve, a cubic equivalent to
xy^2 = z^3, or something else.

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

__all__ = [
    'ComponentKind',
    'ComponentClass',
    'lineOf',
    'classifyComponent',
]

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from common.exceptions import (
    DegenerateCurveError,
    NumericInputError,
    ReducibleCurveError,
    RepeatedFactorError,
)
from common.logger import log, verbosity
from curves import (
    CurveInvariants,
    HomPoly,
    curveInvariants,
    findLinearFactor,
    hasRepeatedFactor,
)
from families import normalizeConic, normalizeCuspidalCubic
from projective import ProjLine, ProjPoint, ProjTransform


class ComponentKind(Enum):
    LINE = "line"
    VERONESE_CONIC = "veronese-conic"
    CUSPIDAL_CUBIC = "cuspidal-cubic"
    OTHER = "other"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, eq=False)
class ComponentClass:
    """
    The type of a component, with the data found while deciding it

    * Lines carry the line itself.
    * Conics and cuspidal cubics carry a normalizer mapping them onto the
      model curve, along with the residual it reached.
    * Cubics carry their invariants, and cuspidal cubics their cusp and
      inflection.
    """
    kind: ComponentKind
    degree: int
    line: Optional[ProjLine] = None
    normalizer: Optional[ProjTransform] = None
    residual: Optional[float] = None
    cusp: Optional[ProjPoint] = None
    inflection: Optional[ProjPoint] = None
    invariants: Optional[CurveInvariants] = None

    @property
    def distinguished(self) -> list[ProjPoint]:
        """Distinguished points of the component (cusp, then inflection)"""
        return [p for p in (self.cusp, self.inflection) if p is not None]


def lineOf(F: HomPoly) -> ProjLine:
    """
    The line ax + by + cz = 0 of a linear form

    ### Raises:
    * `NumericInputError`: F isn't linear
    """
    if F.degree != 1:
        raise NumericInputError(f"{F} isn't a linear form")
    return ProjLine([
        F.coefficient((1, 0, 0)),
        F.coefficient((0, 1, 0)),
        F.coefficient((0, 0, 1)),
    ])


def _classifyCubic(
    F: HomPoly,
    tol: Optional[float],
) -> ComponentClass:
    try:
        invariants = curveInvariants(F, tol)
    except RepeatedFactorError as e:
        raise ReducibleCurveError(f"{F} has a repeated factor") from e
    if invariants.nodes != 0 or invariants.cusps != 1:
        return ComponentClass(
            ComponentKind.OTHER, 3, invariants=invariants)
    result = normalizeCuspidalCubic(F, tol)
    return ComponentClass(
        ComponentKind.CUSPIDAL_CUBIC,
        3,
        normalizer=result.transform,
        residual=result.residual,
        cusp=result.cusp,
        inflection=result.inflection,
        invariants=invariants,
    )


def classifyComponent(
    F: HomPoly,
    tol: Optional[float] = None,
) -> ComponentClass:
    """
    Classify an irreducible curve

    * Degree 1 gives a line.
    * A nondegenerate conic is equivalent to the Veronese curve and is
      normalized to y^2 - 4xz.
    * A cubic with a single cusp and no nodes is normalized to xy^2 - z^3.
    * Anything else (smooth or nodal cubics, higher degrees) is `OTHER`.

    Reducible conics and cubics are detected exactly from their singular
    points. Above degree 3 only repeated factors and line components are
    detected.

    ### Args:
    * `F` (`HomPoly`): curve
    * `tol` (`float`, optional): tolerance. Defaults to the configured
      tolerance.

    ### Raises:
    * `NumericInputError`: F is constant
    * `ReducibleCurveError`: F is reducible

    ### Returns:
    * `ComponentClass`: classification
    """
    if F.degree == 0:
        raise NumericInputError(f"The constant {F} doesn't define a curve")
    if F.degree == 1:
        result = ComponentClass(ComponentKind.LINE, 1, line=lineOf(F))
    elif F.degree == 2:
        try:
            normalized = normalizeConic(F, tol)
        except DegenerateCurveError as e:
            raise ReducibleCurveError(
                f"The conic {F} is a pair of lines") from e
        result = ComponentClass(
            ComponentKind.VERONESE_CONIC,
            2,
            normalizer=normalized.transform,
            residual=normalized.residual,
        )
    elif F.degree == 3:
        result = _classifyCubic(F, tol)
    else:
        if hasRepeatedFactor(F):
            raise ReducibleCurveError(f"{F} has a repeated factor")
        factor = findLinearFactor(F)
        if factor is not None:
            raise ReducibleCurveError(f"{F} contains the line {factor}")
        result = ComponentClass(ComponentKind.OTHER, F.degree)
    log(
        "classifier.component",
        f"Classified {F} as {result.kind}",
        verbosity.INFO,
    )
    return result
