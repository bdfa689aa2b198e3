"""
curves > dual

Dual curves: the curve traced out in the dual plane by the tangent lines of
a curve. Its degree is the class of the curve.

Conics are dualized exactly. Otherwise the tangent lines of a rational
parametrization are sampled and an implicit equation of degree 2 or 3 is fitted
through them.

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

__all__ = [
    'DualCurve',
    'dualCurve',
]

from dataclasses import dataclass
from typing import Optional

import numpy as np

from common.exceptions import (
    DegenerateCurveError,
    ReducibleCurveError,
    UnsupportedDualError,
)
from common.logger import log, verbosity
from common.util.numeric import (
    canonicalScale,
    numericRank,
    randomComplex,
    seededRng,
    setting,
    tolerance,
)
from .hompoly import HomPoly, monomialValues
from .rational import RationalCurve, parametrizeSingularCubic
from .singular import SingularKind, singularPoints

DUAL_SALT = 5
"""Salt for the sampled parameters used to fit dual curves"""

# Degrees tried when fitting an implicit dual curve
FIT_DEGREES = (2, 3)


@dataclass(frozen=True, eq=False)
class DualCurve:
    """
    A dual curve, with coordinates [a:b:c] standing for the line
    ax + by + cz = 0. The tangent line parametrization is included when the
    dual came from a parametrized curve.
    """
    implicit: HomPoly
    parametrization: Optional[RationalCurve] = None

    @property
    def degree(self) -> int:
        return self.implicit.degree


def _fitImplicit(curve: RationalCurve) -> HomPoly:
    """
    Fit the lowest degree implicit equation through sampled tangent lines
    """
    rng = seededRng(DUAL_SALT)
    tangents = curve.tangentForms()
    samples = []
    while len(samples) < setting("curves.dual_samples"):
        tau = complex(randomComplex(rng))
        line = np.array([f.evaluate(1, tau) for f in tangents])
        norm = np.linalg.norm(line)
        if norm > 0:
            samples.append(line / norm)

    threshold = setting("curves.dual_residual")
    for degree in FIT_DEGREES:
        rows = np.array([monomialValues(degree, v) for v in samples])
        rows /= np.linalg.norm(rows, axis=1, keepdims=True)
        _, s, vh = np.linalg.svd(rows)
        if s[-1] / s[0] >= threshold:
            continue
        if s[-2] / s[0] < threshold:
            raise UnsupportedDualError(
                f"Sampled tangent lines fit several curves of degree {degree}")
        log(
            "curves.dual",
            f"Fitted dual curve of degree {degree}, residual "
            f"{s[-1] / s[0]:.3e}",
            verbosity.INFO,
        )
        return HomPoly.fromVector(degree, canonicalScale(vh[-1].conj()))
    raise UnsupportedDualError(
        f"No dual curve of degree at most {FIT_DEGREES[-1]} fits the "
        f"tangent lines of {curve}")


def _singularCubicParametrization(F: HomPoly) -> RationalCurve:
    singular = singularPoints(F)
    if not singular:
        raise UnsupportedDualError(
            f"The dual of the smooth cubic {F} has degree 6, which isn't "
            f"supported")
    if len(singular) > 1 or singular[0].kind == SingularKind.OTHER:
        raise ReducibleCurveError(
            f"The cubic {F} has {len(singular)} singular points")
    return parametrizeSingularCubic(F, singular[0].location)


def dualCurve(
    F: HomPoly,
    parametrization: Optional[RationalCurve] = None,
    tol: Optional[float] = None,
) -> DualCurve:
    """
    The dual of a curve

    * A nondegenerate conic with matrix A has the dual conic with matrix
      A^-1.
    * A curve with a rational parametrization has the dual traced out by its
      tangent lines, which is fitted with an implicit equation of degree 2
      or 3.
    * A cubic with one node or cusp is parametrized from it automatically.

    ### Args:
    * `F` (`HomPoly`): curve
    * `parametrization` (`RationalCurve`, optional): parametrization of F.
      Defaults to `None`.
    * `tol` (`float`, optional): tolerance. Defaults to the configured
      tolerance.

    ### Raises:
    * `DegenerateCurveError`: F is a conic with a singular matrix
    * `UnsupportedDualError`: F isn't a conic and can't be parametrized,
      or its dual has degree above 3
    * `ReducibleCurveError`: F is a cubic with several singular points

    ### Returns:
    * `DualCurve`: dual curve
    """
    if F.degree == 2 and parametrization is None:
        a = F.quadraticFormMatrix()
        if numericRank(a, tolerance(tol)) < 3:
            raise DegenerateCurveError(f"The conic {F} is degenerate")
        dual = HomPoly.fromQuadraticForm(canonicalScale(np.linalg.inv(a)))
        log("curves.dual", f"Dual of {F} is {dual}", verbosity.INFO)
        return DualCurve(dual)
    if parametrization is None:
        if F.degree != 3:
            raise UnsupportedDualError(
                f"Can't find the dual of a curve of degree {F.degree} "
                f"without a parametrization")
        parametrization = _singularCubicParametrization(F)
    return DualCurve(_fitImplicit(parametrization), parametrization)
