"""
families > normalize

Projective normalization of smooth conics to the Veronese conic and of
cuspidal cubics to xy^2 - z^3.

A normalizer of a curve F is a transformation T with pullback(model, T)
proportional to F, so T maps the curve onto the model.

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

__all__ = [
    'ModelKind',
    'NormalizationResult',
    'normalizeConic',
    'normalizeCuspidalCubic',
]

from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from common.exceptions import (
    CurveError,
    DegenerateCurveError,
    EqualLinesError,
    FrameDegenerateError,
    WrongTypeError,
)
from common.logger import log, verbosity
from common.util.numeric import (
    numericRank,
    projectiveDistance,
    randomComplex,
    seededRng,
    setting,
    tolerance,
)
from curves import (
    HomPoly,
    SingularKind,
    inflectionPoints,
    lineCurveIntersection,
    proportionalityResidual,
    pullback,
    singularPoints,
)
from projective import ProjLine, ProjPoint, ProjTransform, meet
from .cubic import CUSPIDAL_CUBIC
from .veronese import VERONESE_CONIC

FRAME_SALT = 4
"""Salt for the random lines used to pick the fourth frame point"""

# Columns r with r^T B r = I, where B is the matrix of y^2 - 4xz
_SUM_OF_SQUARES_TO_VERONESE = np.array([
    [0.5, 0, 0.5j],
    [0, 1, 0],
    [-0.5, 0, 0.5j],
])


class ModelKind(Enum):
    VERONESE_CONIC = "veronese-conic"
    CUSPIDAL_CUBIC = "cuspidal-cubic"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, eq=False)
class NormalizationResult:
    """
    A transformation mapping a curve onto one of the models, with the
    relative residual of pullback(model, transform) against the curve

    For cubics, the cusp and inflection of the input curve are included.
    """
    transform: ProjTransform
    model: ModelKind
    residual: float
    cusp: Optional[ProjPoint] = None
    inflection: Optional[ProjPoint] = None

    @property
    def modelPolynomial(self) -> HomPoly:
        if self.model == ModelKind.VERONESE_CONIC:
            return VERONESE_CONIC
        return CUSPIDAL_CUBIC


def _checkResidual(
    F: HomPoly,
    model: HomPoly,
    transform: ProjTransform,
) -> float:
    _, residual = proportionalityResidual(F, pullback(model, transform))
    if residual >= setting("families.normalize_residual"):
        log(
            "families.normalize",
            f"Normalizer of {F} only reached residual {residual:.3e}",
            verbosity.WARNING,
        )
    return residual


def _congruenceToIdentity(a: np.ndarray) -> np.ndarray:
    """
    Find T with T^T A T = I for an invertible complex symmetric matrix A, by
    completing squares
    """
    t = np.eye(3, dtype=np.complex128)
    for k in range(3):
        m = t.T @ a @ t
        block = np.abs(m[k:, k:])
        diagonal = np.diag(block)
        pivot = k + int(np.argmax(diagonal))
        if diagonal.max() < 0.5 * block.max():
            # All squares are small, so use a cross term x_i x_j to make one
            i, j = np.unravel_index(np.argmax(block), block.shape)
            pivot = k + int(i)
            t[:, pivot] = t[:, pivot] + t[:, k + int(j)]
        t[:, [k, pivot]] = t[:, [pivot, k]]
        m = t.T @ a @ t
        for j in range(k + 1, 3):
            t[:, j] -= (m[k, j] / m[k, k]) * t[:, k]
        t[:, k] /= np.sqrt(m[k, k])
    return t


def normalizeConic(
    F: HomPoly,
    tol: Optional[float] = None,
) -> NormalizationResult:
    """
    Normalize a smooth conic to y^2 - 4xz

    The conic's matrix A is reduced to the identity by a congruence
    T^T A T = I, then a fixed change of frame takes x^2 + y^2 + z^2 to the
    Veronese conic.

    ### Args:
    * `F` (`HomPoly`): conic
    * `tol` (`float`, optional): tolerance for the rank of the conic.
      Defaults to the configured tolerance.

    ### Raises:
    * `WrongTypeError`: F isn't a conic
    * `DegenerateCurveError`: the conic's matrix is singular

    ### Returns:
    * `NormalizationResult`: normalizer
    """
    if F.degree != 2:
        raise WrongTypeError(f"{F} isn't a conic")
    a = F.quadraticFormMatrix()
    if numericRank(a, tolerance(tol)) < 3:
        raise DegenerateCurveError(f"The conic {F} is degenerate")
    t = _congruenceToIdentity(a)
    transform = ProjTransform(
        _SUM_OF_SQUARES_TO_VERONESE @ np.linalg.inv(t))
    residual = _checkResidual(F, VERONESE_CONIC, transform)
    log(
        "families.normalize",
        f"Normalized conic {F} using {transform}",
        verbosity.INFO,
    )
    return NormalizationResult(transform, ModelKind.VERONESE_CONIC, residual)


def _extraFramePoint(
    F: HomPoly,
    excluded: list[ProjPoint],
) -> ProjPoint:
    """
    A smooth point of the curve other than the excluded points, found on
    seeded random lines
    """
    rng = seededRng(FRAME_SALT)
    radius = setting("curves.merge_radius")
    for _ in range(setting("families.frame_retries")):
        ell = ProjLine(randomComplex(rng, 3))
        for p, m in lineCurveIntersection(F, ell).entries:
            if m == 1 and all(
                projectiveDistance(p.coords, q.coords) > radius
                for q in excluded
            ):
                return p
        log(
            "families.normalize",
            f"No usable frame point on {ell}, retrying",
            verbosity.NOTE,
        )
    raise FrameDegenerateError(
        f"Couldn't find a fourth frame point on {F}")


def _frameTransform(frame: list[ProjPoint], extra: ProjPoint) -> np.ndarray:
    """
    The matrix taking the frame points to the coordinate points and the
    extra point to [1:1:1]
    """
    p = np.column_stack([q.coords for q in frame])
    if numericRank(p, 1e-6) < 3:
        raise FrameDegenerateError("The frame points are collinear")
    weights = np.linalg.solve(p, extra.coords)
    if np.min(np.abs(weights)) < 1e-6 * np.max(np.abs(weights)):
        raise FrameDegenerateError(
            "The fourth frame point lies on a side of the frame triangle")
    return np.linalg.inv(p @ np.diag(weights))


def normalizeCuspidalCubic(
    F: HomPoly,
    tol: Optional[float] = None,
) -> NormalizationResult:
    """
    Normalize a cuspidal cubic to xy^2 - z^3

    The frame sends the cusp to [1:0:0], the inflection to [0:1:0], the meet
    of the cuspidal and inflectional tangents to [0:0:1] and another smooth
    point of the curve to [1:1:1]. Any curve point other than the cusp and
    the inflection works for the last point, since it is then off all three
    sides of the frame triangle.

    ### Args:
    * `F` (`HomPoly`): cubic
    * `tol` (`float`, optional): tolerance. Defaults to the configured
      tolerance.

    ### Raises:
    * `WrongTypeError`: F isn't a cubic with a single cusp and a single
      inflection
    * `FrameDegenerateError`: the frame points aren't in general position

    ### Returns:
    * `NormalizationResult`: normalizer, along with the cusp and inflection
    """
    if F.degree != 3:
        raise WrongTypeError(f"{F} isn't a cubic")
    try:
        singular = singularPoints(F, tol)
        if len(singular) != 1 or singular[0].kind != SingularKind.CUSP:
            raise WrongTypeError(f"{F} doesn't have exactly one cusp")
        inflections = inflectionPoints(F, tol)
    except CurveError as e:
        raise WrongTypeError(f"{F} isn't a cuspidal cubic: {e}") from e
    if len(inflections) != 1:
        raise WrongTypeError(
            f"{F} has {len(inflections)} inflections rather than one")

    cusp = singular[0].location
    inflection = inflections[0]
    cusp_tangent = singular[0].tangents[0]
    inflection_tangent = ProjLine(F.gradient(inflection.coords))
    try:
        corner = meet(cusp_tangent, inflection_tangent, tol)
    except EqualLinesError:
        raise FrameDegenerateError(
            "The cuspidal and inflectional tangents coincide") from None
    extra = _extraFramePoint(F, [cusp, inflection])
    transform = ProjTransform(
        _frameTransform([cusp, inflection, corner], extra))
    residual = _checkResidual(F, CUSPIDAL_CUBIC, transform)
    log(
        "families.normalize",
        f"Normalized cubic {F} with cusp {cusp} and inflection {inflection}",
        verbosity.INFO,
    )
    return NormalizationResult(
        transform,
        ModelKind.CUSPIDAL_CUBIC,
        residual,
        cusp=cusp,
        inflection=inflection,
    )
