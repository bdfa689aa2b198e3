"""
curves > singular

Singular points of plane curves of degree at most 3, typed as nodes, cusps or
other singularities by their tangent cones, along with the repeated factor
guard that singular point detection relies on.

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

__all__ = [
    'SingularKind',
    'SingularPoint',
    'findLinearFactor',
    'hasRepeatedFactor',
    'isSingularAt',
    'singularPoints',
]

from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from common.exceptions import (
    CommonComponentError,
    DegreeUnsupportedError,
    LineIsComponentError,
    RepeatedFactorError,
)
from common.logger import log, verbosity
from common.util.numeric import (
    linkClusters,
    nullSpace,
    numericRank,
    projectiveDistance,
    randomComplex,
    seededRng,
    setting,
    tolerance,
)
from projective import ProjLine, ProjPoint, join
from .binary import BinaryForm
from .hompoly import HomPoly
from .intersection import intersectCurves, lineCurveIntersection

GUARD_SALT = 1
"""Salt for the random lines used by the repeated factor guard"""

FACTOR_SALT = 4
"""Salt for the random lines and points used by the linear factor guard"""

SINGULAR_SALT = 3
"""Salt for the random combinations of partial derivatives"""

# Gauss-Newton steps used to polish singular points
REFINE_STEPS = 3


class SingularKind(Enum):
    NODE = "node"
    CUSP = "cusp"
    OTHER = "other"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, eq=False)
class SingularPoint:
    """
    A singular point of a curve

    Nodes have two distinct tangent lines, cusps have a single tangent line
    (the cuspidal tangent), and other singularities have none listed.
    """
    location: ProjPoint
    kind: SingularKind
    tangents: tuple[ProjLine, ...]


def hasRepeatedFactor(F: HomPoly) -> bool:
    """
    Returns whether the polynomial (probably) has a repeated factor

    A repeated factor gives a multiple root on the restriction to every line,
    whereas a squarefree curve only has multiple roots on its tangent lines
    and the lines through its singular points. The restriction is checked on
    `curves.guard_lines` seeded random lines.

    ### Args:
    * `F` (`HomPoly`): polynomial

    ### Returns:
    * `bool`: whether every random restriction has a multiple root
    """
    if F.degree <= 1:
        return False
    rng = seededRng(GUARD_SALT)
    for _ in range(setting("curves.guard_lines")):
        ell = ProjLine(randomComplex(rng, 3))
        profile = lineCurveIntersection(F, ell)
        if all(m == 1 for _, m in profile.entries):
            return False
    return True


def _vanishesOn(
    F: HomPoly,
    ell: ProjLine,
    rng: np.random.Generator,
) -> bool:
    """Whether F vanishes at a few random points of a line"""
    basis = nullSpace(ell.coords.reshape(1, 3), tolerance())
    threshold = setting("curves.factor_residual")
    for _ in range(3):
        v = randomComplex(rng, 2) @ basis
        scale = F.norm() * np.linalg.norm(v) ** F.degree
        if abs(F(v)) > threshold * scale:
            return False
    return True


def findLinearFactor(F: HomPoly) -> Optional[ProjLine]:
    """
    Look for a line contained in a curve

    A line component meets every other line, so it passes through one of
    the intersections of F with each of two random lines. Every line
    joining an intersection on the first to one on the second is tested by
    evaluating F along it, relative to `curves.factor_residual`.

    ### Args:
    * `F` (`HomPoly`): polynomial of degree at least 2

    ### Returns:
    * `Optional[ProjLine]`: a line component, or `None` if there is
      (probably) none
    """
    if F.degree <= 1:
        return None
    rng = seededRng(FACTOR_SALT)
    first, second = (
        lineCurveIntersection(F, ProjLine(randomComplex(rng, 3)))
        for _ in range(2)
    )
    for p, _ in first.entries:
        for q, _ in second.entries:
            if p.isEqual(q):
                continue
            candidate = join(p, q)
            if _vanishesOn(F, candidate, rng):
                log(
                    "curves.singular",
                    f"{candidate} is a component of {F}",
                    verbosity.INFO,
                )
                return candidate
    return None


def _relativeGradient(F: HomPoly, v: np.ndarray) -> float:
    scale = F.norm() * np.linalg.norm(v) ** (F.degree - 1)
    return float(np.linalg.norm(F.gradient(v)) / scale)


def isSingularAt(F: HomPoly, p: ProjPoint) -> bool:
    """
    Returns whether the gradient of F vanishes at a point, relative to
    `curves.gradient_tol`
    """
    return _relativeGradient(F, p.coords) < setting("curves.gradient_tol")


def _refine(F: HomPoly, v: np.ndarray) -> np.ndarray:
    """
    Polish an approximate singular point with Gauss-Newton steps on the
    gradient, keeping a step only if it improves the gradient
    """
    best = v / np.linalg.norm(v)
    best_value = _relativeGradient(F, best)
    for _ in range(REFINE_STEPS):
        step, *_ = np.linalg.lstsq(
            F.hessian(best), -F.gradient(best), rcond=None)
        candidate = best + step
        candidate = candidate / np.linalg.norm(candidate)
        value = _relativeGradient(F, candidate)
        if value >= best_value:
            break
        best, best_value = candidate, value
    return best


def _candidates(F: HomPoly, tol: float) -> list[np.ndarray]:
    """
    Approximate solutions of grad F = 0, for a curve of degree 2 or 3
    """
    if F.degree == 2:
        return list(nullSpace(F.quadraticFormMatrix(), tol))
    rng = seededRng(SINGULAR_SALT)
    partials = F.partials()
    combos = []
    for _ in range(2):
        weights = randomComplex(rng, 3)
        combos.append(sum(
            (d * w for w, d in zip(weights, partials)),
            HomPoly.zero(F.degree - 1),
        ))
    try:
        profile = intersectCurves(combos[0], combos[1], tol)
    except CommonComponentError:
        raise RepeatedFactorError(
            f"The singular locus of {F} isn't finite") from None
    return [p.coords for p in profile.points]


def _nodeTangents(
    p: ProjPoint,
    hessian: np.ndarray,
) -> tuple[ProjLine, ...]:
    """
    The tangent lines at a node: the tangent cone v^T H v = 0 is a pair of
    lines through p, found by restricting it to a line missing p
    """
    b1, b2 = ProjLine(np.conj(p.coords)).basis()
    a = b1 @ hessian @ b1
    b = 2 * (b1 @ hessian @ b2)
    c = b2 @ hessian @ b2
    lines = []
    for (s, t), _ in BinaryForm([a, b, c]).roots():
        lines.append(join(p, ProjPoint(s * b1 + t * b2)))
    return tuple(lines)


def _typePoint(F: HomPoly, v: np.ndarray) -> SingularPoint:
    """
    Type a singular point by the rank of the Hessian there, which is the
    quadratic part of F at the point
    """
    p = ProjPoint(v)
    hessian = F.hessian(p.coords)
    scale = F.norm() * np.linalg.norm(p.coords) ** (F.degree - 2)
    s = np.linalg.svd(hessian, compute_uv=False)
    rank = int(np.sum(s > setting("curves.cone_rank_tol") * scale))
    if rank == 2:
        return SingularPoint(p, SingularKind.NODE, _nodeTangents(p, hessian))
    if rank == 1:
        _, _, vh = np.linalg.svd(hessian)
        tangent = ProjLine(vh[0])
        try:
            profile = lineCurveIntersection(F, tangent)
        except LineIsComponentError:
            return SingularPoint(p, SingularKind.OTHER, ())
        meeting = profile.multiplicityAt(p, setting("curves.merge_radius"))
        if meeting >= 3:
            return SingularPoint(p, SingularKind.CUSP, (tangent,))
    return SingularPoint(p, SingularKind.OTHER, ())


def singularPoints(
    F: HomPoly,
    tol: Optional[float] = None,
) -> list[SingularPoint]:
    """
    Find and type the singular points of a curve

    Candidates are the common zeros of two random combinations of the
    partial derivatives, filtered by the size of the gradient
    (`curves.gradient_tol`) and polished. Each is then typed by its tangent
    cone:

    * Node: the quadratic part has rank 2, so it is two distinct lines.
    * Cusp: the quadratic part is a double line which meets the curve with
      multiplicity 3 at the point.
    * Other: anything else.

    ### Args:
    * `F` (`HomPoly`): squarefree curve of degree at most 3
    * `tol` (`float`, optional): tolerance for the rank of a conic. Defaults
      to the configured tolerance.

    ### Raises:
    * `DegreeUnsupportedError`: degree above 3
    * `RepeatedFactorError`: F has a repeated factor

    ### Returns:
    * `list[SingularPoint]`: singular points
    """
    if F.degree > 3:
        raise DegreeUnsupportedError(
            f"Singular points are only found up to degree 3, not {F.degree}")
    if F.degree <= 1:
        return []
    if hasRepeatedFactor(F):
        raise RepeatedFactorError(f"{F} has a repeated factor")
    if F.degree == 2 \
            and numericRank(F.quadraticFormMatrix(), tolerance(tol)) == 3:
        return []

    threshold = setting("curves.gradient_tol")
    found = []
    for v in _candidates(F, tolerance(tol)):
        v = _refine(F, v)
        if _relativeGradient(F, v) < threshold:
            found.append(v)
    radius = setting("curves.merge_radius")
    groups = linkClusters(
        found, lambda a, b: projectiveDistance(a, b) < radius)
    points = [_typePoint(F, g[0]) for g in groups]
    described = [f"{p.kind} at {p.location}" for p in points]
    log(
        "curves.singular",
        f"{F} has singular points: {', '.join(described) or 'none'}",
        verbosity.INFO,
    )
    return points
