"""
curves > intersection

Intersections of plane curves with lines and with each other, with
multiplicities.

A line meets a curve of degree n in n points counted with multiplicity. They
are found by restricting the polynomial to the line, which gives a binary
form. Two curves of degrees m and n meet in mn points, found from the
resultant of the two polynomials with respect to z, after moving to generic
coordinates.

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

__all__ = [
    'IntersectionProfile',
    'restrictToSpan',
    'restrictToLine',
    'lineCurveIntersection',
    'intersectCurves',
]

from dataclasses import dataclass
from typing import Any, Optional

import numpy as np

from common.exceptions import (
    CommonComponentError,
    DegreeUnsupportedError,
    LineIsComponentError,
)
from common.logger import log, verbosity
from common.util.numeric import (
    projectiveDistance,
    randomUnitary,
    seededRng,
    setting,
    tolerance,
)
from projective import ProjLine, ProjPoint
from .binary import BinaryForm
from .hompoly import HomPoly, pullbackMatrix

INTERSECTION_SALT = 2
"""Salt for the random coordinate changes used when intersecting curves"""

# Largest degree for which intersections of two curves are computed
MAX_DEGREE = 3


@dataclass(frozen=True, eq=False)
class IntersectionProfile:
    """
    The points where two loci meet, each with its intersection multiplicity
    """
    entries: tuple[tuple[ProjPoint, int], ...]

    @property
    def total(self) -> int:
        """Sum of the multiplicities"""
        return sum(m for _, m in self.entries)

    @property
    def points(self) -> list[ProjPoint]:
        return [p for p, _ in self.entries]

    def multiplicityAt(self, p: ProjPoint, tol: Optional[float] = None) -> int:
        """
        Intersection multiplicity at a point, which is zero if the loci don't
        meet there
        """
        return sum(m for q, m in self.entries if q.isEqual(p, tol))

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return ', '.join(f"{p} (x{m})" for p, m in self.entries)


def _scaledValue(F: HomPoly, v: np.ndarray) -> float:
    """|F(v)| relative to the norm of F and the size of v"""
    return abs(F(v)) / (F.norm() * np.linalg.norm(v) ** F.degree)


def restrictToSpan(F: HomPoly, u: Any, v: Any) -> BinaryForm:
    """
    The binary form F(s u + t v)
    """
    n = F.degree
    restricted = pullbackMatrix(
        F, np.column_stack([u, v, np.zeros(3, dtype=np.complex128)]))
    return BinaryForm([restricted.coefficient((n - k, k, 0))
                       for k in range(n + 1)])


def restrictToLine(
    F: HomPoly,
    ell: ProjLine,
) -> tuple[BinaryForm, np.ndarray, np.ndarray]:
    """
    Restrict a polynomial to a line, parametrized as s u + t v

    The spanning vectors u and v are chosen among a few combinations of the
    basis of the line so that F is as large as possible at [1:0], which keeps
    the roots of the restriction away from it.

    ### Args:
    * `F` (`HomPoly`): polynomial
    * `ell` (`ProjLine`): line

    ### Returns:
    * `tuple[BinaryForm, ndarray, ndarray]`: the binary form F(s u + t v),
      along with u and v
    """
    b1, b2 = ell.basis()
    candidates = [b1, b2, b1 + b2, b1 - b2, b1 + 1j * b2, b1 - 1j * b2]
    ranked = sorted(candidates, key=lambda u: -_scaledValue(F, u))
    u1 = ranked[0]
    u2 = next(u for u in ranked[1:] if projectiveDistance(u, u1) > 0.1)
    return restrictToSpan(F, u1, u2), u1, u2


def lineCurveIntersection(
    F: HomPoly,
    ell: ProjLine,
    tol: Optional[float] = None,
) -> IntersectionProfile:
    """
    Points where a line meets a curve, with their intersection multiplicities

    The multiplicities always sum to the degree of the curve.

    ### Args:
    * `F` (`HomPoly`): curve
    * `ell` (`ProjLine`): line, which mustn't be a component of the curve
    * `tol` (`float`, optional): tolerance. Defaults to the configured
      tolerance.

    ### Raises:
    * `LineIsComponentError`: F vanishes identically on the line

    ### Returns:
    * `IntersectionProfile`: intersection points
    """
    form, u1, u2 = restrictToLine(F, ell)
    bound = tolerance(tol) * F.norm() \
        * (np.linalg.norm(u1) + np.linalg.norm(u2)) ** F.degree
    if form.norm() <= bound:
        raise LineIsComponentError(f"The line {ell} is a component of {F}")
    entries = tuple(
        (ProjPoint(s * u1 + t * u2), m) for (s, t), m in form.roots())
    log(
        "curves.intersection",
        f"Line {ell} meets {F} at {', '.join(str(p) for p, _ in entries)}",
        verbosity.INFO,
    )
    return IntersectionProfile(entries)


def _zCoefficients(F: HomPoly, x: complex, y: complex) -> np.ndarray:
    """
    Coefficients of F(x, y, z) as a polynomial in z, highest power first
    """
    out = np.zeros(F.degree + 1, dtype=np.complex128)
    for (i, j, k), c in F.coefficients.items():
        out[F.degree - k] += c * x ** i * y ** j
    return out


def _sylvester(f: np.ndarray, g: np.ndarray) -> np.ndarray:
    """
    Sylvester matrix of two univariate polynomials, given highest power
    first
    """
    m = len(f) - 1
    n = len(g) - 1
    s = np.zeros((m + n, m + n), dtype=np.complex128)
    for row in range(n):
        s[row, row:row + m + 1] = f
    for row in range(m):
        s[n + row, row:row + n + 1] = g
    return s


def _resultantForm(
    F: HomPoly,
    G: HomPoly,
    tol: float,
) -> BinaryForm:
    """
    The resultant of F and G with respect to z, as a binary form in x, y of
    degree mn, recovered from its values on the unit circle
    """
    degree = F.degree * G.degree
    count = degree + 1
    values = np.zeros(count, dtype=np.complex128)
    bound = 0.0
    for j in range(count):
        y = np.exp(2j * np.pi * j / count)
        s = _sylvester(_zCoefficients(F, 1, y), _zCoefficients(G, 1, y))
        values[j] = np.linalg.det(s)
        bound = max(bound, float(np.prod(np.linalg.norm(s, axis=1))))
    if np.max(np.abs(values)) <= tol * bound:
        raise CommonComponentError(f"The curves {F} and {G} share a component")
    # R(1, y) = sum(r[k] y^k), so the values are an inverse DFT of r
    return BinaryForm(np.fft.fft(values) / count)


def _liftRoot(
    F: HomPoly,
    G: HomPoly,
    x: complex,
    y: complex,
) -> np.ndarray:
    """
    Find z such that [x:y:z] is on both curves, choosing among the roots of F
    the one where G is smallest
    """
    zs = np.roots(_zCoefficients(F, x, y))
    best = min(zs, key=lambda z: abs(G(np.array([x, y, z]))))
    return np.array([x, y, best], dtype=np.complex128)


def intersectCurves(
    F: HomPoly,
    G: HomPoly,
    tol: Optional[float] = None,
) -> IntersectionProfile:
    """
    Points where two curves meet, with their intersection multiplicities

    The curves are first moved by a seeded random unitary transformation, so
    that the point [0:0:1] lies on neither curve and no two intersection
    points are on a line through it. The roots of the resultant with respect
    to z are then the projections of the intersection points, with the
    right multiplicities. If the lifted points don't lie on both curves, a
    new coordinate change is tried, up to `curves.intersection_retries`
    times.

    ### Args:
    * `F` (`HomPoly`): first curve, of degree 1 to 3
    * `G` (`HomPoly`): second curve, of degree 1 to 3
    * `tol` (`float`, optional): tolerance. Defaults to the configured
      tolerance.

    ### Raises:
    * `DegreeUnsupportedError`: a degree is outside 1 to 3
    * `CommonComponentError`: the curves share a component

    ### Returns:
    * `IntersectionProfile`: intersection points, with multiplicities summing
      to the product of the degrees
    """
    for curve in (F, G):
        if not 1 <= curve.degree <= MAX_DEGREE:
            raise DegreeUnsupportedError(
                f"Can't intersect curves of degree {curve.degree}")
    tol = tolerance(tol)
    rng = seededRng(INTERSECTION_SALT)
    threshold = setting("curves.cluster_radius")
    best: Optional[tuple[float, IntersectionProfile]] = None
    for attempt in range(max(1, setting("curves.intersection_retries"))):
        u = randomUnitary(rng)
        moved_f = pullbackMatrix(F, u)
        moved_g = pullbackMatrix(G, u)
        entries = []
        worst = 0.0
        for (x, y), m in _resultantForm(moved_f, moved_g, tol).roots():
            v = _liftRoot(moved_f, moved_g, x, y)
            worst = max(
                worst, _scaledValue(moved_f, v), _scaledValue(moved_g, v))
            entries.append((ProjPoint(u @ v), m))
        profile = IntersectionProfile(tuple(entries))
        if worst < threshold:
            return profile
        log(
            "curves.intersection",
            f"Intersection attempt {attempt} had residual {worst:.3e}, "
            f"retrying",
            verbosity.NOTE,
        )
        if best is None or worst < best[0]:
            best = (worst, profile)
    assert best is not None
    log(
        "curves.intersection",
        f"Intersection of {F} and {G} only reached residual {best[0]:.3e}",
        verbosity.WARNING,
    )
    return best[1]
