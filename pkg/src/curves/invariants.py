"""
curves > invariants

Numeric invariants of plane curves with only nodes and cusps as
singularities: the genus formula of Clebsch, the Pluecker formulas for the
class and the number of inflections, and a census computing them all for a
given curve.

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

__all__ = [
    'CurveInvariants',
    'clebschGenus',
    'plueckerClass',
    'plueckerInflections',
    'curveInvariants',
]

from dataclasses import dataclass, field
from typing import Optional

from common.exceptions import (
    InconsistentInvariantsError,
    NegativeGenusError,
    NumericInputError,
    ReducibleCurveError,
)
from projective import ProjPoint
from .hompoly import HomPoly
from .inflection import inflectionPoints
from .singular import SingularKind, SingularPoint, singularPoints


def _checkCounts(n: int, d: int, s: int, minimum: int) -> None:
    if n < minimum:
        raise NumericInputError(
            f"Degree must be at least {minimum}, not {n}")
    if d < 0 or s < 0:
        raise NumericInputError(
            f"Node and cusp counts must be nonnegative, not {d} and {s}")


def clebschGenus(n: int, d: int, s: int) -> int:
    """
    Genus (n - 1)(n - 2)/2 - d - s of a curve of degree n with d nodes and s
    cusps

    ### Raises:
    * `NumericInputError`: n < 1 or a negative count
    * `NegativeGenusError`: the genus is negative, so no such irreducible
      curve exists
    """
    _checkCounts(n, d, s, 1)
    genus = (n - 1) * (n - 2) // 2 - d - s
    if genus < 0:
        raise NegativeGenusError(
            f"A curve of degree {n} can't have {d} nodes and {s} cusps")
    return genus


def plueckerClass(n: int, d: int, s: int) -> int:
    """
    Class n(n - 1) - 2d - 3s of a curve of degree n with d nodes and s cusps,
    which is the degree of its dual curve

    ### Raises:
    * `NumericInputError`: n < 2 or a negative count
    * `InconsistentInvariantsError`: the class is negative
    """
    _checkCounts(n, d, s, 2)
    value = n * (n - 1) - 2 * d - 3 * s
    if value < 0:
        raise InconsistentInvariantsError(
            f"Class formula is negative for n={n}, d={d}, s={s}")
    return value


def plueckerInflections(n: int, d: int, s: int) -> int:
    """
    Number of inflections 3n(n - 2) - 6d - 8s of a curve of degree n with d
    nodes and s cusps

    ### Raises:
    * `NumericInputError`: n < 2 or a negative count
    * `InconsistentInvariantsError`: the count is negative
    """
    _checkCounts(n, d, s, 2)
    value = 3 * n * (n - 2) - 6 * d - 8 * s
    if value < 0:
        raise InconsistentInvariantsError(
            f"Inflection formula is negative for n={n}, d={d}, s={s}")
    return value


@dataclass(frozen=True)
class CurveInvariants:
    degree: int
    nodes: int
    cusps: int
    curveClass: int
    inflections: int
    genus: int
    observedInflections: Optional[int] = None
    """Number of inflections found directly, to cross-check the formula"""
    singularities: tuple[SingularPoint, ...] = field(
        default=(), compare=False)
    inflectionLocations: tuple[ProjPoint, ...] = field(
        default=(), compare=False)
    """The singular points and inflections the counts were taken from"""

    @property
    def consistent(self) -> bool:
        return self.observedInflections in (None, self.inflections)


def curveInvariants(
    F: HomPoly,
    tol: Optional[float] = None,
) -> CurveInvariants:
    """
    Compute the singularity census of an irreducible curve of degree at most
    3, and its invariants from the formulas

    ### Args:
    * `F` (`HomPoly`): curve
    * `tol` (`float`, optional): tolerance. Defaults to the configured
      tolerance.

    ### Raises:
    * `DegreeUnsupportedError`: degree above 3
    * `RepeatedFactorError`: F has a repeated factor
    * `ReducibleCurveError`: F is reducible, so the formulas don't apply

    ### Returns:
    * `CurveInvariants`: invariants
    """
    if F.degree == 1:
        return CurveInvariants(1, 0, 0, 0, 0, 0, 0)
    singular = singularPoints(F, tol)
    kinds = [p.kind for p in singular]
    if SingularKind.OTHER in kinds:
        raise ReducibleCurveError(f"{F} has a non-simple singular point")
    d = kinds.count(SingularKind.NODE)
    s = kinds.count(SingularKind.CUSP)
    try:
        genus = clebschGenus(F.degree, d, s)
    except NegativeGenusError:
        raise ReducibleCurveError(
            f"{F} has too many singular points to be irreducible") from None
    inflections = inflectionPoints(F, tol)
    return CurveInvariants(
        degree=F.degree,
        nodes=d,
        cusps=s,
        curveClass=plueckerClass(F.degree, d, s),
        inflections=plueckerInflections(F.degree, d, s),
        genus=genus,
        observedInflections=len(inflections),
        singularities=tuple(singular),
        inflectionLocations=tuple(inflections),
    )
