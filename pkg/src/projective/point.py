"""
projective > point

Points of the complex projective plane and lines of its dual plane, along
with joining points and meeting lines.

Points and lines are stored by canonical representative, with the largest
modulus coordinate scaled to exactly 1. A point p lies on a line l when the
bilinear pairing sum(p[i] * l[i]) vanishes.

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

__all__ = [
    'ProjPoint',
    'ProjLine',
    'join',
    'meet',
]

from typing import Any, Optional

import numpy as np

from common.exceptions import EqualPointsError, EqualLinesError
from common.util.numeric import (
    asComplexArray,
    canonicalScale,
    formatComplex,
    projectiveDistance,
    tolerance,
)


class _Homogeneous:
    """
    Shared implementation of homogeneous coordinate triples, compared up to
    scale
    """
    _WHAT = "coordinates"

    def __init__(self, coords: Any) -> None:
        """
        Create a homogeneous triple

        ### Args:
        * `coords` (`Any`): three complex numbers, not all zero

        ### Raises:
        * `NumericInputError`: non-finite or all-zero coordinates
        """
        self._coords = canonicalScale(
            asComplexArray(coords, (3,), self._WHAT))
        self._coords.flags.writeable = False

    @property
    def coords(self) -> np.ndarray:
        """Canonical representative, with largest entry exactly 1"""
        return self._coords

    def isEqual(
        self,
        other: '_Homogeneous',
        tol: Optional[float] = None,
    ) -> bool:
        """
        Returns whether the two triples are proportional

        ### Args:
        * `other`: other triple
        * `tol` (`float`, optional): tolerance. Defaults to the configured
          tolerance.
        """
        return projectiveDistance(self._coords, other._coords) \
            < tolerance(tol)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, type(self)):
            return NotImplemented
        return self.isEqual(other)

    __hash__ = None  # type: ignore

    def __str__(self) -> str:
        return '[' + ':'.join(formatComplex(c) for c in self._coords) + ']'

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self})"


class ProjPoint(_Homogeneous):
    """
    A point of the projective plane, given by homogeneous coordinates
    """
    _WHAT = "point coordinates"


class ProjLine(_Homogeneous):
    """
    A line of the projective plane, given by dual coordinates, so the line
    with coordinates [a:b:c] is the locus ax + by + cz = 0
    """
    _WHAT = "line coordinates"

    def pairing(self, p: ProjPoint) -> complex:
        """
        The incidence pairing of the canonical representatives, normalized
        to be independent of their scale
        """
        return complex(np.dot(p.coords, self._coords)
                       / (np.linalg.norm(p.coords)
                          * np.linalg.norm(self._coords)))

    def contains(self, p: ProjPoint, tol: Optional[float] = None) -> bool:
        """
        Returns whether the point lies on this line

        ### Args:
        * `p` (`ProjPoint`): point
        * `tol` (`float`, optional): tolerance. Defaults to the configured
          tolerance.

        ### Returns:
        * `bool`: whether p is on the line
        """
        return abs(self.pairing(p)) < tolerance(tol)

    def basis(self) -> tuple[np.ndarray, np.ndarray]:
        """
        Two vectors spanning the line as a plane of C^3

        With i the index of the largest dual coordinate, these are
        e_j - (l_j / l_i) e_i for the two other indices j, in order.

        ### Returns:
        * `tuple[np.ndarray, np.ndarray]`: basis vectors
        """
        pivot = int(np.argmax(np.abs(self._coords)))
        vectors = []
        for j in range(3):
            if j == pivot:
                continue
            v = np.zeros(3, dtype=np.complex128)
            v[j] = 1.0
            v[pivot] = -self._coords[j] / self._coords[pivot]
            vectors.append(v)
        return vectors[0], vectors[1]


def join(p: ProjPoint, q: ProjPoint, tol: Optional[float] = None) -> ProjLine:
    """
    The unique line through two distinct points

    ### Args:
    * `p` (`ProjPoint`): first point
    * `q` (`ProjPoint`): second point
    * `tol` (`float`, optional): tolerance. Defaults to the configured
      tolerance.

    ### Raises:
    * `EqualPointsError`: the points are proportional

    ### Returns:
    * `ProjLine`: line containing both
    """
    if p.isEqual(q, tol):
        raise EqualPointsError(f"Can't join equal points {p} and {q}")
    return ProjLine(np.cross(p.coords, q.coords))


def meet(ell: ProjLine, m: ProjLine, tol: Optional[float] = None) -> ProjPoint:
    """
    The unique point on two distinct lines

    ### Args:
    * `ell` (`ProjLine`): first line
    * `m` (`ProjLine`): second line
    * `tol` (`float`, optional): tolerance. Defaults to the configured
      tolerance.

    ### Raises:
    * `EqualLinesError`: the lines are proportional

    ### Returns:
    * `ProjPoint`: intersection point
    """
    if ell.isEqual(m, tol):
        raise EqualLinesError(f"Can't meet equal lines {ell} and {m}")
    return ProjPoint(np.cross(ell.coords, m.coords))
