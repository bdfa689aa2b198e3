"""
projective > transform

Projective transformations (invertible 3x3 matrices up to scale) and
pseudo-projective maps (nonzero, possibly singular, 3x3 matrices up to
scale), along with their action on points and lines.

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

__all__ = [
    'ProjTransform',
    'PseudoProjMap',
    'apply',
    'applyToLine',
    'kernel',
]

from typing import Any, Optional, Union

import numpy as np

from common.exceptions import SingularTransformError
from common.util.numeric import (
    asComplexArray,
    canonicalScale,
    formatComplex,
    nullSpace,
    numericRank,
    projectiveDistance,
    tolerance,
)
from .point import ProjPoint, ProjLine


def _formatMatrix(m: np.ndarray) -> str:
    return '[' + ', '.join(
        '[' + ', '.join(formatComplex(c) for c in row) + ']' for row in m
    ) + ']'


class ProjTransform:
    """
    An element of PSL(3, C)

    The matrix is stored as its determinant 1 lift, taking the principal cube
    root of the determinant. Transforms compare equal when their matrices are
    proportional.
    """

    def __init__(self, matrix: Any, tol: Optional[float] = None) -> None:
        """
        Create a projective transformation

        ### Args:
        * `matrix` (`Any`): 3x3 complex matrix
        * `tol` (`float`, optional): relative tolerance used to decide
          invertibility. Defaults to the configured tolerance.

        ### Raises:
        * `NumericInputError`: non-finite or zero matrix
        * `SingularTransformError`: matrix isn't invertible
        """
        arr = asComplexArray(matrix, (3, 3), "transform matrix")
        if numericRank(arr, tolerance(tol)) < 3:
            raise SingularTransformError(
                f"Matrix {_formatMatrix(arr)} isn't invertible")
        det = complex(np.linalg.det(arr))
        self._lift = arr / det ** (1 / 3)
        self._lift.flags.writeable = False

    @classmethod
    def identity(cls) -> 'ProjTransform':
        return cls(np.eye(3))

    @property
    def lift(self) -> np.ndarray:
        """The determinant 1 lift, using the principal cube root"""
        return self._lift

    @property
    def matrix(self) -> np.ndarray:
        """The canonical representative, with largest entry exactly 1"""
        return canonicalScale(self._lift)

    def inverse(self) -> 'ProjTransform':
        return ProjTransform(np.linalg.inv(self._lift))

    def __matmul__(self, other: 'ProjTransform') -> 'ProjTransform':
        if not isinstance(other, ProjTransform):
            return NotImplemented
        return ProjTransform(self._lift @ other._lift)

    def power(self, n: int) -> 'ProjTransform':
        """
        The nth power of the transform (negative powers are allowed)
        """
        base = self._lift if n >= 0 else np.linalg.inv(self._lift)
        return ProjTransform(np.linalg.matrix_power(base, abs(n)))

    def isEqual(
        self,
        other: 'ProjTransform',
        tol: Optional[float] = None,
    ) -> bool:
        """
        Returns whether the matrices are proportional
        """
        return projectiveDistance(self._lift, other._lift) < tolerance(tol)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProjTransform):
            return NotImplemented
        return self.isEqual(other)

    __hash__ = None  # type: ignore

    def __repr__(self) -> str:
        return f"ProjTransform({_formatMatrix(self.matrix)})"


class PseudoProjMap:
    """
    A nonzero 3x3 complex matrix up to scale, which may be singular

    These arise as limits of sequences of projective transformations. The
    matrix is stored by its canonical representative.
    """

    def __init__(self, matrix: Any, tol: Optional[float] = None) -> None:
        """
        Create a pseudo-projective map

        ### Args:
        * `matrix` (`Any`): nonzero 3x3 complex matrix
        * `tol` (`float`, optional): relative tolerance for the rank.
          Defaults to the configured tolerance.

        ### Raises:
        * `NumericInputError`: non-finite or zero matrix
        """
        arr = asComplexArray(matrix, (3, 3), "pseudo-projective matrix")
        self._tol = tolerance(tol)
        self._matrix = canonicalScale(arr)
        self._matrix.flags.writeable = False
        self._rank = numericRank(self._matrix, self._tol)

    @classmethod
    def fromTransform(cls, g: ProjTransform) -> 'PseudoProjMap':
        return cls(g.lift)

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    @property
    def rank(self) -> int:
        return self._rank

    @property
    def tol(self) -> float:
        """Tolerance the rank was decided with"""
        return self._tol

    def isTransform(self) -> bool:
        return self._rank == 3

    def isEqual(
        self,
        other: 'PseudoProjMap',
        tol: Optional[float] = None,
    ) -> bool:
        """
        Returns whether the matrices are proportional
        """
        return projectiveDistance(self._matrix, other._matrix) \
            < tolerance(tol)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PseudoProjMap):
            return NotImplemented
        return self.isEqual(other)

    __hash__ = None  # type: ignore

    def __repr__(self) -> str:
        return f"PseudoProjMap({_formatMatrix(self._matrix)}, " \
            f"rank={self._rank})"


def apply(g: ProjTransform, p: ProjPoint) -> ProjPoint:
    """
    Apply a transformation to a point

    ### Args:
    * `g` (`ProjTransform`): transformation
    * `p` (`ProjPoint`): point

    ### Returns:
    * `ProjPoint`: image point
    """
    return ProjPoint(g.lift @ p.coords)


def applyToLine(g: ProjTransform, ell: ProjLine) -> ProjLine:
    """
    The image of a line under a transformation, using the inverse transpose
    action on dual coordinates, so that p lies on l exactly when
    apply(g, p) lies on applyToLine(g, l)

    ### Args:
    * `g` (`ProjTransform`): transformation
    * `ell` (`ProjLine`): line

    ### Returns:
    * `ProjLine`: image line
    """
    return ProjLine(np.linalg.inv(g.lift).T @ ell.coords)


def kernel(P: PseudoProjMap) -> Union[None, ProjPoint, ProjLine]:
    """
    The kernel of a pseudo-projective map: the projectivized null space of
    its matrix, where the induced map is undefined

    ### Args:
    * `P` (`PseudoProjMap`): map

    ### Returns:
    * `None`: the map is invertible, so the kernel is empty
    * `ProjPoint`: the map has rank 2
    * `ProjLine`: the map has rank 1, so the kernel is the line spanned by
      the null space
    """
    if P.rank == 3:
        return None
    null = nullSpace(P.matrix, P.tol)
    if P.rank == 2:
        return ProjPoint(null[0])
    # The line through two null vectors has dual coordinates given by their
    # cross product
    return ProjLine(np.cross(null[0], null[1]))
