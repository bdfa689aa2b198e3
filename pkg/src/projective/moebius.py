"""
projective > moebius

Moebius transformations z -> (az + b) / (cz + d) of the projective line, as
2x2 complex matrices up to scale.

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

__all__ = [
    'MoebiusClass',
]

from typing import Any, Optional

import numpy as np

from common.exceptions import SingularTransformError
from common.util.numeric import (
    asComplexArray,
    canonicalScale,
    formatComplex,
    numericRank,
    projectiveDistance,
    tolerance,
)


class MoebiusClass:
    """
    An element of PSL(2, C), stored as the determinant 1 lift of its matrix
    (principal square root of the determinant)
    """

    def __init__(self, matrix: Any, tol: Optional[float] = None) -> None:
        """
        Create a Moebius transformation

        ### Args:
        * `matrix` (`Any`): 2x2 complex matrix [[a, b], [c, d]]
        * `tol` (`float`, optional): relative tolerance used to decide
          invertibility. Defaults to the configured tolerance.

        ### Raises:
        * `NumericInputError`: non-finite or zero matrix
        * `SingularTransformError`: zero determinant
        """
        arr = asComplexArray(matrix, (2, 2), "Moebius matrix")
        if numericRank(arr, tolerance(tol)) < 2:
            raise SingularTransformError(
                "Moebius matrix must have nonzero determinant")
        det = complex(np.linalg.det(arr))
        self._lift = arr / det ** 0.5
        self._lift.flags.writeable = False

    @classmethod
    def fromCoefficients(
        cls,
        a: complex,
        b: complex,
        c: complex,
        d: complex,
    ) -> 'MoebiusClass':
        """
        The transformation z -> (az + b) / (cz + d)
        """
        return cls([[a, b], [c, d]])

    @classmethod
    def identity(cls) -> 'MoebiusClass':
        return cls(np.eye(2))

    @property
    def lift(self) -> np.ndarray:
        """The determinant 1 lift"""
        return self._lift

    @property
    def matrix(self) -> np.ndarray:
        """The canonical representative, with largest entry exactly 1"""
        return canonicalScale(self._lift)

    @property
    def coefficients(self) -> tuple[complex, complex, complex, complex]:
        """Entries (a, b, c, d) of the determinant 1 lift"""
        (a, b), (c, d) = self._lift
        return complex(a), complex(b), complex(c), complex(d)

    def trace(self) -> complex:
        """Trace of the determinant 1 lift, defined up to sign"""
        return complex(np.trace(self._lift))

    def inverse(self) -> 'MoebiusClass':
        return MoebiusClass(np.linalg.inv(self._lift))

    def __matmul__(self, other: 'MoebiusClass') -> 'MoebiusClass':
        if not isinstance(other, MoebiusClass):
            return NotImplemented
        return MoebiusClass(self._lift @ other._lift)

    def apply(self, point: Any) -> np.ndarray:
        """
        Apply the transformation to a point [z:w] of the projective line

        ### Args:
        * `point` (`Any`): nonzero homogeneous pair

        ### Returns:
        * `np.ndarray`: canonical representative of the image
        """
        pair = asComplexArray(point, (2,), "projective line point")
        return canonicalScale(self._lift @ pair)

    def isEqual(
        self,
        other: 'MoebiusClass',
        tol: Optional[float] = None,
    ) -> bool:
        """
        Returns whether the matrices are proportional
        """
        return projectiveDistance(self._lift, other._lift) < tolerance(tol)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MoebiusClass):
            return NotImplemented
        return self.isEqual(other)

    __hash__ = None  # type: ignore

    def __repr__(self) -> str:
        a, b, c, d = (formatComplex(x) for x in self.matrix.ravel())
        return f"MoebiusClass([[{a}, {b}], [{c}, {d}]])"
