"""
projective > classify

Classification of projective transformations as elliptic, parabolic or
loxodromic.

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

__all__ = [
    'ElementKind',
    'ElementClass',
    'isUnitary',
    'classifyElement',
]

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from common.util.numeric import tolerance
from .eigen import EigenData, eigenAnalysis
from .transform import ProjTransform


class ElementKind(Enum):
    ELLIPTIC = "elliptic"
    PARABOLIC = "parabolic"
    LOXODROMIC = "loxodromic"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, eq=False)
class ElementClass:
    kind: ElementKind
    eigen: EigenData


def isUnitary(value: complex, tol: Optional[float] = None) -> bool:
    """
    Returns whether an eigenvalue has modulus 1 within tolerance
    """
    return abs(abs(value) - 1) < tolerance(tol)


def classifyElement(
    g: ProjTransform,
    tol: Optional[float] = None,
) -> ElementClass:
    """
    Classify a transformation by its eigenvalues

    * Loxodromic: some eigenvalue of the determinant 1 lift isn't unitary.
    * Elliptic: diagonalizable, with all eigenvalues unitary.
    * Parabolic: not diagonalizable, with all eigenvalues unitary.

    ### Args:
    * `g` (`ProjTransform`): transformation
    * `tol` (`float`, optional): tolerance. Defaults to the configured
      tolerance.

    ### Raises:
    * `IllConditionedError`: eigenvalue clustering was ambiguous

    ### Returns:
    * `ElementClass`: classification, with the eigenstructure
    """
    eigen = eigenAnalysis(g, tol)
    if not all(isUnitary(v, tol) for v in eigen.eigenvalues):
        kind = ElementKind.LOXODROMIC
    elif eigen.diagonalizable:
        kind = ElementKind.ELLIPTIC
    else:
        kind = ElementKind.PARABOLIC
    return ElementClass(kind, eigen)
