"""
families

The canonical invariant curves and the groups preserving them: the Veronese
conic with the representation of PSL(2, C), the cuspidal cubic with its
diagonal stabilizer, the pencil of lines through a point, and normalization
of conics and cuspidal cubics to these models.

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

__all__ = [
    'MoebiusClass',
    'VERONESE_CONIC',
    'veroneseEmbed',
    'iota',
    'CUSPIDAL_CUBIC',
    'cubicStabilizerElement',
    'stabilizerConstraintCheck',
    'PENCIL_CENTRE',
    'pencilElement',
    'ModelKind',
    'NormalizationResult',
    'normalizeConic',
    'normalizeCuspidalCubic',
]

from projective import MoebiusClass
from .veronese import VERONESE_CONIC, veroneseEmbed, iota
from .cubic import (
    CUSPIDAL_CUBIC,
    cubicStabilizerElement,
    stabilizerConstraintCheck,
)
from .pencil import PENCIL_CENTRE, pencilElement
from .normalize import (
    ModelKind,
    NormalizationResult,
    normalizeConic,
    normalizeCuspidalCubic,
)
