"""
projective

Complex homogeneous linear algebra for the projective plane: points, lines,
transformations, eigenstructure, classification of elements and limits of
power sequences.

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
    'ProjTransform',
    'PseudoProjMap',
    'apply',
    'applyToLine',
    'kernel',
    'MoebiusClass',
    'EigenCluster',
    'EigenData',
    'eigenAnalysis',
    'ElementKind',
    'ElementClass',
    'classifyElement',
    'powerLimit',
    'iteratedPowerLimit',
    'projectionMorphism',
]

from .point import ProjPoint, ProjLine, join, meet
from .transform import (
    ProjTransform,
    PseudoProjMap,
    apply,
    applyToLine,
    kernel,
)
from .moebius import MoebiusClass
from .eigen import EigenCluster, EigenData, eigenAnalysis
from .classify import ElementKind, ElementClass, classifyElement
from .limits import powerLimit, iteratedPowerLimit
from .projection import projectionMorphism
