"""
curves

Plane algebraic curves given by homogeneous polynomials: intersections,
singular points, inflections, duals, numeric invariants and invariance under
projective transformations.

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

__all__ = [
    'HomPoly',
    'monomials',
    'pullbackMatrix',
    'BinaryForm',
    'IntersectionProfile',
    'restrictToLine',
    'lineCurveIntersection',
    'intersectCurves',
    'SingularKind',
    'SingularPoint',
    'findLinearFactor',
    'hasRepeatedFactor',
    'isSingularAt',
    'singularPoints',
    'RationalCurve',
    'parametrizeSingularCubic',
    'inflectionPoints',
    'DualCurve',
    'dualCurve',
    'CurveInvariants',
    'clebschGenus',
    'plueckerClass',
    'plueckerInflections',
    'curveInvariants',
    'InvarianceCertificate',
    'pullback',
    'proportionalityResidual',
    'invarianceCheck',
]

from .hompoly import HomPoly, monomials, pullbackMatrix
from .binary import BinaryForm
from .intersection import (
    IntersectionProfile,
    restrictToLine,
    lineCurveIntersection,
    intersectCurves,
)
from .singular import (
    SingularKind,
    SingularPoint,
    findLinearFactor,
    hasRepeatedFactor,
    isSingularAt,
    singularPoints,
)
from .rational import RationalCurve, parametrizeSingularCubic
from .inflection import inflectionPoints
from .dual import DualCurve, dualCurve
from .invariants import (
    CurveInvariants,
    clebschGenus,
    plueckerClass,
    plueckerInflections,
    curveInvariants,
)
from .invariance import (
    InvarianceCertificate,
    pullback,
    proportionalityResidual,
    invarianceCheck,
)
