"""
curves > rational

Rational plane curves, given by a triple of binary forms, and the
parametrization of singular cubics through their singular point.

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

__all__ = [
    'RationalCurve',
    'parametrizeSingularCubic',
]

from typing import Sequence

import numpy as np

from common.exceptions import (
    DegreeUnsupportedError,
    NotSingularError,
    NumericInputError,
    ReducibleCurveError,
)
from projective import ProjLine, ProjPoint
from .binary import BinaryForm
from .hompoly import HomPoly
from .intersection import restrictToSpan
from .singular import isSingularAt


def _cross(a: Sequence[BinaryForm], b: Sequence[BinaryForm]) -> tuple:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


class RationalCurve:
    """
    A plane curve parametrized as [s:t] -> [f0(s, t):f1(s, t):f2(s, t)],
    where the fi are binary forms of the same degree
    """

    def __init__(self, components: Sequence[BinaryForm]) -> None:
        """
        Create a parametrized curve

        ### Args:
        * `components` (`Sequence[BinaryForm]`): three binary forms of equal
          degree, not all zero

        ### Raises:
        * `NumericInputError`: wrong number of forms, mismatched degrees or
          all forms zero
        """
        if len(components) != 3:
            raise NumericInputError("A rational curve needs three forms")
        if len({f.degree for f in components}) != 1:
            raise NumericInputError(
                "Forms of a rational curve must have equal degrees")
        if all(f.isZero() for f in components):
            raise NumericInputError("A rational curve can't be zero")
        self._components = tuple(components)

    @property
    def components(self) -> tuple[BinaryForm, BinaryForm, BinaryForm]:
        return self._components  # type: ignore

    @property
    def degree(self) -> int:
        """Degree of the forms, which is the degree of the curve when the
        parametrization is one-to-one and the forms have no common root"""
        return self._components[0].degree

    def evaluate(self, s: complex, t: complex) -> np.ndarray:
        return np.array(
            [f.evaluate(s, t) for f in self._components],
            dtype=np.complex128,
        )

    def point(self, s: complex, t: complex) -> ProjPoint:
        """
        The curve point with parameter [s:t]

        ### Raises:
        * `NumericInputError`: all forms vanish at [s:t]
        """
        return ProjPoint(self.evaluate(s, t))

    def _derivatives(self) -> tuple[
        tuple[BinaryForm, ...], tuple[BinaryForm, ...]
    ]:
        return (
            tuple(f.partialS() for f in self._components),
            tuple(f.partialT() for f in self._components),
        )

    def tangentForms(self) -> tuple[BinaryForm, BinaryForm, BinaryForm]:
        """
        Forms of degree 2(d - 1) giving the dual coordinates of the tangent
        line at each parameter: the cross product of the two partial
        derivatives, which both lie on the tangent line by Euler's formula
        """
        ds, dt = self._derivatives()
        return _cross(ds, dt)  # type: ignore

    def tangentLine(self, s: complex, t: complex) -> ProjLine:
        """
        The tangent line at the curve point with parameter [s:t]

        ### Raises:
        * `NumericInputError`: the point is singular on the parametrization,
          so there is no tangent line there
        """
        return ProjLine([f.evaluate(s, t) for f in self.tangentForms()])

    def inflectionForm(self) -> BinaryForm:
        """
        The form det[g_ss, g_st, g_tt] of degree 3(d - 2), whose roots are
        the parameters of inflections and of cusps of the parametrization
        """
        ds, dt = self._derivatives()
        ss = [f.partialS() for f in ds]
        st = [f.partialT() for f in ds]
        tt = [f.partialT() for f in dt]
        c = _cross(st, tt)
        return ss[0] * c[0] + ss[1] * c[1] + ss[2] * c[2]

    def __repr__(self) -> str:
        return f"RationalCurve({list(self._components)})"


def parametrizeSingularCubic(F: HomPoly, p: ProjPoint) -> RationalCurve:
    """
    Parametrize an irreducible cubic with a double point p using the pencil
    of lines through p

    Each line through p meets the curve at p twice and at one other point.
    For q on a line missing p, F(mp + q) = m Q(q) / 2 + F(q) where Q is the
    quadratic form of the Hessian at p, so the third point is
    -2F(q) p + Q(q) q. Taking q = s b1 + t b2 for a basis of that line gives
    a parametrization by cubic forms.

    ### Args:
    * `F` (`HomPoly`): cubic
    * `p` (`ProjPoint`): a singular point of F

    ### Raises:
    * `DegreeUnsupportedError`: F isn't a cubic
    * `NotSingularError`: F isn't singular at p
    * `ReducibleCurveError`: the parametrization is degenerate, which can
      only happen when F is reducible

    ### Returns:
    * `RationalCurve`: parametrization by cubic forms
    """
    if F.degree != 3:
        raise DegreeUnsupportedError(
            f"Only cubics can be parametrized, not degree {F.degree}")
    if not isSingularAt(F, p):
        raise NotSingularError(f"{F} isn't singular at {p}")
    v = p.coords
    b1, b2 = ProjLine(np.conj(v)).basis()
    hessian = F.hessian(v)
    cubic = restrictToSpan(F, b1, b2)
    cone = BinaryForm([
        b1 @ hessian @ b1,
        2 * (b1 @ hessian @ b2),
        b2 @ hessian @ b2,
    ])
    components = [
        cubic * (-2 * v[i]) + cone * BinaryForm.linear(b1[i], b2[i])
        for i in range(3)
    ]
    # A reducible cubic gives proportional forms, which trace out a point
    matrix = np.array([f.coefficients for f in components])
    if np.linalg.matrix_rank(matrix, tol=1e-9 * np.linalg.norm(matrix)) < 2:
        raise ReducibleCurveError(
            f"{F} can't be parametrized from {p}, so it is reducible")
    return RationalCurve(components)
