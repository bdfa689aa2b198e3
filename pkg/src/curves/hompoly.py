"""
curves > hompoly

Homogeneous polynomials in the three variables x, y, z with complex
coefficients. A nonzero homogeneous polynomial defines a plane curve, and
two polynomials define the same curve when they are proportional.

Coefficients are stored in a dictionary from exponent triples (i, j, k),
with i + j + k equal to the degree, to complex numbers. Monomials are ordered
lexicographically by descending exponent, so x^n comes first and z^n last.

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

__all__ = [
    'Exponent',
    'monomials',
    'monomialValues',
    'HomPoly',
    'pullbackMatrix',
]

from typing import Any, Mapping, Optional, Union

import numpy as np

from common.exceptions import NumericInputError
from common.util.numeric import formatComplex, projectiveDistance, tolerance
from projective import ProjLine

Exponent = tuple[int, int, int]

VARIABLES = ('x', 'y', 'z')


def monomials(degree: int) -> list[Exponent]:
    """
    All exponent triples of the given degree, in descending lexicographic
    order

    ### Args:
    * `degree` (`int`): degree

    ### Returns:
    * `list[Exponent]`: exponents, starting with (degree, 0, 0)
    """
    return [
        (i, j, degree - i - j)
        for i in range(degree, -1, -1)
        for j in range(degree - i, -1, -1)
    ]


def monomialValues(degree: int, v: np.ndarray) -> np.ndarray:
    """
    Values of every monomial of the given degree at a point, in the order
    given by `monomials`
    """
    return np.array([
        v[0] ** i * v[1] ** j * v[2] ** k for i, j, k in monomials(degree)
    ], dtype=np.complex128)


class HomPoly:
    """
    A homogeneous polynomial in x, y, z

    Polynomials are immutable. The zero polynomial can only be made
    explicitly (using `HomPoly.zero`) since it doesn't define a curve, but it
    can also result from arithmetic and differentiation.
    """
    # Make numpy scalars defer to our arithmetic
    __array_ufunc__ = None

    def __init__(
        self,
        degree: int,
        coefficients: Mapping[Exponent, Any],
        allow_zero: bool = False,
    ) -> None:
        """
        Create a homogeneous polynomial

        ### Args:
        * `degree` (`int`): degree n
        * `coefficients` (`Mapping[Exponent, complex]`): map from exponent
          triples with sum n to coefficients. Missing monomials are zero.
        * `allow_zero` (`bool`, optional): whether to accept the zero
          polynomial. Defaults to `False`.

        ### Raises:
        * `NumericInputError`: exponents don't match the degree, a
          coefficient isn't finite, or the polynomial is zero
        """
        if degree < 0:
            raise NumericInputError(
                f"Degree must be nonnegative, not {degree}")
        self._degree = degree
        self._coefficients: dict[Exponent, complex] = {}
        for exp, value in coefficients.items():
            exp = tuple(int(e) for e in exp)  # type: ignore
            if len(exp) != 3 or min(exp) < 0 or sum(exp) != degree:
                raise NumericInputError(
                    f"Exponent {exp} isn't valid for degree {degree}")
            c = complex(value)
            if not np.isfinite(c):
                raise NumericInputError(
                    f"Coefficient of {exp} isn't finite")
            if c != 0:
                self._coefficients[exp] = \
                    self._coefficients.get(exp, 0) + c  # type: ignore
        if not self._coefficients and not allow_zero:
            raise NumericInputError(
                "The zero polynomial doesn't define a curve")

    @classmethod
    def zero(cls, degree: int) -> 'HomPoly':
        return cls(degree, {}, allow_zero=True)

    @classmethod
    def fromVector(
        cls,
        degree: int,
        vector: Any,
        allow_zero: bool = False,
    ) -> 'HomPoly':
        """
        Create a polynomial from coefficients listed in the order given by
        `monomials(degree)`
        """
        exps = monomials(degree)
        values = np.asarray(vector, dtype=np.complex128)
        if values.shape != (len(exps),):
            raise NumericInputError(
                f"Expected {len(exps)} coefficients for degree {degree}")
        return cls(degree, dict(zip(exps, values)), allow_zero)

    @classmethod
    def fromLine(cls, ell: ProjLine) -> 'HomPoly':
        """
        The linear form ax + by + cz of a line [a:b:c]
        """
        a, b, c = ell.coords
        return cls(1, {(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): c})

    @classmethod
    def fromQuadraticForm(cls, matrix: Any) -> 'HomPoly':
        """
        The quadratic form v^T A v of a 3x3 matrix A
        """
        a = np.asarray(matrix, dtype=np.complex128)
        coefficients: dict[Exponent, complex] = {}
        for i in range(3):
            for j in range(3):
                exp = [0, 0, 0]
                exp[i] += 1
                exp[j] += 1
                key = (exp[0], exp[1], exp[2])
                coefficients[key] = coefficients.get(key, 0) + a[i, j]
        return cls(2, coefficients)

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def coefficients(self) -> dict[Exponent, complex]:
        """Nonzero coefficients, by exponent"""
        return dict(self._coefficients)

    def coefficient(self, exp: Exponent) -> complex:
        return self._coefficients.get(exp, 0j)

    def isZero(self) -> bool:
        return not self._coefficients

    def toVector(self) -> np.ndarray:
        """
        Coefficients in the order given by `monomials(degree)`
        """
        return np.array(
            [self.coefficient(e) for e in monomials(self._degree)],
            dtype=np.complex128,
        )

    def norm(self) -> float:
        """Euclidean norm of the coefficient vector"""
        return float(np.linalg.norm(self.toVector()))

    def evaluate(self, v: Any) -> complex:
        """
        Evaluate the polynomial at a vector of C^3

        ### Args:
        * `v` (`Any`): three complex numbers

        ### Returns:
        * `complex`: value
        """
        x, y, z = np.asarray(v, dtype=np.complex128)
        return complex(sum(
            c * x ** i * y ** j * z ** k
            for (i, j, k), c in self._coefficients.items()
        ))

    def __call__(self, v: Any) -> complex:
        return self.evaluate(v)

    def partial(self, var: int) -> 'HomPoly':
        """
        Partial derivative with respect to variable 0 (x), 1 (y) or 2 (z)
        """
        if self._degree == 0:
            return HomPoly.zero(0)
        coefficients: dict[Exponent, complex] = {}
        for exp, c in self._coefficients.items():
            if exp[var] == 0:
                continue
            lowered = list(exp)
            lowered[var] -= 1
            coefficients[(lowered[0], lowered[1], lowered[2])] = c * exp[var]
        return HomPoly(self._degree - 1, coefficients, allow_zero=True)

    def partials(self) -> tuple['HomPoly', 'HomPoly', 'HomPoly']:
        return self.partial(0), self.partial(1), self.partial(2)

    def gradient(self, v: Any) -> np.ndarray:
        """Gradient at a vector of C^3"""
        return np.array([d.evaluate(v) for d in self.partials()])

    def hessian(self, v: Any) -> np.ndarray:
        """Matrix of second partial derivatives at a vector of C^3"""
        firsts = self.partials()
        return np.array([
            [firsts[i].partial(j).evaluate(v) for j in range(3)]
            for i in range(3)
        ])

    def hessianPoly(self) -> 'HomPoly':
        """
        The Hessian determinant det(d^2 F / dx_i dx_j), as a polynomial of
        degree 3(n - 2)
        """
        if self._degree < 2:
            return HomPoly.zero(0)
        firsts = self.partials()
        h = [[firsts[i].partial(j) for j in range(3)] for i in range(3)]
        return (
            h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1])
            - h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0])
            + h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0])
        )

    def quadraticFormMatrix(self) -> np.ndarray:
        """
        The symmetric matrix A with F(v) = v^T A v, for a polynomial of
        degree 2

        ### Raises:
        * `NumericInputError`: the polynomial isn't quadratic
        """
        if self._degree != 2:
            raise NumericInputError(
                f"Only quadratics have a matrix, not degree {self._degree}")
        a = np.zeros((3, 3), dtype=np.complex128)
        for exp, c in self._coefficients.items():
            vars_ = [i for i in range(3) for _ in range(exp[i])]
            i, j = vars_
            if i == j:
                a[i, i] = c
            else:
                a[i, j] = a[j, i] = c / 2
        return a

    def _combine(self, other: 'HomPoly', sign: int) -> 'HomPoly':
        if self._degree != other._degree:
            raise NumericInputError(
                f"Can't add polynomials of degree {self._degree} and "
                f"{other._degree}")
        coefficients = dict(self._coefficients)
        for exp, c in other._coefficients.items():
            coefficients[exp] = coefficients.get(exp, 0) + sign * c
        return HomPoly(self._degree, coefficients, allow_zero=True)

    def __add__(self, other: 'HomPoly') -> 'HomPoly':
        if not isinstance(other, HomPoly):
            return NotImplemented
        return self._combine(other, 1)

    def __sub__(self, other: 'HomPoly') -> 'HomPoly':
        if not isinstance(other, HomPoly):
            return NotImplemented
        return self._combine(other, -1)

    def __neg__(self) -> 'HomPoly':
        return self * -1

    def __mul__(self, other: Union['HomPoly', complex, float]) -> 'HomPoly':
        if isinstance(other, HomPoly):
            coefficients: dict[Exponent, complex] = {}
            for (a, b, c), u in self._coefficients.items():
                for (d, e, f), w in other._coefficients.items():
                    key = (a + d, b + e, c + f)
                    coefficients[key] = coefficients.get(key, 0) + u * w
            return HomPoly(
                self._degree + other._degree, coefficients, allow_zero=True)
        if isinstance(other, (int, float, complex, np.number)):
            return HomPoly(
                self._degree,
                {e: c * other for e, c in self._coefficients.items()},
                allow_zero=True,
            )
        return NotImplemented

    def __rmul__(self, other: Union[complex, float]) -> 'HomPoly':
        return self.__mul__(other)

    def __pow__(self, n: int) -> 'HomPoly':
        result = HomPoly(0, {(0, 0, 0): 1})
        for _ in range(n):
            result = result * self
        return result

    def isEqual(self, other: 'HomPoly', tol: Optional[float] = None) -> bool:
        """
        Returns whether the polynomials are proportional (and so define the
        same curve)
        """
        if self._degree != other._degree:
            return False
        if self.isZero() or other.isZero():
            return self.isZero() and other.isZero()
        return projectiveDistance(self.toVector(), other.toVector()) \
            < tolerance(tol)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HomPoly):
            return NotImplemented
        return self.isEqual(other)

    __hash__ = None  # type: ignore

    def __str__(self) -> str:
        if self.isZero():
            return "0"
        terms = []
        for exp in monomials(self._degree):
            c = self._coefficients.get(exp)
            if c is None:
                continue
            var = ''.join(
                VARIABLES[i] + (f"^{exp[i]}" if exp[i] > 1 else '')
                for i in range(3) if exp[i]
            )
            coeff = formatComplex(c)
            if 'i' in coeff and var:
                coeff = f"({coeff})"
            if var and coeff == '1':
                coeff = ''
            elif var and coeff == '-1':
                coeff = '-'
            terms.append(coeff + var)
        text = terms[0]
        for t in terms[1:]:
            text += f" - {t[1:]}" if t.startswith('-') else f" + {t}"
        return text

    def __repr__(self) -> str:
        return f"HomPoly({self})"


def pullbackMatrix(F: HomPoly, matrix: Any) -> HomPoly:
    """
    Substitute v -> Mv into a polynomial, giving the polynomial
    v -> F(Mv). The matrix may be singular, in which case the result may be
    zero.

    ### Args:
    * `F` (`HomPoly`): polynomial
    * `matrix` (`Any`): 3x3 complex matrix M

    ### Returns:
    * `HomPoly`: F(Mv), of the same degree
    """
    m = np.asarray(matrix, dtype=np.complex128)
    # Row i of M gives the linear form substituted for variable i
    forms = [
        HomPoly(1, {(1, 0, 0): m[i, 0], (0, 1, 0): m[i, 1],
                    (0, 0, 1): m[i, 2]}, allow_zero=True)
        for i in range(3)
    ]
    powers = [[forms[i] ** k for k in range(F.degree + 1)] for i in range(3)]
    result = HomPoly.zero(F.degree)
    for (i, j, k), c in F.coefficients.items():
        result = result + c * (powers[0][i] * powers[1][j] * powers[2][k])
    return result
