"""
curves > binary

Binary forms: homogeneous polynomials in two variables s, t, which arise
when a plane curve is restricted to a line or parametrized. Their roots are
points [s:t] of the projective line.

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

__all__ = [
    'BinaryForm',
    'BinaryRoot',
]

from typing import Any, Union

import numpy as np

from common.exceptions import NumericInputError
from common.logger import log, verbosity
from common.util.numeric import (
    canonicalScale,
    linkClusters,
    projectiveDistance,
    setting,
)

BinaryRoot = tuple[np.ndarray, int]
"""A root [s:t] (canonically scaled) along with its multiplicity"""


class BinaryForm:
    """
    A binary form sum(c[k] s^(n - k) t^k) of degree n
    """
    __array_ufunc__ = None

    def __init__(self, coefficients: Any) -> None:
        """
        Create a binary form

        ### Args:
        * `coefficients` (`Any`): n + 1 complex coefficients, where c[k]
          multiplies s^(n - k) t^k
        """
        c = np.array(coefficients, dtype=np.complex128).ravel()
        if len(c) == 0:
            raise NumericInputError("A binary form needs a coefficient")
        if not np.all(np.isfinite(c)):
            raise NumericInputError("Binary form coefficients must be finite")
        self._c = c
        self._c.flags.writeable = False

    @classmethod
    def linear(cls, a: complex, b: complex) -> 'BinaryForm':
        """The form as + bt"""
        return cls([a, b])

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    @property
    def coefficients(self) -> np.ndarray:
        return self._c

    def norm(self) -> float:
        return float(np.linalg.norm(self._c))

    def isZero(self) -> bool:
        return not np.any(self._c)

    def evaluate(self, s: complex, t: complex) -> complex:
        n = self.degree
        return complex(sum(
            c * s ** (n - k) * t ** k for k, c in enumerate(self._c)))

    def __add__(self, other: 'BinaryForm') -> 'BinaryForm':
        if not isinstance(other, BinaryForm):
            return NotImplemented
        if other.degree != self.degree:
            raise NumericInputError(
                "Can't add binary forms of different degrees")
        return BinaryForm(self._c + other._c)

    def __sub__(self, other: 'BinaryForm') -> 'BinaryForm':
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self + other * -1

    def __mul__(self, other: Union['BinaryForm', complex]) -> 'BinaryForm':
        if isinstance(other, BinaryForm):
            # Coefficients multiply like polynomials in t/s
            return BinaryForm(np.convolve(self._c, other._c))
        if isinstance(other, (int, float, complex, np.number)):
            return BinaryForm(self._c * other)
        return NotImplemented

    def __rmul__(self, other: complex) -> 'BinaryForm':
        return self.__mul__(other)

    def partialS(self) -> 'BinaryForm':
        n = self.degree
        if n == 0:
            return BinaryForm([0])
        return BinaryForm([(n - k) * c for k, c in enumerate(self._c[:-1])])

    def partialT(self) -> 'BinaryForm':
        if self.degree == 0:
            return BinaryForm([0])
        return BinaryForm([k * c for k, c in enumerate(self._c) if k])

    def _affine(self, pivot: int) -> np.ndarray:
        """
        Coefficients (highest power first) of the affine polynomial in the
        chart where coordinate `pivot` of [s:t] is 1
        """
        # t = 1 gives sum(c[k] s^(n-k)), s = 1 gives sum(c[k] t^k)
        return self._c.copy() if pivot == 1 else self._c[::-1].copy()

    def _relativeDerivatives(self, root: np.ndarray, order: int) -> float:
        """
        Largest relative size of the derivatives of orders 0 to `order - 1`
        of the affine polynomial at a root, each measured against the sum of
        the moduli of its terms
        """
        pivot = int(np.argmax(np.abs(root)))
        x = root[1 - pivot] / root[pivot]
        poly = self._affine(pivot)
        worst = 0.0
        for _ in range(order):
            if len(poly) == 0:
                break
            value = abs(np.polyval(poly, x))
            scale = np.polyval(np.abs(poly), abs(x))
            if scale > 0:
                worst = max(worst, value / scale)
            poly = np.polyder(poly)
        return worst

    def roots(self) -> list[BinaryRoot]:
        """
        Roots of the form with multiplicities, which sum to the degree

        Numeric root finding splinters a root of multiplicity m into m nearby
        roots. Roots closer than `curves.cluster_radius` are merged into one
        root whose multiplicity is the number merged. Clusters closer than
        `curves.merge_radius` are then also merged, as long as the merged root
        passes a derivative test: the first m - 1 derivatives must vanish to
        within `curves.multiplicity_tol`.

        ### Raises:
        * `NumericInputError`: the form is zero

        ### Returns:
        * `list[BinaryRoot]`: roots [s:t] with multiplicities
        """
        if self.isZero():
            raise NumericInputError("The zero form has no isolated roots")
        n = self.degree
        scale = np.max(np.abs(self._c))
        # Each leading zero coefficient is a root at [1:0]
        leading = 0
        while leading < n and abs(self._c[leading]) == 0:
            leading += 1
        pairs: list[np.ndarray] = [
            np.array([1, 0], dtype=np.complex128) for _ in range(leading)]
        if leading < n:
            for x in np.roots(self._c[leading:] / scale):
                pairs.append(np.array([x, 1], dtype=np.complex128))

        radius = setting("curves.cluster_radius")
        groups = linkClusters(
            pairs, lambda a, b: projectiveDistance(a, b) <= radius)
        clusters = [(_meanRoot(g, [1] * len(g)), len(g)) for g in groups]
        return [
            (canonicalScale(r), m) for r, m in self._mergeClusters(clusters)
        ]

    def _mergeClusters(
        self,
        clusters: list[tuple[np.ndarray, int]],
    ) -> list[tuple[np.ndarray, int]]:
        """
        Merge nearby clusters of roots that pass the derivative test
        """
        radius = setting("curves.merge_radius")
        threshold = setting("curves.multiplicity_tol")
        merged = True
        while merged:
            merged = False
            for i in range(len(clusters)):
                for j in range(i + 1, len(clusters)):
                    (a, ma), (b, mb) = clusters[i], clusters[j]
                    if projectiveDistance(a, b) > radius:
                        continue
                    candidate = _meanRoot([a, b], [ma, mb])
                    size = ma + mb
                    if self._relativeDerivatives(candidate, size) > threshold:
                        continue
                    log(
                        "curves.intersection",
                        f"Merged root clusters of multiplicity {ma} and {mb}",
                        verbosity.NOTE,
                    )
                    clusters[i] = (candidate, size)
                    del clusters[j]
                    merged = True
                    break
                if merged:
                    break
        return clusters

    def __repr__(self) -> str:
        return f"BinaryForm({self._c.tolist()})"


def _meanRoot(pairs: list[np.ndarray], weights: list[int]) -> np.ndarray:
    """
    Weighted mean of nearby points of the projective line, taken in the
    affine chart of the first
    """
    pivot = int(np.argmax(np.abs(pairs[0])))
    total = sum(w * p / p[pivot] for p, w in zip(pairs, weights))
    return total / sum(weights)
