"""
projective > eigen

Eigenstructure of projective transformations, computed from the
characteristic polynomial of the determinant 1 lift in closed form.

The roots are found with Cardano's formula and polished with Newton steps.
Roots closer than `numerics.eigen_cluster_radius` (relative to the norm of
the matrix) are candidates for one repeated eigenvalue, since double
precision splinters a root of multiplicity m by about eps^(1/m). A candidate
group is only merged if the ranks of powers of A - lambda I agree with it,
otherwise its roots stay distinct. Geometric multiplicities come from
singular values of A - lambda I.

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

__all__ = [
    'EigenCluster',
    'EigenData',
    'characteristicCoefficients',
    'cubicRoots',
    'eigenAnalysis',
]

import cmath
from dataclasses import dataclass
from functools import cmp_to_key
from typing import Optional

import numpy as np

from common.exceptions import IllConditionedError
from common.logger import log, verbosity
from common.util.numeric import linkClusters, setting, tolerance
from .transform import ProjTransform

OMEGA = complex(-0.5, 3 ** 0.5 / 2)


@dataclass(frozen=True, eq=False)
class EigenCluster:
    """
    A distinct eigenvalue along with its multiplicities
    """
    value: complex
    """The eigenvalue (mean of the clustered roots)"""
    algebraic: int
    """Algebraic multiplicity"""
    geometric: int
    """Geometric multiplicity"""
    indices: tuple[int, ...]
    """Columns of the generalized basis spanning its generalized eigenspace,
    eigenvectors first"""

    @property
    def blockSize(self) -> int:
        """Size of the largest Jordan block for this eigenvalue"""
        return self.algebraic - self.geometric + 1


@dataclass(frozen=True, eq=False)
class EigenData:
    """
    The eigenstructure of the determinant 1 lift of a transformation
    """
    eigenvalues: tuple[complex, complex, complex]
    """Eigenvalues with multiplicity, by descending modulus then descending
    argument"""
    diagonalizable: bool
    basis: np.ndarray
    """Columns are eigenvectors and generalized eigenvectors, in the order of
    the eigenvalues"""
    clusters: tuple[EigenCluster, ...]

    @property
    def moduli(self) -> tuple[float, ...]:
        return tuple(abs(v) for v in self.eigenvalues)

    def vector(self, index: int) -> np.ndarray:
        """Basis column for the given eigenvalue index"""
        return self.basis[:, index]


def characteristicCoefficients(
    m: np.ndarray,
) -> tuple[complex, complex, complex]:
    """
    Coefficients (a, b, c) of the monic characteristic polynomial
    x^3 + a x^2 + b x + c of a 3x3 matrix

    ### Args:
    * `m` (`np.ndarray`): matrix

    ### Returns:
    * `tuple[complex, complex, complex]`: coefficients
    """
    a = -complex(np.trace(m))
    b = complex(
        m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
        + m[0, 0] * m[2, 2] - m[0, 2] * m[2, 0]
        + m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1]
    )
    c = -complex(np.linalg.det(m))
    return a, b, c


def cubicRoots(a: complex, b: complex, c: complex) -> list[complex]:
    """
    Roots of x^3 + a x^2 + b x + c using Cardano's formula

    ### Args:
    * `a` (`complex`): quadratic coefficient
    * `b` (`complex`): linear coefficient
    * `c` (`complex`): constant coefficient

    ### Returns:
    * `list[complex]`: the three roots, with multiplicity
    """
    shift = a / 3
    # Depressed cubic t^3 + pt + q with x = t - a/3
    p = b - a * a / 3
    q = 2 * a ** 3 / 27 - a * b / 3 + c
    disc = cmath.sqrt(q * q / 4 + p ** 3 / 27)
    # Choose the branch furthest from zero, so that u isn't cancelled away
    w = -q / 2 + disc
    w_alt = -q / 2 - disc
    if abs(w_alt) > abs(w):
        w = w_alt
    scale = max(abs(a), abs(b) ** 0.5, abs(c) ** (1 / 3), 1e-300)
    if abs(w) <= (1e-15 * scale) ** 3:
        return [-shift] * 3
    u = w ** (1 / 3)
    v = -p / (3 * u)
    return [
        OMEGA ** k * u + OMEGA ** (-k) * v - shift
        for k in range(3)
    ]


def _newtonPolish(
    root: complex,
    a: complex,
    b: complex,
    c: complex,
    steps: int,
) -> complex:
    """
    Newton steps on the cubic, each kept only if it reduces the residual
    """
    def f(x: complex) -> complex:
        return ((x + a) * x + b) * x + c

    for _ in range(steps):
        deriv = (3 * root + 2 * a) * root + b
        if deriv == 0:
            break
        candidate = root - f(root) / deriv
        if abs(f(candidate)) >= abs(f(root)):
            break
        root = candidate
    return root


def _argument(z: complex) -> float:
    """Argument in (-pi, pi]"""
    angle = cmath.phase(z)
    if angle <= -np.pi + 1e-15:
        angle = np.pi
    return angle


def _eigenOrder(tol: float):
    """
    Comparison for sorting eigenvalues by descending modulus, breaking ties
    (within tolerance) by descending argument
    """
    def compare(x: complex, y: complex) -> int:
        mx, my = abs(x), abs(y)
        if abs(mx - my) > tol * max(mx, my, 1e-300):
            return -1 if mx > my else 1
        ax, ay = _argument(x), _argument(y)
        if ax == ay:
            return 0
        return -1 if ax > ay else 1
    return compare


def _nullRows(m: np.ndarray, count: int) -> np.ndarray:
    """
    The `count` right singular vectors with the smallest singular values,
    as rows
    """
    if count == 0:
        return np.zeros((0, m.shape[1]), dtype=np.complex128)
    _, _, vh = np.linalg.svd(m)
    return vh[-count:].conj()


def _refineSimple(m: np.ndarray, root: complex, steps: int) -> complex:
    """
    Refine a simple eigenvalue with two-sided Rayleigh quotients, using the
    singular vectors of A - lambda I. The characteristic polynomial alone
    only pins down close eigenvalues to about eps / |p'(lambda)|.
    """
    for _ in range(steps):
        u, _, vh = np.linalg.svd(m - root * np.eye(3))
        left, right = u[:, -1], vh[-1].conj()
        overlap = complex(left.conj() @ right)
        if abs(overlap) < 1e-8:
            break
        root = complex(left.conj() @ m @ right) / overlap
    return root


def _clusterStructure(
    m: np.ndarray,
    group: list[complex],
    norm: float,
    tol: float,
) -> Optional[tuple[complex, int, int]]:
    """
    Check that a group of roots behaves like one repeated eigenvalue

    The geometric multiplicity is read off the singular values of
    A - lambda I at the mean of the group. A claimed Jordan block of size b
    is only accepted if (A - lambda I)^(b - 1) is large compared to the
    spread of the roots, since distinct eigenvalues a distance d apart only
    make it about d^(b - 1).

    ### Returns:
    * `tuple[complex, int, int] | None`: value, algebraic and geometric
      multiplicity, or `None` if the group is inconsistent
    """
    value = complex(np.mean(group))
    algebraic = len(group)
    shifted = m - value * np.eye(3)
    s = np.linalg.svd(shifted, compute_uv=False)
    geometric = int(np.sum(s <= tol * norm))
    if geometric == 0 or geometric > algebraic:
        return None
    block = algebraic - geometric + 1
    if block > 1:
        spread = max(abs(r - value) for r in group)
        power = np.linalg.matrix_power(shifted, block - 1)
        sp = np.linalg.svd(power, compute_uv=False)
        floor = 10 * spread ** (block - 1) + tol * norm ** (block - 1)
        if int(np.sum(sp <= floor)) >= algebraic:
            return None
    return value, algebraic, geometric


def _clusterRoots(
    m: np.ndarray,
    roots: list[complex],
    norm: float,
    tol: float,
) -> list[tuple[complex, int, int]]:
    """
    Group the roots into distinct eigenvalues. Groups of nearby roots that
    don't behave like a repeated eigenvalue are split back into simple
    roots.

    ### Raises:
    * `IllConditionedError`: a root is neither part of a consistent group
      nor a simple eigenvalue at this tolerance
    """
    radius = setting("numerics.eigen_cluster_radius") * norm
    steps = max(setting("numerics.newton_steps"), 1)
    result: list[tuple[complex, int, int]] = []
    for group in linkClusters(roots, lambda x, y: abs(x - y) <= radius):
        if len(group) == 1:
            group = [_refineSimple(m, group[0], steps)]
        structure = _clusterStructure(m, group, norm, tol)
        if structure is not None:
            if len(group) > 1:
                log(
                    "projective.eigen",
                    f"Merged eigenvalue roots {group} into one cluster",
                    verbosity.NOTE,
                )
            result.append(structure)
            continue
        if len(group) > 1:
            log(
                "projective.eigen",
                f"Roots {group} are distinct eigenvalues, not one cluster",
                verbosity.NOTE,
            )
        for root in group:
            root = _refineSimple(m, root, steps)
            single = _clusterStructure(m, [root], norm, tol)
            if single is None:
                raise IllConditionedError(
                    f"Eigenvalue {root:.6g} is neither simple nor part of "
                    f"a repeated eigenvalue at tolerance {tol:.3g}")
            result.append(single)
    return result


def eigenAnalysis(g: ProjTransform, tol: Optional[float] = None) -> EigenData:
    """
    Find the eigenvalues, multiplicities and a generalized eigenbasis of the
    determinant 1 lift of a transformation

    ### Args:
    * `g` (`ProjTransform`): transformation
    * `tol` (`float`, optional): tolerance for rank decisions. Defaults to
      the configured tolerance.

    ### Raises:
    * `IllConditionedError`: eigenvalues can't be told apart from a repeated
      eigenvalue at this tolerance

    ### Returns:
    * `EigenData`: eigenstructure
    """
    tol = tolerance(tol)
    m = g.lift
    norm = float(np.linalg.norm(m, 2))
    a, b, c = characteristicCoefficients(m)
    steps = setting("numerics.newton_steps")
    roots = [_newtonPolish(r, a, b, c, steps) for r in cubicRoots(a, b, c)]
    order = cmp_to_key(_eigenOrder(tol))
    merged = sorted(
        _clusterRoots(m, roots, norm, tol),
        key=lambda entry: order(entry[0]),
    )

    eigenvalues: list[complex] = []
    columns: list[np.ndarray] = []
    clusters: list[EigenCluster] = []
    for value, algebraic, geometric in merged:
        shifted = m - value * np.eye(3)
        block = algebraic - geometric + 1
        eigvecs = _nullRows(shifted, geometric)
        generalized = _nullRows(
            np.linalg.matrix_power(shifted, block), algebraic)
        # Extend the eigenvectors to the generalized eigenspace
        extra = generalized - (generalized @ eigvecs.conj().T) @ eigvecs
        if algebraic > geometric:
            _, _, vh = np.linalg.svd(extra)
            extension = vh[:algebraic - geometric]
        else:
            extension = np.zeros((0, 3), dtype=np.complex128)
        start = len(eigenvalues)
        for row in list(eigvecs) + list(extension):
            columns.append(row)
        eigenvalues.extend([value] * algebraic)
        clusters.append(EigenCluster(
            value, algebraic, geometric,
            tuple(range(start, start + algebraic))))

    diagonalizable = all(cl.geometric == cl.algebraic for cl in clusters)
    return EigenData(
        (eigenvalues[0], eigenvalues[1], eigenvalues[2]),
        diagonalizable,
        np.array(columns).T,
        tuple(clusters),
    )
