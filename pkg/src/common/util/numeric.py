"""
common > util > numeric

Helpers for the complex floating point decisions shared by every package:
reading tolerances, validating input, comparing vectors up to scale, ranks
and null spaces, and seeded random matrices.

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

__all__ = [
    'setting',
    'tolerance',
    'seededRng',
    'asComplexArray',
    'canonicalScale',
    'projectiveDistance',
    'proportionalityScale',
    'numericRank',
    'nullSpace',
    'randomUnitary',
    'randomTransformMatrix',
    'randomComplex',
    'formatComplex',
    'linkClusters',
]

from typing import Any, Callable, Optional, Sequence, TypeVar

import numpy as np

from common.exceptions import NumericInputError


T = TypeVar("T")


def setting(key: str) -> Any:
    """
    Read a value from the settings of the current context

    ### Args:
    * `key` (`str`): dotted settings key

    ### Returns:
    * `Any`: value
    """
    from common.context_manager import getContext
    return getContext().settings.get(key)


def tolerance(tol: Optional[float] = None) -> float:
    """
    Returns the given tolerance, or the configured one if it is `None`
    """
    if tol is not None:
        return tol
    return setting("numerics.tolerance")


def seededRng(salt: int) -> np.random.Generator:
    """
    A random generator from the current context, seeded from the configured
    seed and the given salt
    """
    from common.context_manager import getContext
    return getContext().rng(salt)


def asComplexArray(
    values: Any,
    shape: tuple[int, ...],
    what: str = "value",
) -> np.ndarray:
    """
    Convert values to a complex128 array of the given shape, rejecting
    non-finite and all-zero input

    ### Args:
    * `values` (`Any`): anything numpy can convert
    * `shape` (`tuple[int, ...]`): required shape
    * `what` (`str`, optional): name used in error messages

    ### Raises:
    * `NumericInputError`: wrong shape, non-finite or all zero

    ### Returns:
    * `np.ndarray`: a new array
    """
    try:
        arr = np.array(values, dtype=np.complex128)
    except (TypeError, ValueError) as e:
        raise NumericInputError(f"Invalid {what}: {e}") from None
    if arr.shape != shape:
        raise NumericInputError(
            f"Expected {what} with shape {shape}, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise NumericInputError(f"Non-finite entries in {what}")
    if not np.any(arr):
        raise NumericInputError(f"All entries of {what} are zero")
    return arr


def canonicalScale(arr: np.ndarray) -> np.ndarray:
    """
    Rescale so that the largest-modulus entry is exactly 1. Ties go to the
    first such entry in row-major order.

    ### Args:
    * `arr` (`np.ndarray`): nonzero array

    ### Returns:
    * `np.ndarray`: rescaled copy
    """
    index = int(np.argmax(np.abs(arr)))
    out = arr / arr.flat[index]
    out.flat[index] = 1.0
    return out


def projectiveDistance(a: np.ndarray, b: np.ndarray) -> float:
    """
    Distance between two nonzero arrays up to scale: the sine of the angle
    between them when flattened. Zero iff they are proportional.

    ### Args:
    * `a` (`np.ndarray`): first array
    * `b` (`np.ndarray`): second array

    ### Returns:
    * `float`: distance in [0, 1]
    """
    u = a.ravel() / np.linalg.norm(a)
    v = b.ravel() / np.linalg.norm(b)
    return float(np.linalg.norm(v - np.vdot(u, v) * u))


def proportionalityScale(a: np.ndarray, b: np.ndarray) -> complex:
    """
    The least-squares scalar λ with b ≈ λa

    ### Args:
    * `a` (`np.ndarray`): nonzero reference array
    * `b` (`np.ndarray`): other array

    ### Returns:
    * `complex`: λ
    """
    a = a.ravel()
    return complex(np.vdot(a, b.ravel()) / np.vdot(a, a))


def numericRank(m: np.ndarray, tol: float) -> int:
    """
    Rank of a matrix, counting singular values above `tol` times the largest

    ### Args:
    * `m` (`np.ndarray`): matrix
    * `tol` (`float`): relative tolerance

    ### Returns:
    * `int`: rank
    """
    s = np.linalg.svd(m, compute_uv=False)
    if s[0] == 0:
        return 0
    return int(np.sum(s > tol * s[0]))


def nullSpace(m: np.ndarray, tol: float) -> np.ndarray:
    """
    Orthonormal basis of the numeric null space of a matrix, as rows

    ### Args:
    * `m` (`np.ndarray`): matrix with at least as many columns as rows, or
      square
    * `tol` (`float`): relative tolerance on singular values

    ### Returns:
    * `np.ndarray`: array of shape (k, columns)
    """
    _, s, vh = np.linalg.svd(m)
    cols = m.shape[1]
    full = np.zeros(cols)
    full[:len(s)] = s
    scale = s[0] if len(s) and s[0] > 0 else 1.0
    mask = full <= tol * scale
    return vh[mask].conj()


def randomComplex(rng: np.random.Generator, size: Any = None) -> Any:
    """
    Standard complex normal samples
    """
    return rng.standard_normal(size) + 1j * rng.standard_normal(size)


def randomUnitary(rng: np.random.Generator, n: int = 3) -> np.ndarray:
    """
    A random unitary matrix, from the QR decomposition of a complex Gaussian
    matrix with the phases of R's diagonal removed
    """
    q, r = np.linalg.qr(randomComplex(rng, (n, n)))
    d = np.diag(r)
    return q * (d / np.abs(d))


def randomTransformMatrix(rng: np.random.Generator) -> np.ndarray:
    """
    A random well-conditioned invertible 3x3 matrix: a unitary matrix times a
    diagonal with moduli in [0.5, 2] and random phases

    ### Args:
    * `rng` (`Generator`): random generator

    ### Returns:
    * `np.ndarray`: matrix
    """
    moduli = rng.uniform(0.5, 2.0, 3)
    phases = np.exp(2j * np.pi * rng.uniform(0, 1, 3))
    return randomUnitary(rng) @ np.diag(moduli * phases) @ randomUnitary(rng)


def formatComplex(z: complex, digits: int = 6) -> str:
    """
    Format a complex number compactly, dropping parts that round to zero

    ### Args:
    * `z` (`complex`): number
    * `digits` (`int`, optional): significant digits. Defaults to `6`.

    ### Returns:
    * `str`: eg `"2"`, `"-i"`, `"0.5+1.5i"`
    """
    # Parts far below the modulus are rounding noise
    cutoff = 1e-12 * max(1.0, abs(z))
    re = 0.0 if abs(z.real) < cutoff else float(f"{z.real:.{digits}g}")
    im = 0.0 if abs(z.imag) < cutoff else float(f"{z.imag:.{digits}g}")
    if im == 0:
        return f"{re:.{digits}g}"
    if im == 1 or im == -1:
        im_str = "i" if im > 0 else "-i"
    else:
        im_str = f"{im:.{digits}g}i"
    if re == 0:
        return im_str
    sign = "+" if im > 0 else ""
    return f"{re:.{digits}g}{sign}{im_str}"


def linkClusters(
    items: Sequence[T],
    isClose: Callable[[T, T], bool],
) -> list[list[T]]:
    """
    Group items into connected clusters, where two items are linked when
    `isClose` returns `True` for them

    ### Args:
    * `items` (`Sequence[T]`): items to group
    * `isClose` (`Callable[[T, T], bool]`): closeness test

    ### Returns:
    * `list[list[T]]`: clusters, in order of their first item
    """
    # Union-find over indices
    parent = list(range(len(items)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(items)):
        for j in range(i):
            if isClose(items[i], items[j]):
                parent[find(i)] = find(j)

    groups: dict[int, list[T]] = {}
    for i, item in enumerate(items):
        groups.setdefault(find(i), []).append(item)
    return list(groups.values())
