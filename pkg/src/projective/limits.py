"""
projective > limits

Limits of the power sequence g^n of a projective transformation in the space
of pseudo-projective maps.

The normalized powers converge exactly when a single distinct eigenvalue
dominates: among the eigenvalues of largest modulus, keep those with the
largest Jordan block. If one eigenvalue lambda with block size k remains, the
limit is proportional to (A - lambda I)^(k - 1) P, where P is the spectral
projector onto the generalized eigenspace of lambda. Otherwise the phases of
the dominant terms keep rotating against each other.

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

__all__ = [
    'powerLimit',
    'iteratedPowerLimit',
]

from typing import Optional

import numpy as np

from common.exceptions import NonConvergentError
from common.logger import log, verbosity
from common.util.numeric import tolerance
from .eigen import EigenCluster, EigenData, eigenAnalysis
from .transform import ProjTransform, PseudoProjMap


def _dominantClusters(eigen: EigenData, tol: float) -> list[EigenCluster]:
    """
    Clusters of largest modulus, then of largest Jordan block among those
    """
    rho = max(abs(cl.value) for cl in eigen.clusters)
    top = [
        cl for cl in eigen.clusters
        if rho - abs(cl.value) <= tol * rho
    ]
    block = max(cl.blockSize for cl in top)
    return [cl for cl in top if cl.blockSize == block]


def _spectralProjector(eigen: EigenData, cluster: EigenCluster) -> np.ndarray:
    """
    Projector onto the generalized eigenspace of a cluster, along the other
    generalized eigenspaces
    """
    if cluster.algebraic == 3:
        return np.eye(3, dtype=np.complex128)
    idx = list(cluster.indices)
    basis = eigen.basis
    return basis[:, idx] @ np.linalg.inv(basis)[idx, :]


def powerLimit(g: ProjTransform, tol: Optional[float] = None) -> PseudoProjMap:
    """
    The limit of g^n as n goes to infinity, as a pseudo-projective map

    ### Args:
    * `g` (`ProjTransform`): transformation
    * `tol` (`float`, optional): tolerance. Defaults to the configured
      tolerance.

    ### Raises:
    * `NonConvergentError`: the normalized powers don't converge, for
      example for an elliptic element of infinite order
    * `IllConditionedError`: eigenvalue clustering was ambiguous

    ### Returns:
    * `PseudoProjMap`: the limit, rescaled by its largest entry
    """
    tol = tolerance(tol)
    eigen = eigenAnalysis(g, tol)
    dominant = _dominantClusters(eigen, tol)
    if len(dominant) != 1:
        values = ', '.join(f"{cl.value:.6g}" for cl in dominant)
        raise NonConvergentError(
            f"Powers of {g} don't converge: eigenvalues {values} all have "
            f"the largest modulus and Jordan block size")
    cluster = dominant[0]
    log(
        "projective.limit",
        f"Dominant eigenvalue {cluster.value:.6g} with Jordan block of size "
        f"{cluster.blockSize}",
        verbosity.NOTE,
    )
    shifted = g.lift - cluster.value * np.eye(3)
    limit = np.linalg.matrix_power(shifted, cluster.blockSize - 1) \
        @ _spectralProjector(eigen, cluster)
    biggest = np.max(np.abs(limit))
    limit[np.abs(limit) < tol * biggest] = 0
    return PseudoProjMap(limit, tol)


def iteratedPowerLimit(
    g: ProjTransform,
    n: int,
    tol: Optional[float] = None,
) -> PseudoProjMap:
    """
    The nth power of g, renormalized by its largest entry after every step

    This approximates the limit of the power sequence directly. It converges
    geometrically when the dominant eigenvalue is separated in modulus, but
    only like 1/n when the limit comes from a Jordan block.

    ### Args:
    * `g` (`ProjTransform`): transformation
    * `n` (`int`): number of steps
    * `tol` (`float`, optional): tolerance for the rank of the result

    ### Returns:
    * `PseudoProjMap`: normalized power
    """
    power = np.eye(3, dtype=np.complex128)
    for _ in range(n):
        power = g.lift @ power
        power = power / power.flat[int(np.argmax(np.abs(power)))]
    return PseudoProjMap(power, tol)
