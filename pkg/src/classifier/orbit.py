"""
classifier > orbit

The permutation action of a group's generators on the components of an
invariant curve.

A generator g sends component j to component i when pullback(C_i, g) is
proportional to C_j, which is to say g maps C_j onto C_i. The union of the
components is invariant exactly when every generator permutes them.

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

__all__ = [
    'OrbitAction',
    'orbitAction',
]

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from common.exceptions import DuplicateComponentError, OrbitNotInvariantError
from common.logger import log, verbosity
from common.util.numeric import linkClusters, tolerance
from curves import HomPoly, proportionalityResidual, pullback
from .group import CurveComponent, GroupPresentation, labelComponents

Permutation = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class OrbitAction:
    """
    The permutation of the components by each generator, along with the
    worst residual of the matches that were accepted
    """
    labels: tuple[str, ...]
    permutations: dict[str, Permutation]
    residual: float

    def permutation(self, generator: str) -> Permutation:
        return self.permutations[generator]

    def image(self, generator: str, label: str) -> str:
        """Label of the component that the generator maps this one onto"""
        sigma = self.permutations[generator]
        return self.labels[sigma[self.labels.index(label)]]

    def wordPermutation(self, word: Sequence[str]) -> Permutation:
        """
        The permutation induced by a product of generators, where the last
        label is applied first. Labels ending in `^-1` use the inverse.
        """
        result = tuple(range(len(self.labels)))
        for label in reversed(word):
            if label.endswith("^-1"):
                sigma = self.permutations[label[:-3]]
                step = [0] * len(sigma)
                for j, i in enumerate(sigma):
                    step[i] = j
            else:
                step = list(self.permutations[label])
            result = tuple(step[j] for j in result)
        return result

    def isTrivial(self) -> bool:
        """Whether every generator fixes every component"""
        identity = tuple(range(len(self.labels)))
        return all(p == identity for p in self.permutations.values())

    def orbits(self) -> list[list[str]]:
        """Orbits of the generated group on the components"""
        indices = list(range(len(self.labels)))
        groups = linkClusters(indices, lambda a, b: any(
            sigma[a] == b or sigma[b] == a
            for sigma in self.permutations.values()
        ))
        return [[self.labels[i] for i in g] for g in groups]


def _checkDistinct(components: list[CurveComponent], tol: float) -> None:
    for j, a in enumerate(components):
        for b in components[:j]:
            if a.degree != b.degree:
                continue
            _, residual = proportionalityResidual(a.polynomial, b.polynomial)
            if residual < tol:
                raise DuplicateComponentError(
                    f"Components '{b.label}' and '{a.label}' are "
                    f"proportional")


def orbitAction(
    G: GroupPresentation,
    components: Sequence[Union[CurveComponent, HomPoly]],
    tol: Optional[float] = None,
) -> OrbitAction:
    """
    Find the permutation of the curve components by each generator,
    certifying that their union is invariant

    ### Args:
    * `G` (`GroupPresentation`): group
    * `components` (`Sequence[CurveComponent | HomPoly]`): pairwise
      non-proportional components. Plain polynomials are labelled by
      position.
    * `tol` (`float`, optional): tolerance on the relative proportionality
      residual. Defaults to the configured tolerance.

    ### Raises:
    * `DuplicateComponentError`: two components are proportional
    * `OrbitNotInvariantError`: a generator maps a component onto something
      other than a component. The error names the generator and the
      component, along with the smallest residual found.

    ### Returns:
    * `OrbitAction`: permutations
    """
    tol = tolerance(tol)
    labelled = labelComponents(components)
    _checkDistinct(labelled, tol)

    permutations: dict[str, Permutation] = {}
    worst = 0.0
    for label, g in G:
        images = [pullback(c.polynomial, g) for c in labelled]
        sigma = []
        for j, c in enumerate(labelled):
            # Best match among components of the same degree
            best: Optional[tuple[float, int]] = None
            for i, image in enumerate(images):
                if image.degree != c.degree:
                    continue
                _, residual = proportionalityResidual(c.polynomial, image)
                if best is None or residual < best[0]:
                    best = (residual, i)
            assert best is not None
            residual, i = best
            if residual >= tol or i in sigma:
                raise OrbitNotInvariantError(label, c.label, residual)
            worst = max(worst, residual)
            sigma.append(i)
        permutations[label] = tuple(sigma)
        log(
            "classifier.orbit",
            f"Generator '{label}' acts on components as "
            + ", ".join(
                f"{c.label} -> {labelled[i].label}"
                for c, i in zip(labelled, sigma)
            ),
            verbosity.INFO,
        )
    return OrbitAction(
        tuple(c.label for c in labelled),
        permutations,
        worst,
    )
