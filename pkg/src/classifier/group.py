"""
classifier > group

Labelled inputs to the classifier: a group given by generators, the
components of a curve, and the hypotheses asserted about the group.

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

__all__ = [
    'GroupPresentation',
    'CurveComponent',
    'Hypotheses',
    'labelComponents',
]

from dataclasses import dataclass
from typing import Any, Iterable, Iterator, Optional, Sequence, Union

from common.exceptions import (
    DuplicateLabelError,
    MissingLabelError,
    NumericInputError,
)
from curves import HomPoly
from projective import ProjTransform


class GroupPresentation:
    """
    A group given by a nonempty list of labelled generators

    Only the generators are stored. Nothing about the group they generate
    (discreteness, finiteness) is decided here.
    """

    def __init__(
        self,
        generators: Iterable[tuple[str, Union[ProjTransform, Any]]],
    ) -> None:
        """
        Create a group presentation

        ### Args:
        * `generators` (`Iterable[tuple[str, ProjTransform]]`): labels and
          generators. Anything else is converted to a `ProjTransform`.

        ### Raises:
        * `NumericInputError`: no generators
        * `DuplicateLabelError`: a label is used twice
        * `SingularTransformError`: a generator isn't invertible
        """
        self._generators: dict[str, ProjTransform] = {}
        for label, g in generators:
            if label in self._generators:
                raise DuplicateLabelError(
                    f"Generator label '{label}' is used more than once")
            if not isinstance(g, ProjTransform):
                g = ProjTransform(g)
            self._generators[label] = g
        if not self._generators:
            raise NumericInputError("A group needs at least one generator")

    @property
    def labels(self) -> list[str]:
        return list(self._generators.keys())

    def __getitem__(self, label: str) -> ProjTransform:
        try:
            return self._generators[label]
        except KeyError:
            raise MissingLabelError(
                f"No generator labelled '{label}'") from None

    def __iter__(self) -> Iterator[tuple[str, ProjTransform]]:
        return iter(self._generators.items())

    def __len__(self) -> int:
        return len(self._generators)

    def word(self, labels: Sequence[str]) -> ProjTransform:
        """
        The product of generators, where the last label is applied first

        ### Args:
        * `labels` (`Sequence[str]`): generator labels. A label ending in
          `^-1` stands for the inverse of that generator.

        ### Raises:
        * `MissingLabelError`: unknown label

        ### Returns:
        * `ProjTransform`: product (the identity for an empty word)
        """
        result = ProjTransform.identity()
        for label in labels:
            if label.endswith("^-1"):
                g = self[label[:-3]].inverse()
            else:
                g = self[label]
            result = result @ g
        return result

    def __repr__(self) -> str:
        return f"GroupPresentation({', '.join(self.labels)})"


@dataclass(frozen=True, eq=False)
class CurveComponent:
    """
    A labelled irreducible component of an invariant curve
    """
    label: str
    polynomial: HomPoly

    @property
    def degree(self) -> int:
        return self.polynomial.degree

    def __str__(self) -> str:
        return f"{self.label}: {self.polynomial}"


def labelComponents(
    components: Sequence[Union[CurveComponent, HomPoly]],
) -> list[CurveComponent]:
    """
    Give labels to unlabelled components

    Plain polynomials are labelled `C1`, `C2`, ... by their position.

    ### Raises:
    * `NumericInputError`: no components
    * `DuplicateLabelError`: a label is used twice

    ### Returns:
    * `list[CurveComponent]`: labelled components, in the given order
    """
    if not components:
        raise NumericInputError("A curve needs at least one component")
    result = []
    for i, c in enumerate(components):
        if isinstance(c, HomPoly):
            c = CurveComponent(f"C{i + 1}", c)
        result.append(c)
    labels = [c.label for c in result]
    for label in labels:
        if labels.count(label) > 1:
            raise DuplicateLabelError(
                f"Component label '{label}' is used more than once")
    return result


@dataclass(frozen=True)
class Hypotheses:
    """
    Properties of the group asserted by the caller, since they can't be
    decided numerically. `None` means no assertion was made.

    The group is always assumed to be discrete.
    """
    infinite: Optional[bool] = None
    virtually_cyclic: Optional[bool] = None
    virtually_commutative: Optional[bool] = None
