"""
classifier > report

Assembles everything known about an invariant curve of a group into a
configuration report, with verdicts on whether the configuration is one that
an infinite discrete group can leave invariant.

Discreteness can't be checked numerically, and neither can the other
properties of the group that the verdicts depend on. These are asserted by
the caller as `Hypotheses`, and the verdicts are phrased conditionally on
them.

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

__all__ = [
    'VerdictStatus',
    'Verdict',
    'ConfigurationReport',
    'theoremReport',
]

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Union

from common.logger import log, verbosity
from curves import HomPoly
from projective import ProjPoint
from .census import TangencyCensus, tangencyCensus
from .component import ComponentClass, ComponentKind, classifyComponent
from .group import (
    CurveComponent,
    GroupPresentation,
    Hypotheses,
    labelComponents,
)
from .lines import commonPoint, maxNonconcurrentLines
from .orbit import OrbitAction, orbitAction

COMPONENT_TYPES = "component-types"
LINE_CONFIGURATION = "line-configuration"
SINGLE_CURVE_TYPE = "single-curve-type"
TANGENT_SECANT_LIMITS = "tangent-secant-limits"
NON_COMMUTATIVE_STRUCTURE = "non-commutative-structure"

STATEMENTS = {
    COMPONENT_TYPES:
        "Every irreducible component of a curve invariant under an "
        "infinite discrete group is a line, the Veronese curve or the "
        "cubic xy^2 = z^3, up to projective equivalence.",
    LINE_CONFIGURATION:
        "If a curve invariant under an infinite discrete group that is "
        "virtually cyclic or not virtually commutative contains lines, at "
        "most three of them are in general position.",
    SINGLE_CURVE_TYPE:
        "A curve invariant under an infinite discrete virtually cyclic "
        "group doesn't contain both conics and cubics.",
    TANGENT_SECANT_LIMITS:
        "For an infinite discrete virtually cyclic group, the lines of an "
        "invariant curve include at most two tangents and at most one "
        "secant to each conic or cubic component.",
    NON_COMMUTATIVE_STRUCTURE:
        "A curve invariant under an infinite discrete group that isn't "
        "virtually commutative is a finite union of lines or the Veronese "
        "curve.",
}
"""Results that each rule checks"""


class VerdictStatus(Enum):
    COMPLIANT = "compliant"
    VIOLATION = "violation"
    NOT_APPLICABLE = "not-applicable"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Verdict:
    rule: str
    status: VerdictStatus
    message: str

    @property
    def statement(self) -> str:
        return STATEMENTS[self.rule]

    def __str__(self) -> str:
        return f"{self.rule}: {self.status} ({self.message})"


@dataclass(frozen=True, eq=False)
class ConfigurationReport:
    """
    A report on a curve invariant under a group

    * `classes` maps each component label to its classification.
    * `nonconcurrent` is the largest number of line components in general
      position, or `None` when there are no lines.
    * `concurrencyPoint` is the point shared by all the lines, if any.
    * `censuses` maps the label of each conic or cubic component to the
      tangency census of the line components.
    """
    components: tuple[CurveComponent, ...]
    hypotheses: Hypotheses
    action: OrbitAction
    classes: dict[str, ComponentClass]
    nonconcurrent: Optional[int]
    concurrencyPoint: Optional[ProjPoint]
    censuses: dict[str, TangencyCensus]
    verdicts: tuple[Verdict, ...]

    @property
    def compliant(self) -> bool:
        """Whether no verdict is a violation"""
        return all(
            v.status != VerdictStatus.VIOLATION for v in self.verdicts)

    def verdict(self, rule: str) -> Verdict:
        return next(v for v in self.verdicts if v.rule == rule)

    def labelsOfKind(self, kind: ComponentKind) -> list[str]:
        return [
            c.label for c in self.components
            if self.classes[c.label].kind == kind
        ]


def _componentTypes(classes: dict[str, ComponentClass]) -> Verdict:
    other = [
        label for label, c in classes.items()
        if c.kind == ComponentKind.OTHER
    ]
    if other:
        return Verdict(
            COMPONENT_TYPES,
            VerdictStatus.VIOLATION,
            f"components {', '.join(other)} are of another type",
        )
    return Verdict(
        COMPONENT_TYPES,
        VerdictStatus.COMPLIANT,
        "every component is a line, a Veronese conic or a cuspidal cubic",
    )


def _lineConfiguration(
    nonconcurrent: Optional[int],
    hypotheses: Hypotheses,
) -> Verdict:
    if nonconcurrent is None:
        return Verdict(
            LINE_CONFIGURATION,
            VerdictStatus.NOT_APPLICABLE,
            "there are no line components",
        )
    if hypotheses.virtually_cyclic is False \
            and hypotheses.virtually_commutative is True:
        return Verdict(
            LINE_CONFIGURATION,
            VerdictStatus.NOT_APPLICABLE,
            "the group is virtually commutative but not virtually cyclic",
        )
    status = (
        VerdictStatus.COMPLIANT if nonconcurrent <= 3
        else VerdictStatus.VIOLATION
    )
    return Verdict(
        LINE_CONFIGURATION,
        status,
        f"at most {nonconcurrent} of the lines are in general position",
    )


def _singleCurveType(
    classes: dict[str, ComponentClass],
    hypotheses: Hypotheses,
) -> Verdict:
    if hypotheses.virtually_cyclic is False:
        return Verdict(
            SINGLE_CURVE_TYPE,
            VerdictStatus.NOT_APPLICABLE,
            "the group isn't virtually cyclic",
        )
    kinds = {c.kind for c in classes.values()}
    if {ComponentKind.VERONESE_CONIC, ComponentKind.CUSPIDAL_CUBIC} <= kinds:
        return Verdict(
            SINGLE_CURVE_TYPE,
            VerdictStatus.VIOLATION,
            "the curve contains both conics and cuspidal cubics",
        )
    return Verdict(
        SINGLE_CURVE_TYPE,
        VerdictStatus.COMPLIANT,
        "the curve doesn't mix conics and cuspidal cubics",
    )


def _tangentSecantLimits(
    censuses: dict[str, TangencyCensus],
    hypotheses: Hypotheses,
) -> Verdict:
    if not censuses:
        return Verdict(
            TANGENT_SECANT_LIMITS,
            VerdictStatus.NOT_APPLICABLE,
            "there are no conic or cubic components",
        )
    if hypotheses.virtually_cyclic is False:
        return Verdict(
            TANGENT_SECANT_LIMITS,
            VerdictStatus.NOT_APPLICABLE,
            "the group isn't virtually cyclic",
        )
    counts = [
        f"{label}: {c.tangents} tangent, {c.secants} secant, "
        f"{len(c.other)} other"
        for label, c in censuses.items()
    ]
    exceeded = any(
        c.tangents > 2 or c.secants > 1 for c in censuses.values())
    return Verdict(
        TANGENT_SECANT_LIMITS,
        VerdictStatus.VIOLATION if exceeded else VerdictStatus.COMPLIANT,
        "; ".join(counts),
    )


def _nonCommutativeStructure(
    classes: dict[str, ComponentClass],
    hypotheses: Hypotheses,
) -> Verdict:
    if hypotheses.virtually_commutative is not False:
        return Verdict(
            NON_COMMUTATIVE_STRUCTURE,
            VerdictStatus.NOT_APPLICABLE,
            "the group isn't asserted to be non-virtually commutative",
        )
    kinds = [c.kind for c in classes.values()]
    if all(k == ComponentKind.LINE for k in kinds):
        return Verdict(
            NON_COMMUTATIVE_STRUCTURE,
            VerdictStatus.COMPLIANT,
            "the curve is a union of lines",
        )
    if kinds == [ComponentKind.VERONESE_CONIC]:
        return Verdict(
            NON_COMMUTATIVE_STRUCTURE,
            VerdictStatus.COMPLIANT,
            "the curve is a single Veronese conic",
        )
    return Verdict(
        NON_COMMUTATIVE_STRUCTURE,
        VerdictStatus.VIOLATION,
        "the curve is neither a union of lines nor a single Veronese conic",
    )


def _verdicts(
    classes: dict[str, ComponentClass],
    nonconcurrent: Optional[int],
    censuses: dict[str, TangencyCensus],
    hypotheses: Hypotheses,
) -> list[Verdict]:
    verdicts = [
        _componentTypes(classes),
        _lineConfiguration(nonconcurrent, hypotheses),
        _singleCurveType(classes, hypotheses),
        _tangentSecantLimits(censuses, hypotheses),
        _nonCommutativeStructure(classes, hypotheses),
    ]
    if hypotheses.infinite is False:
        return [
            Verdict(
                v.rule,
                VerdictStatus.NOT_APPLICABLE,
                "the group is finite",
            )
            for v in verdicts
        ]
    return verdicts


def theoremReport(
    G: GroupPresentation,
    components: Sequence[Union[CurveComponent, HomPoly]],
    hypotheses: Optional[Hypotheses] = None,
    tol: Optional[float] = None,
) -> ConfigurationReport:
    """
    Check that a curve is invariant under a group, classify its components
    and give verdicts on the configuration

    Components are sorted by label. The verdicts are advisory, since they
    depend on the hypotheses, which are taken on trust.

    ### Args:
    * `G` (`GroupPresentation`): group
    * `components` (`Sequence[CurveComponent | HomPoly]`): irreducible
      components of the curve
    * `hypotheses` (`Hypotheses`, optional): asserted properties of the
      group. Defaults to asserting nothing.
    * `tol` (`float`, optional): tolerance. Defaults to the configured
      tolerance.

    ### Raises:
    * `OrbitNotInvariantError`: the curve isn't invariant
    * `DuplicateComponentError`: two components are proportional
    * `ReducibleCurveError`: a component is reducible

    ### Returns:
    * `ConfigurationReport`: report
    """
    if hypotheses is None:
        hypotheses = Hypotheses()
    labelled = sorted(labelComponents(components), key=lambda c: c.label)
    action = orbitAction(G, labelled, tol)
    classes = {c.label: classifyComponent(c.polynomial, tol) for c in labelled}

    lines = [k.line for k in classes.values() if k.line is not None]
    nonconcurrent = None
    point = None
    if lines:
        nonconcurrent = maxNonconcurrentLines(lines, tol)
        if len(lines) >= 2:
            point = commonPoint(lines, tol)
    censuses = {
        c.label: tangencyCensus(c.polynomial, lines, tol)
        for c in labelled if c.degree in (2, 3)
    }

    verdicts = _verdicts(classes, nonconcurrent, censuses, hypotheses)
    for v in verdicts:
        log(
            "classifier.report",
            str(v),
            verbosity.WARNING if v.status == VerdictStatus.VIOLATION
            else verbosity.INFO,
        )
    return ConfigurationReport(
        components=tuple(labelled),
        hypotheses=hypotheses,
        action=action,
        classes=classes,
        nonconcurrent=nonconcurrent,
        concurrencyPoint=point,
        censuses=censuses,
        verdicts=tuple(verdicts),
    )
