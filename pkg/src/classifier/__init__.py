"""
classifier

Classification of curves invariant under a group of projective
transformations: the action of the group on the components, the type of
each component, the configuration of the lines, and a report with verdicts
on the whole configuration.

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
    'OrbitAction',
    'orbitAction',
    'ComponentKind',
    'ComponentClass',
    'lineOf',
    'classifyComponent',
    'areConcurrent',
    'commonPoint',
    'maxNonconcurrentLines',
    'TangencyKind',
    'LineIncidence',
    'TangencyCensus',
    'tangencyCensus',
    'VerdictStatus',
    'Verdict',
    'ConfigurationReport',
    'theoremReport',
]

from .group import (
    GroupPresentation,
    CurveComponent,
    Hypotheses,
    labelComponents,
)
from .orbit import OrbitAction, orbitAction
from .component import (
    ComponentKind,
    ComponentClass,
    lineOf,
    classifyComponent,
)
from .lines import areConcurrent, commonPoint, maxNonconcurrentLines
from .census import (
    TangencyKind,
    LineIncidence,
    TangencyCensus,
    tangencyCensus,
)
from .report import (
    VerdictStatus,
    Verdict,
    ConfigurationReport,
    theoremReport,
)
