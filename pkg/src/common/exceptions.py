"""
common > exceptions

Contains definitions for custom exceptions used by the library and the
command-line front end.

Every error carries an `exit_code`, which the command-line front end uses
as its process exit status.

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""


class ExcurveException(Exception):
    """Base exception type for exceptions within the library
    """


class ExcurveError(ExcurveException):
    """Base type for errors raised by library operations
    """
    exit_code = 1


class InvalidConfigError(ExcurveError):
    """Errors in configuration"""


class NumericInputError(ExcurveError, ValueError):
    """Non-finite or all-zero numeric input given to a constructor"""


# Projective core
##############################################################################


class ProjectiveError(ExcurveError):
    """Errors to do with projective linear algebra"""


class EqualPointsError(ProjectiveError):
    """Two points are proportional, so they don't determine a line"""


class EqualLinesError(ProjectiveError):
    """Two lines are proportional, so they don't determine a point"""


class SingularTransformError(ProjectiveError):
    """A matrix that must be invertible has zero determinant"""


class IllConditionedError(ProjectiveError):
    """Eigenvalue clustering is ambiguous at the configured tolerance"""


class NonConvergentError(ProjectiveError):
    """The normalized power sequence of a transform has no limit"""
    exit_code = 4


class NotFixedError(ProjectiveError):
    """The transform doesn't fix the given centre of projection"""


class PointOnLineError(ProjectiveError):
    """The centre of projection lies on the target line"""


# Curves
##############################################################################


class CurveError(ExcurveError):
    """Errors to do with plane curves"""


class RepeatedFactorError(CurveError):
    """The polynomial has a repeated factor"""


class DegreeUnsupportedError(CurveError):
    """The degree of the curve is outside what an operation supports"""


class LineIsComponentError(CurveError):
    """A line is a component of the curve it was intersected with"""


class CommonComponentError(CurveError):
    """Two curves being intersected share a component"""


class ReducibleCurveError(CurveError):
    """The curve is reducible, but an irreducible curve was required"""


class DegenerateCurveError(CurveError):
    """A conic has a singular coefficient matrix"""


class UnsupportedDualError(CurveError):
    """The dual curve can't be computed without a parametrization"""


class NegativeGenusError(CurveError):
    """Clebsch's genus formula gave a negative value"""


class InconsistentInvariantsError(CurveError):
    """A Pluecker formula gave a negative value"""


class NotSingularError(CurveError):
    """The given point isn't a singular point of the curve"""


class NotInvariantError(CurveError):
    """The curve isn't invariant under the transform"""
    exit_code = 6

    def __init__(self, message: str, residual: float) -> None:
        super().__init__(message)
        self.residual = residual


# Canonical families
##############################################################################


class FamilyError(ExcurveError):
    """Errors to do with the canonical curves and groups"""


class ZeroParameterError(FamilyError):
    """A group parameter that must be nonzero was zero"""


class WrongTypeError(FamilyError):
    """The curve isn't of the type required for normalization"""


class FrameDegenerateError(FamilyError):
    """The frame points aren't in general position"""


class NotDiagonalError(FamilyError):
    """The transform isn't diagonal"""


# Classifier
##############################################################################


class ClassifierError(ExcurveError):
    """Errors to do with classifying configurations"""


class DuplicateComponentError(ClassifierError):
    """Two curve components are proportional"""


class DuplicateLinesError(ClassifierError):
    """Two lines in a configuration are proportional"""


class DuplicateLabelError(ClassifierError):
    """Two generators or components share a label"""


class OrbitNotInvariantError(NotInvariantError):
    """A generator doesn't permute the curve components"""

    def __init__(
        self,
        generator: str,
        component: str,
        residual: float,
    ) -> None:
        super().__init__(
            f"Generator '{generator}' doesn't map component '{component}' "
            f"onto any component (best residual {residual:.3e})",
            residual,
        )
        self.generator = generator
        self.component = component


# Scene files
##############################################################################


class SceneError(ExcurveError):
    """Errors to do with scene files"""


class SceneParseError(SceneError):
    """Failed to parse a scene file"""
    exit_code = 2


class MissingLabelError(SceneError):
    """The requested label doesn't exist in the scene"""
    exit_code = 3
