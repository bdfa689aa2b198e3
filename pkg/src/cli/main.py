"""
cli > main

The `excurve` command-line front end. Each command reads a scene file, runs
one operation of the library and prints the result as text or as a
machine-readable document.

Exit codes:
* 0: success (and for `report`, a compliant configuration)
* 1: any other library error
* 2: the scene file couldn't be parsed
* 3: a requested label doesn't exist in the scene
* 4: the power sequence doesn't converge
* 5: the report found a violation
* 6: the curve isn't invariant

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

__all__ = [
    'OutputFormat',
    'cmdClassifyElement',
    'cmdPowerLimit',
    'cmdCurveInvariants',
    'cmdInvarianceCheck',
    'cmdDualCurve',
    'cmdReport',
    'buildParser',
    'main',
]

import argparse
import os
import sys
from enum import Enum
from typing import Any, Optional, Sequence

from classifier import theoremReport
from common.context_manager import resetContext
from common.exceptions import ExcurveError, NotInvariantError
from common.logger import log, verbosity
from common.util.catch_exception_decorator import catchExceptionDecorator
from curves import (
    curveInvariants,
    dualCurve,
    invarianceCheck,
)
from projective import classifyElement, kernel, powerLimit
from . import render
from .scene import loadScene

TOL_ENVIRONMENT_VARIABLE = "EXCURVE_TOL"

EXIT_SUCCESS = 0
EXIT_VIOLATION = 5
EXIT_NOT_INVARIANT = NotInvariantError.exit_code


class OutputFormat(Enum):
    TEXT = "text"
    MACHINE = "machine"

    def __str__(self) -> str:
        return self.value


def _emit(
    command: str,
    fmt: OutputFormat,
    document: render.Document,
    text: str,
) -> None:
    if fmt == OutputFormat.MACHINE:
        print(render.machineOutput(command, document))
    else:
        print(text)


def cmdClassifyElement(
    path: str,
    label: str,
    fmt: OutputFormat = OutputFormat.TEXT,
) -> int:
    """
    Print the kind of a generator, its eigenvalues and its determinant 1
    lift
    """
    g = loadScene(path).generator(label)
    element = classifyElement(g)
    _emit(
        "classify-element",
        fmt,
        render.elementDocument(label, element, g.lift),
        render.elementText(label, element, g.lift),
    )
    return EXIT_SUCCESS


def cmdPowerLimit(
    path: str,
    label: str,
    fmt: OutputFormat = OutputFormat.TEXT,
) -> int:
    """
    Print the limit of the powers of a generator, along with its kernel
    """
    g = loadScene(path).generator(label)
    limit = powerLimit(g)
    k = kernel(limit)
    _emit(
        "power-limit",
        fmt,
        render.limitDocument(label, limit, k),
        render.limitText(label, limit, k),
    )
    return EXIT_SUCCESS


def cmdCurveInvariants(
    path: str,
    label: str,
    fmt: OutputFormat = OutputFormat.TEXT,
) -> int:
    """
    Print the singular points, inflections and numeric invariants of a
    curve component
    """
    F = loadScene(path).component(label).polynomial
    invariants = curveInvariants(F)
    singular = list(invariants.singularities)
    inflections = list(invariants.inflectionLocations)
    _emit(
        "curve-invariants",
        fmt,
        render.invariantsDocument(
            label, F, invariants, singular, inflections),
        render.invariantsText(label, F, invariants, singular, inflections),
    )
    return EXIT_SUCCESS


def cmdInvarianceCheck(
    path: str,
    generator: Optional[str] = None,
    component: Optional[str] = None,
    fmt: OutputFormat = OutputFormat.TEXT,
) -> int:
    """
    Check each component for invariance under each generator on its own.
    The options restrict the check to one generator or one component.

    Returns the not-invariant exit code if any check fails.
    """
    scene = loadScene(path)
    generators = (
        [(generator, scene.generator(generator))] if generator is not None
        else list(scene.group)
    )
    components = (
        [scene.component(component)] if component is not None
        else list(scene.components)
    )
    results: list[render.InvarianceResult] = []
    for g_label, g in generators:
        for c in components:
            try:
                cert = invarianceCheck(c.polynomial, g)
                results.append((g_label, c.label, cert, cert.residual))
            except NotInvariantError as e:
                results.append((g_label, c.label, None, e.residual))
    _emit(
        "invariance-check",
        fmt,
        render.invarianceDocument(results),
        render.invarianceText(results),
    )
    if any(cert is None for _, _, cert, _ in results):
        return EXIT_NOT_INVARIANT
    return EXIT_SUCCESS


def cmdDualCurve(
    path: str,
    label: str,
    fmt: OutputFormat = OutputFormat.TEXT,
) -> int:
    """
    Print the dual of a curve component
    """
    F = loadScene(path).component(label).polynomial
    dual = dualCurve(F)
    _emit(
        "dual-curve",
        fmt,
        render.dualDocument(label, dual),
        render.dualText(label, dual),
    )
    return EXIT_SUCCESS


def cmdReport(path: str, fmt: OutputFormat = OutputFormat.TEXT) -> int:
    """
    Print the full configuration report of the scene

    Returns the violation exit code if any verdict is a violation.
    """
    scene = loadScene(path)
    report = theoremReport(scene.group, scene.components, scene.hypotheses)
    _emit(
        "report",
        fmt,
        render.reportDocument(report),
        render.reportText(report),
    )
    return EXIT_SUCCESS if report.compliant else EXIT_VIOLATION


def buildParser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--tol",
        type=float,
        default=None,
        help=f"numeric tolerance (overrides ${TOL_ENVIRONMENT_VARIABLE})",
    )
    common.add_argument(
        "--format",
        type=OutputFormat,
        choices=list(OutputFormat),
        default=OutputFormat.TEXT,
        help="output format",
    )
    common.add_argument(
        "--seed",
        type=int,
        default=None,
        help="seed for randomized guards (default 0)",
    )
    common.add_argument(
        "-v", "--verbose",
        action="count",
        default=0,
        help="print more of the log to standard error",
    )

    parser = argparse.ArgumentParser(
        prog="excurve",
        description="Classify projective transformations and the curves "
        "that groups of them leave invariant.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("classify-element", "classify a generator"),
        ("power-limit", "limit of the powers of a generator"),
        ("curve-invariants", "singularities and invariants of a component"),
        ("dual-curve", "dual curve of a component"),
    ):
        sub = commands.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("scene", help="scene file")
        sub.add_argument("label", help="generator or component label")

    check = commands.add_parser(
        "invariance-check",
        parents=[common],
        help="check each component for invariance under each generator",
    )
    check.add_argument("scene", help="scene file")
    check.add_argument("--generator", default=None)
    check.add_argument("--component", default=None)

    report = commands.add_parser(
        "report",
        parents=[common],
        help="classify the curve and check its configuration",
    )
    report.add_argument("scene", help="scene file")
    return parser


def _overrides(
    args: argparse.Namespace,
    parser: argparse.ArgumentParser,
) -> dict[str, Any]:
    overrides: dict[str, Any] = {}
    tol = args.tol
    if tol is None and os.environ.get(TOL_ENVIRONMENT_VARIABLE):
        try:
            tol = float(os.environ[TOL_ENVIRONMENT_VARIABLE])
        except ValueError:
            parser.error(
                f"${TOL_ENVIRONMENT_VARIABLE} isn't a number: "
                f"{os.environ[TOL_ENVIRONMENT_VARIABLE]!r}")
    if tol is not None:
        if not tol > 0:
            parser.error("The tolerance must be positive")
        overrides["numerics.tolerance"] = tol
    if args.seed is not None:
        overrides["numerics.seed"] = args.seed
    if args.verbose >= 1:
        overrides["logger.max_verbosity"] = verbosity.INFO
    if args.verbose >= 2:
        overrides["logger.max_verbosity"] = verbosity.NOTE
        overrides["logger.discard_verbosity"] = verbosity.MOST_VERBOSE
    return overrides


def _dispatch(args: argparse.Namespace) -> int:
    fmt = args.format
    if args.command == "classify-element":
        return cmdClassifyElement(args.scene, args.label, fmt)
    if args.command == "power-limit":
        return cmdPowerLimit(args.scene, args.label, fmt)
    if args.command == "curve-invariants":
        return cmdCurveInvariants(args.scene, args.label, fmt)
    if args.command == "dual-curve":
        return cmdDualCurve(args.scene, args.label, fmt)
    if args.command == "invariance-check":
        return cmdInvarianceCheck(
            args.scene, args.generator, args.component, fmt)
    return cmdReport(args.scene, fmt)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the command line

    ### Args:
    * `argv` (`Sequence[str]`, optional): arguments, excluding the program
      name. Defaults to `sys.argv[1:]`.

    ### Returns:
    * `int`: exit code
    """
    parser = buildParser()
    args = parser.parse_args(argv)
    resetContext(_overrides(args, parser))
    log(
        "cli.command",
        f"Running {args.command} on {args.scene}",
        verbosity.INFO,
    )

    def onError(e: ExcurveError) -> int:
        log(
            "cli.command",
            f"{args.command} failed with {type(e).__name__}",
            verbosity.INFO,
        )
        if args.format == OutputFormat.MACHINE:
            print(render.errorDocument(args.command, e))
        print(f"excurve: error: {e}", file=sys.stderr)
        return e.exit_code

    run = catchExceptionDecorator(ExcurveError, onError)(_dispatch)
    result = run(args)
    assert result is not None
    return result
