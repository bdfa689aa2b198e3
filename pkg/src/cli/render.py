"""
cli > render

Rendering of command results, both as text for people to read and as
machine-readable JSON documents.

Machine output is deterministic: keys are sorted and complex numbers are
written as `[re, im]` rounded to 12 decimal places.

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

__all__ = [
    'SCHEMA_VERSION',
    'encodeComplex',
    'encodeMatrix',
    'encodePoint',
    'encodePolynomial',
    'machineOutput',
    'errorDocument',
    'elementDocument',
    'elementText',
    'limitDocument',
    'limitText',
    'invariantsDocument',
    'invariantsText',
    'invarianceDocument',
    'invarianceText',
    'dualDocument',
    'dualText',
    'reportDocument',
    'reportText',
]

import json
from typing import Any, Optional, Union

import numpy as np

from classifier import ComponentClass, ConfigurationReport, VerdictStatus
from common.exceptions import ExcurveError
from common.util.numeric import formatComplex
from curves import (
    CurveInvariants,
    DualCurve,
    HomPoly,
    InvarianceCertificate,
    SingularPoint,
)
from projective import ElementClass, ProjLine, ProjPoint, PseudoProjMap

SCHEMA_VERSION = "1"
"""Schema version of machine-readable output"""

DECIMALS = 12

Document = dict[str, Any]


def _round(x: float) -> float:
    # Avoid writing -0.0
    return round(float(x), DECIMALS) + 0.0


def encodeComplex(z: complex) -> list[float]:
    z = complex(z)
    return [_round(z.real), _round(z.imag)]


def encodeMatrix(m: np.ndarray) -> list[list[list[float]]]:
    return [[encodeComplex(v) for v in row] for row in m]


def encodePoint(p: Union[ProjPoint, ProjLine]) -> list[list[float]]:
    return [encodeComplex(v) for v in p.coords]


def encodePolynomial(F: HomPoly) -> Document:
    return {
        "degree": F.degree,
        "terms": [
            {"exp": list(exp), "coeff": encodeComplex(c)}
            for exp, c in sorted(F.coefficients.items(), reverse=True)
        ],
        "text": str(F),
    }


def machineOutput(command: str, result: Document) -> str:
    """
    The machine-readable document for a command's result
    """
    return json.dumps(
        {
            "schema_version": SCHEMA_VERSION,
            "command": command,
            "result": result,
        },
        sort_keys=True,
        indent=2,
    )


def errorDocument(command: str, error: ExcurveError) -> str:
    """
    The machine-readable document for a failed command. Errors that carry a
    witness (generator, component, residual) include it.
    """
    details: Document = {
        "type": type(error).__name__,
        "message": str(error),
        "exit_code": error.exit_code,
    }
    for key in ("generator", "component", "residual"):
        if hasattr(error, key):
            value = getattr(error, key)
            details[key] = _round(value) if key == "residual" else value
    return json.dumps(
        {
            "schema_version": SCHEMA_VERSION,
            "command": command,
            "error": details,
        },
        sort_keys=True,
        indent=2,
    )


# Elements and limits
##############################################################################


def elementDocument(
    label: str,
    element: ElementClass,
    lift: np.ndarray,
) -> Document:
    eigen = element.eigen
    return {
        "label": label,
        "kind": str(element.kind),
        "eigenvalues": [encodeComplex(v) for v in eigen.eigenvalues],
        "moduli": [_round(m) for m in eigen.moduli],
        "diagonalizable": eigen.diagonalizable,
        "clusters": [
            {
                "value": encodeComplex(c.value),
                "algebraic": c.algebraic,
                "geometric": c.geometric,
                "block_size": c.blockSize,
            }
            for c in eigen.clusters
        ],
        "lift": encodeMatrix(lift),
    }


def _formatMatrix(m: np.ndarray) -> list[str]:
    cells = [[formatComplex(v) for v in row] for row in m]
    width = max(len(c) for row in cells for c in row)
    return ["  [ " + "  ".join(c.rjust(width) for c in row) + " ]"
            for row in cells]


def elementText(
    label: str,
    element: ElementClass,
    lift: np.ndarray,
) -> str:
    eigen = element.eigen
    lines = [
        f"Element '{label}' is {element.kind}",
        "Eigenvalues: "
        + ", ".join(formatComplex(v) for v in eigen.eigenvalues),
        "Diagonalizable: " + ("yes" if eigen.diagonalizable else "no"),
        "Determinant 1 lift:",
        *_formatMatrix(lift),
    ]
    return "\n".join(lines)


def _kernelDocument(kernel: Union[None, ProjPoint, ProjLine]) -> Document:
    if kernel is None:
        return {"type": "empty"}
    kind = "point" if isinstance(kernel, ProjPoint) else "line"
    return {"type": kind, "coords": encodePoint(kernel)}


def limitDocument(
    label: str,
    limit: PseudoProjMap,
    kernel: Union[None, ProjPoint, ProjLine],
) -> Document:
    return {
        "label": label,
        "matrix": encodeMatrix(limit.matrix),
        "rank": limit.rank,
        "kernel": _kernelDocument(kernel),
    }


def limitText(
    label: str,
    limit: PseudoProjMap,
    kernel: Union[None, ProjPoint, ProjLine],
) -> str:
    if kernel is None:
        described = "empty"
    elif isinstance(kernel, ProjPoint):
        described = f"the point {kernel}"
    else:
        described = f"the line {kernel}"
    return "\n".join([
        f"Powers of '{label}' converge to a map of rank {limit.rank}:",
        *_formatMatrix(limit.matrix),
        f"Kernel: {described}",
    ])


# Curves
##############################################################################


def invariantsDocument(
    label: str,
    F: HomPoly,
    invariants: CurveInvariants,
    singular: list[SingularPoint],
    inflections: list[ProjPoint],
) -> Document:
    return {
        "label": label,
        "polynomial": encodePolynomial(F),
        "degree": invariants.degree,
        "nodes": invariants.nodes,
        "cusps": invariants.cusps,
        "class": invariants.curveClass,
        "inflections": invariants.inflections,
        "genus": invariants.genus,
        "observed_inflections": invariants.observedInflections,
        "consistent": invariants.consistent,
        "singular_points": [
            {
                "kind": str(p.kind),
                "location": encodePoint(p.location),
                "tangents": [encodePoint(t) for t in p.tangents],
            }
            for p in singular
        ],
        "inflection_points": [encodePoint(p) for p in inflections],
    }


def invariantsText(
    label: str,
    F: HomPoly,
    invariants: CurveInvariants,
    singular: list[SingularPoint],
    inflections: list[ProjPoint],
) -> str:
    lines = [
        f"Component '{label}': {F}",
        f"Degree {invariants.degree}, {invariants.nodes} nodes, "
        f"{invariants.cusps} cusps",
        f"Class {invariants.curveClass}, genus {invariants.genus}, "
        f"{invariants.inflections} inflections",
    ]
    for p in singular:
        tangents = ", ".join(str(t) for t in p.tangents)
        lines.append(
            f"  {p.kind} at {p.location}"
            + (f" with tangents {tangents}" if tangents else ""))
    for p in inflections:
        lines.append(f"  inflection at {p}")
    if not invariants.consistent:
        lines.append(
            f"Warning: found {invariants.observedInflections} inflections "
            f"directly")
    return "\n".join(lines)


InvarianceResult = tuple[str, str, Optional[InvarianceCertificate], float]
"""Generator label, component label, the certificate if invariant, and the
residual"""


def invarianceDocument(results: list[InvarianceResult]) -> Document:
    return {
        "checks": [
            {
                "generator": g,
                "component": c,
                "invariant": cert is not None,
                "scale": None if cert is None
                else encodeComplex(cert.scale),
                "residual": _round(residual),
            }
            for g, c, cert, residual in results
        ],
        "invariant": all(r[2] is not None for r in results),
    }


def invarianceText(results: list[InvarianceResult]) -> str:
    lines = []
    for g, c, cert, residual in results:
        if cert is None:
            lines.append(
                f"'{c}' isn't invariant under '{g}' "
                f"(residual {residual:.1e})")
        else:
            lines.append(
                f"'{c}' is invariant under '{g}' with scale "
                f"{formatComplex(cert.scale)} "
                f"(residual {cert.residual:.1e})")
    return "\n".join(lines)


def dualDocument(label: str, dual: DualCurve) -> Document:
    return {
        "label": label,
        "degree": dual.degree,
        "polynomial": encodePolynomial(dual.implicit),
        "parametrized": dual.parametrization is not None,
    }


def dualText(label: str, dual: DualCurve) -> str:
    return (
        f"Dual of '{label}' has degree {dual.degree}: {dual.implicit}\n"
        "(line coordinates [x:y:z] stand for the line xX + yY + zZ = 0)"
    )


# Reports
##############################################################################


def _classDocument(c: ComponentClass) -> Document:
    doc: Document = {"kind": str(c.kind), "degree": c.degree}
    if c.line is not None:
        doc["line"] = encodePoint(c.line)
    if c.normalizer is not None:
        doc["normalizer"] = encodeMatrix(c.normalizer.matrix)
        doc["residual"] = _round(c.residual or 0.0)
    if c.cusp is not None:
        doc["cusp"] = encodePoint(c.cusp)
    if c.inflection is not None:
        doc["inflection"] = encodePoint(c.inflection)
    if c.invariants is not None:
        doc["nodes"] = c.invariants.nodes
        doc["cusps"] = c.invariants.cusps
        doc["genus"] = c.invariants.genus
    return doc


def reportDocument(report: ConfigurationReport) -> Document:
    labels = report.action.labels
    return {
        "compliant": report.compliant,
        "hypotheses": {
            "infinite": report.hypotheses.infinite,
            "virtually_cyclic": report.hypotheses.virtually_cyclic,
            "virtually_commutative":
                report.hypotheses.virtually_commutative,
        },
        "components": [
            {
                "label": c.label,
                "polynomial": encodePolynomial(c.polynomial),
                "class": _classDocument(report.classes[c.label]),
            }
            for c in report.components
        ],
        "action": {
            g: [labels[i] for i in sigma]
            for g, sigma in report.action.permutations.items()
        },
        "orbits": report.action.orbits(),
        "lines": {
            "max_nonconcurrent": report.nonconcurrent,
            "common_point": None if report.concurrencyPoint is None
            else encodePoint(report.concurrencyPoint),
        },
        "tangency": {
            label: {
                "tangents": census.tangents,
                "secants": census.secants,
                "other": len(census.other),
                "lines": [
                    {"line": encodePoint(i.line), "kind": str(i.kind)}
                    for i in census.incidences
                ],
            }
            for label, census in report.censuses.items()
        },
        "verdicts": [
            {
                "rule": v.rule,
                "status": str(v.status),
                "message": v.message,
                "statement": v.statement,
            }
            for v in report.verdicts
        ],
    }


def _describeClass(c: ComponentClass) -> str:
    extra = []
    if c.cusp is not None:
        extra.append(f"cusp {c.cusp}")
    if c.inflection is not None:
        extra.append(f"inflection {c.inflection}")
    if c.invariants is not None and c.cusp is None:
        extra.append(
            f"{c.invariants.nodes} nodes, {c.invariants.cusps} cusps")
    return str(c.kind) + (f" ({', '.join(extra)})" if extra else "")


def reportText(report: ConfigurationReport) -> str:
    labels = report.action.labels
    lines = ["Components:"]
    for c in report.components:
        lines.append(
            f"  {c.label}: {c.polynomial}  "
            f"[{_describeClass(report.classes[c.label])}]")
    lines.append("Action:")
    for g, sigma in report.action.permutations.items():
        mapping = ", ".join(
            f"{labels[j]} -> {labels[i]}" for j, i in enumerate(sigma))
        lines.append(f"  {g}: {mapping}")
    lines.append(
        "Orbits: "
        + " ".join("{" + ", ".join(o) + "}" for o in report.action.orbits()))
    if report.nonconcurrent is not None:
        line = f"Lines: {report.nonconcurrent} in general position"
        if report.concurrencyPoint is not None:
            line += f", all through {report.concurrencyPoint}"
        lines.append(line)
    for label, census in report.censuses.items():
        described = ", ".join(
            f"{i.line} {i.kind}" for i in census.incidences) or "no lines"
        lines.append(f"Tangency to {label}: {described}")
    lines.append("Verdicts:")
    for v in report.verdicts:
        lines.append(f"  [{v.status}] {v.rule}: {v.message}")
        if v.status != VerdictStatus.NOT_APPLICABLE:
            lines.append(f"      {v.statement}")
    lines.append(
        "Result: " + ("compliant" if report.compliant else "violation"))
    return "\n".join(lines)
