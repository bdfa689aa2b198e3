"""
classifier > lines

Configurations of lines: concurrency, and the largest number of lines in
general position.

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

__all__ = [
    'areConcurrent',
    'commonPoint',
    'maxNonconcurrentLines',
]

from itertools import combinations
from typing import Optional, Sequence

import numpy as np

from common.exceptions import DuplicateLinesError, NumericInputError
from common.util.numeric import nullSpace, numericRank, tolerance
from projective import ProjLine, ProjPoint


def _checkLines(lines: Sequence[ProjLine], tol: float) -> None:
    if not lines:
        raise NumericInputError("Expected at least one line")
    for j, a in enumerate(lines):
        for b in lines[:j]:
            if a.isEqual(b, tol):
                raise DuplicateLinesError(f"The line {a} is given twice")


def areConcurrent(
    a: ProjLine,
    b: ProjLine,
    c: ProjLine,
    tol: Optional[float] = None,
) -> bool:
    """
    Whether three lines pass through a common point, which is when their
    dual coordinates are linearly dependent
    """
    m = np.array([a.coords, b.coords, c.coords])
    det = abs(np.linalg.det(m))
    scale = np.prod(np.linalg.norm(m, axis=1))
    return bool(det < tolerance(tol) * scale)


def commonPoint(
    lines: Sequence[ProjLine],
    tol: Optional[float] = None,
) -> Optional[ProjPoint]:
    """
    The point shared by all the lines, if there is exactly one

    ### Args:
    * `lines` (`Sequence[ProjLine]`): at least two distinct lines
    * `tol` (`float`, optional): tolerance. Defaults to the configured
      tolerance.

    ### Raises:
    * `NumericInputError`: fewer than two lines
    * `DuplicateLinesError`: two lines are proportional

    ### Returns:
    * `Optional[ProjPoint]`: common point, or `None` when the lines aren't
      concurrent
    """
    tol = tolerance(tol)
    _checkLines(lines, tol)
    if len(lines) < 2:
        raise NumericInputError("A single line has no common point")
    m = np.array([ell.coords for ell in lines])
    if numericRank(m, tol) > 2:
        return None
    return ProjPoint(nullSpace(m, tol)[0])


def _multiplePoints(
    lines: Sequence[ProjLine],
    tol: float,
) -> list[frozenset[int]]:
    """
    The sets of indices of lines meeting at each point where at least three
    of the lines meet
    """
    n = len(lines)
    found: list[frozenset[int]] = []
    for i, j in combinations(range(n), 2):
        if any(i in point and j in point for point in found):
            continue
        through = frozenset(
            [i, j] + [
                k for k in range(n)
                if k not in (i, j)
                and areConcurrent(lines[i], lines[j], lines[k], tol=tol)
            ]
        )
        if len(through) >= 3:
            found.append(through)
    return found


def _largestGeneralSubset(n: int, points: list[frozenset[int]]) -> int:
    """
    Branch and bound search for the largest subset of n lines taking at
    most two of the lines through each multiple point
    """
    constrained = sorted({line for point in points for line in point})
    member = {
        line: [k for k, point in enumerate(points) if line in point]
        for line in constrained
    }
    counts = [0] * len(points)
    best = 0

    def search(index: int, chosen: int) -> None:
        nonlocal best
        if chosen + len(constrained) - index <= best:
            return
        if index == len(constrained):
            best = chosen
            return
        line = constrained[index]
        if all(counts[k] < 2 for k in member[line]):
            for k in member[line]:
                counts[k] += 1
            search(index + 1, chosen + 1)
            for k in member[line]:
                counts[k] -= 1
        search(index + 1, chosen)

    search(0, 0)
    return n - len(constrained) + best


def maxNonconcurrentLines(
    lines: Sequence[ProjLine],
    tol: Optional[float] = None,
) -> int:
    """
    The size of the largest set of the lines in general position, meaning no
    three of them pass through one point

    This is 1 for a single line and 2 when all the lines are concurrent.
    Otherwise it is at least 3.

    Three lines are concurrent exactly when they all pass through one of the
    points where at least three lines meet, so the search only has to
    choose among the lines through those points.

    ### Args:
    * `lines` (`Sequence[ProjLine]`): pairwise distinct lines
    * `tol` (`float`, optional): tolerance. Defaults to the configured
      tolerance.

    ### Raises:
    * `NumericInputError`: no lines
    * `DuplicateLinesError`: two lines are proportional

    ### Returns:
    * `int`: largest number of lines in general position
    """
    tol = tolerance(tol)
    _checkLines(lines, tol)
    n = len(lines)
    if n <= 2:
        return n
    if numericRank(np.array([ell.coords for ell in lines]), tol) <= 2:
        return 2
    points = _multiplePoints(lines, tol)
    if not points:
        return n
    return _largestGeneralSubset(n, points)
