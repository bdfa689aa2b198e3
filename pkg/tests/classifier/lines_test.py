"""
tests > classifier > lines_test

Tests for configurations of lines

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

import pytest

from classifier import areConcurrent, commonPoint, maxNonconcurrentLines
from common.exceptions import DuplicateLinesError, NumericInputError
from projective import ProjLine, ProjPoint
from tests.helpers.generators import randomLine, rng

X = ProjLine([1, 0, 0])
Y = ProjLine([0, 1, 0])
Z = ProjLine([0, 0, 1])


def test_concurrent():
    assert areConcurrent(Y, Z, ProjLine([0, 1, 2j]))
    assert not areConcurrent(X, Y, Z)


@pytest.mark.parametrize(
    ("lines", "expected"),
    [
        ([X], 1),
        ([X, Y], 2),
        ([Y, Z, ProjLine([0, 1, 1])], 2),
        ([X, Y, Z], 3),
        ([X, Y, Z, ProjLine([1, 1, 0])], 3),
        ([X, Y, Z, ProjLine([1, 1, 1])], 4),
        ([X, Y, ProjLine([1, 1, 0]), ProjLine([1, -1, 0])], 2),
        (
            [
                X, Y, Z,
                ProjLine([1, 1, 0]), ProjLine([0, 1, 1]), ProjLine([1, 0, 1]),
            ],
            4,
        ),
    ]
)
def test_max_nonconcurrent(lines: list, expected: int):
    assert maxNonconcurrentLines(lines) == expected


def test_random_lines_are_in_general_position():
    gen = rng(130)
    lines = [randomLine(gen) for _ in range(6)]
    assert maxNonconcurrentLines(lines) == 6


def test_large_pencil():
    lines = [ProjLine([0, 1, k]) for k in range(40)]
    assert maxNonconcurrentLines(lines) == 2


def test_two_pencils_and_general_lines():
    gen = rng(131)
    # Six lines through [1:0:0] and six through [0:1:0]
    lines = [ProjLine([0, 1, k]) for k in range(1, 7)]
    lines += [ProjLine([1, 0, k]) for k in range(1, 7)]
    lines += [randomLine(gen) for _ in range(3)]
    assert maxNonconcurrentLines(lines) == 7


def test_common_point():
    point = commonPoint([Y, Z, ProjLine([0, 1, 1])])
    assert point == ProjPoint([1, 0, 0])
    assert commonPoint([X, Y, Z]) is None
    assert commonPoint([X, Y]) == ProjPoint([0, 0, 1])


def test_duplicate_lines():
    with pytest.raises(DuplicateLinesError):
        maxNonconcurrentLines([X, Y, ProjLine([3, 0, 0])])


def test_no_lines():
    with pytest.raises(NumericInputError):
        maxNonconcurrentLines([])
    with pytest.raises(NumericInputError):
        commonPoint([X])
