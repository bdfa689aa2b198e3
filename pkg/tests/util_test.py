"""
tests > test_util

Basic tests for utility functions of the library

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

import numpy as np
import pytest

from common.exceptions import NonConvergentError
from common.util.catch_exception_decorator import catchExceptionDecorator
from common.util.dict_tools import (
    recursiveMergeDictionaries,
    expandDictShorthand
)
from common.util.numeric import (
    canonicalScale,
    formatComplex,
    linkClusters,
    nullSpace,
    numericRank,
    projectiveDistance,
)


def test_expand_dict_shorthand():
    t = {
        "a.b": 1,
        "a.c": 2,
        "b.a": 3,
        "b.c": 4
    }
    exp = {
        "a": {
            "b": 1,
            "c": 2
        },
        "b": {
            "a": 3,
            "c": 4
        }
    }
    assert expandDictShorthand(t) == exp


def test_expand_dict_shorthand_complex():
    t = {
        "a.b": 1,
        "a.c": 2,
        "b.a.d": 3,
        "b.a.e": 5,
        "b.c": 4
    }
    exp = {
        "a": {
            "b": 1,
            "c": 2
        },
        "b": {
            "a": {
                "d": 3,
                "e": 5
            },
            "c": 4
        }
    }
    assert expandDictShorthand(t) == exp


def test_recursive_merge_simple():
    ref = {
        "a": {
            "b": 1,
            "c": 2
        },
        "d": 3
    }
    over = {
        "a": {
            "b": 3
        },
        "d": 4
    }
    exp = {
        "a": {
            "b": 3,
            "c": 2
        },
        "d": 4
    }
    assert recursiveMergeDictionaries(ref, over) == exp


def test_recursive_merge_rejects_unknown_key():
    with pytest.raises(KeyError):
        recursiveMergeDictionaries({"a": 1}, {"b": 2})


def test_recursive_merge_promotes_int_to_float():
    merged = recursiveMergeDictionaries({"tol": 1e-9}, {"tol": 1})
    assert merged == {"tol": 1.0}
    assert isinstance(merged["tol"], float)


def test_recursive_merge_rejects_bool_for_number():
    with pytest.raises(TypeError):
        recursiveMergeDictionaries({"seed": 0}, {"seed": True})


def test_canonical_scale():
    arr = np.array([1, -4j, 2])
    out = canonicalScale(arr)
    assert out[1] == 1
    assert np.allclose(out, arr / -4j)


def test_projective_distance_ignores_scale():
    a = np.array([1, 2j, 3])
    assert projectiveDistance(a, (2 - 5j) * a) < 1e-15
    assert projectiveDistance(a, np.array([1, 0, 0])) > 0.5


def test_numeric_rank_and_null_space():
    m = np.array([[1, 2, 3], [2, 4, 6], [0, 0, 1]], dtype=complex)
    assert numericRank(m, 1e-9) == 2
    null = nullSpace(m, 1e-9)
    assert null.shape == (1, 3)
    assert np.allclose(m @ null[0], 0)


@pytest.mark.parametrize(
    ("z", "text"),
    [
        (2, "2"),
        (-1j, "-i"),
        (0.5 + 1.5j, "0.5+1.5i"),
        (1e-20 + 3j, "3i"),
        (1 - 1j, "1-i"),
    ]
)
def test_format_complex(z: complex, text: str):
    assert formatComplex(complex(z)) == text


def test_link_clusters_chains():
    groups = linkClusters([0, 1, 5, 2, 9], lambda a, b: abs(a - b) <= 1)
    assert groups == [[0, 1, 2], [5], [9]]


def test_catch_exception_decorator_returns_callback_value():
    @catchExceptionDecorator(NonConvergentError, lambda e: e.exit_code)
    def fail() -> int:
        raise NonConvergentError("no limit")

    assert fail() == 4


def test_catch_exception_decorator_passes_other_errors():
    @catchExceptionDecorator(NonConvergentError, lambda e: 0)
    def fail() -> int:
        raise ValueError("other")

    with pytest.raises(ValueError):
        fail()
