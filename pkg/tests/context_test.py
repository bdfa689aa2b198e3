"""
tests > context_test

Tests for loading settings into the numeric context

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

import pytest

from common.context_manager import (
    MissingContextException,
    getContext,
    resetContext,
    unsafeResetContext,
)
from common.exceptions import InvalidConfigError
from common.settings import Settings
from common.util.numeric import tolerance


def test_default_tolerance():
    assert getContext().tolerance == 1e-9
    assert tolerance() == 1e-9
    assert tolerance(1e-3) == 1e-3


def test_dotted_override():
    resetContext({"numerics.tolerance": 1e-6, "numerics.seed": 4})
    assert getContext().tolerance == 1e-6
    assert getContext().settings.get("numerics.seed") == 4


def test_invalid_override_keeps_old_context():
    resetContext({"numerics.seed": 7})
    with pytest.raises(InvalidConfigError):
        resetContext({"numerics.precision": 3})
    assert getContext().settings.get("numerics.seed") == 7


def test_settings_get_missing():
    with pytest.raises(KeyError):
        Settings().get("numerics.missing")


def test_rng_is_reproducible():
    a = getContext().rng(3).uniform()
    b = getContext().rng(3).uniform()
    c = getContext().rng(4).uniform()
    assert a == b
    assert a != c


def test_rng_follows_seed():
    a = getContext().rng(1).uniform()
    resetContext({"numerics.seed": 12})
    assert getContext().rng(1).uniform() != a


def test_missing_context():
    unsafeResetContext()
    with pytest.raises(MissingContextException):
        getContext()
    resetContext()


@pytest.mark.parametrize(
    "overrides",
    [
        {"numerics.tolerance": 0.0},
        {"numerics.tolerance": -1e-9},
        {"numerics.tolerance": "small"},
        {"numerics.seed": -1},
        {"numerics.seed": 1.5},
        {"curves.dual_samples": True},
        {"logger.watched_categories": "general"},
    ]
)
def test_invalid_values(overrides: dict):
    with pytest.raises(InvalidConfigError):
        resetContext(overrides)


def test_settings_are_iterable():
    settings = dict(Settings({"curves.guard_lines": 5}))
    assert settings["curves.guard_lines"] == 5
    assert settings["numerics.tolerance"] == 1e-9
