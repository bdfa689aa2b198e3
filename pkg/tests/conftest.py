"""
tests > conftest

Fixtures shared by every test

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

import pytest

from common.context_manager import resetContext


@pytest.fixture(autouse=True)
def defaultContext():
    """Start every test with the default settings"""
    resetContext()
    yield
    resetContext()
