"""
common

Contains common code required to configure the library, log what it does and
report errors.

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

__all__ = [
    'exceptions',
    'log',
    'verbosity',
    'getContext',
    'resetContext',
    'unsafeResetContext',
]


from . import exceptions
from .logger import log, verbosity

from .context_manager import (
    getContext,
    resetContext,
    unsafeResetContext,
)
