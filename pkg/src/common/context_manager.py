"""
common > context_manager

Contains the NumericContext class, which holds the settings used by every
operation of the library, allowing them to be replaced wholesale (for example
when the command-line front end applies its flags).

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

__all__ = [
    'NumericContext',
    'MissingContextException',
    'getContext',
    'resetContext',
    'unsafeResetContext',
]

from typing import Any, Optional

import numpy as np

from . import logger
from .settings import Settings


class NumericContext:
    """Defines the context for the entire library, holding the settings and
    the seed used for randomized guards.

    It is gettable from any location by using the getContext() method
    """

    def __init__(self, overrides: Optional[dict[str, Any]] = None) -> None:
        """Initialize the context, loading settings with the given overrides

        ### Args:
        * `overrides` (`dict`, optional): settings overrides
        """
        self.settings = Settings(overrides)
        # Ensure settings are valid
        self.settings.assert_loaded()

    @property
    def tolerance(self) -> float:
        """The tolerance used for rank, equality and unitarity decisions"""
        return self.settings.get("numerics.tolerance")

    def rng(self, salt: int = 0) -> np.random.Generator:
        """
        Returns a fresh random generator seeded from the configured seed

        Each call gives an independent generator, so that operations are
        deterministic no matter what was computed before them.

        ### Args:
        * `salt` (`int`, optional): value mixed into the seed, so that
          different operations don't share random streams. Defaults to `0`.

        ### Returns:
        * `Generator`: numpy random generator
        """
        seed = self.settings.get("numerics.seed")
        return np.random.default_rng([seed, salt])


class MissingContextException(Exception):
    """
    Raised when the context hasn't been initialized yet
    """


# The context's instance
# This should be the only non-constant global variable in the entire program,
# except for the log
_context: Optional[NumericContext] = None


def getContext() -> NumericContext:
    """Returns a reference to the numeric context

    ### Raises:
    * `MissingContextException`: when the context is `None`, indicating that
      it wasn't initialized

    ### Returns:
    * `NumericContext`: context
    """
    if _context is None:
        raise MissingContextException("Context isn't initialized")

    return _context


def resetContext(overrides: Optional[dict[str, Any]] = None) -> None:
    """Resets the context to the default settings, with the given overrides
    applied

    ### Args:
    * `overrides` (`dict`, optional): settings overrides. Defaults to `None`.

    ### Raises:
    * `InvalidConfigError`: the overrides are invalid. The previous context
      is left in place.
    """
    global _context
    _context = NumericContext(overrides)
    logger.log(
        "general",
        f"Context reset with overrides: {overrides or {}}",
        logger.verbosity.NOTE,
    )


def unsafeResetContext() -> None:
    """
    Drop the context entirely, so that code which depends on it raises a
    MissingContextException. Only used to test behavior without a context.
    """
    global _context
    _context = None


def _initContext() -> None:
    """
    Initializes the context manager for the library
    """
    global _context
    _context = NumericContext()


_initContext()
