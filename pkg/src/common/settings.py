"""
common > settings

Contains a wrapper class for the settings used by numeric operations, which
merges overrides into the defaults and checks that every value is usable.

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

__all__ = [
    'Settings'
]

from copy import deepcopy
from typing import Any, Iterator, Optional

from .util import dict_tools
from . import default_config as d
from .exceptions import InvalidConfigError

# Settings that may be zero rather than strictly positive
NONNEGATIVE = {
    "numerics.seed",
    "numerics.newton_steps",
}


def _flatten(settings: dict, prefix: str = "") -> Iterator[tuple[str, Any]]:
    for key, value in settings.items():
        if isinstance(value, dict):
            yield from _flatten(value, f"{prefix}{key}.")
        else:
            yield f"{prefix}{key}", value


def _checkRange(key: str, value: Any) -> None:
    """
    Check that a numeric setting is in range. Types are already checked
    when merging.

    ### Raises:
    * `InvalidConfigError`: negative, or not positive when it must be
    """
    if isinstance(value, list):
        return
    if key in NONNEGATIVE:
        if value < 0:
            raise InvalidConfigError(
                f"Setting '{key}' must be nonnegative, not {value}")
    elif key.startswith(("numerics.", "curves.", "families.")) \
            and not value > 0:
        raise InvalidConfigError(
            f"Setting '{key}' must be positive, not {value}")


class Settings:
    """
    A container for the configuration of the library

    Used to avoid having to deal with the awfulness of pulling things out of
    dictionaries. Overrides (for example from command-line flags) are merged
    into the defaults, then numeric settings are checked for range.
    """

    def __init__(self, overrides: Optional[dict[str, Any]] = None) -> None:
        """
        Initialize and load the settings

        ### Args:
        * `overrides` (`dict`, optional): overrides for the default settings.
          Dotted short-hand keys such as `"numerics.tolerance"` are accepted.
        """
        self.__error_msg: Optional[str] = None
        self._settings_dict = deepcopy(d.CONFIG)
        try:
            config = dict_tools.expandDictShorthand(overrides or {})
            merged = dict_tools.recursiveMergeDictionaries(d.CONFIG, config)
            for key, value in _flatten(merged):
                _checkRange(key, value)
        except (KeyError, TypeError, InvalidConfigError) as e:
            self.__error_msg = str(e)
            return
        self._settings_dict = merged

    def assert_loaded(self) -> None:
        """
        Raise an exception if the overrides were rejected

        ### Raises:
        * `InvalidConfigError`: invalid config
        """
        if self.__error_msg is not None:
            raise InvalidConfigError(self.__error_msg)

    def get(self, key: str) -> Any:
        """
        Get an entry in the settings

        ### Args:
        * `key` (`str`): dotted key, such as `"curves.merge_radius"`

        ### Raises:
        * `KeyError`: Unable to find settings

        ### Returns:
        * `Any`: Value
        """
        value: Any = self._settings_dict
        for part in key.split('.'):
            if not isinstance(value, dict) or part not in value:
                raise KeyError(f"Unable to find setting at '{key}'")
            value = value[part]
        return value

    def __iter__(self) -> Iterator[tuple[str, Any]]:
        """Dotted keys and values of every setting"""
        return _flatten(self._settings_dict)
