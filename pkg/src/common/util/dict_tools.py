"""
common > util > dict_tools

Contains utility functions for working with the nested dictionaries used for
configuration.

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

from typing import Any


def recursiveMergeDictionaries(
    ref: dict, override: dict, path: str = ''
) -> dict:
    """
    Merge the contents of two nested dictionaries, so that values in the
    override replace those in the reference

    Only keys present in the reference may be overridden, and overriding
    values must have the same type as the reference value. Integers are
    accepted where floats are expected, since tolerances are often written
    as whole numbers on the command line.

    ### Args:
    * `ref` (`dict`): reference dictionary
    * `override` (`dict`): override dictionary
    * `path` (`str`, optional): path of current setting, used to give
      meaningful exception info. Defaults to ''.

    ### Raises:
    * `KeyError`: unknown settings value
    * `TypeError`: a category was given a value, or a value has the wrong
      type

    ### Returns:
    * `dict`: new dictionary representing the merged results
    """
    ERROR_HEADER = "Unable to load settings"
    # Nested contents are copied when we recurse, so a shallow copy suffices
    new = ref.copy()

    for key, value in override.items():
        key_path = key if path == '' else f"{path}.{key}"
        if key not in ref:
            raise KeyError(f"{ERROR_HEADER}: `{key_path}` is "
                           f"not a valid settings value")
        ref_value = ref[key]

        if type(ref_value) is dict:
            if type(value) is not dict:
                raise TypeError(f"{ERROR_HEADER}: expected a category at "
                                f"`{key_path}`, not a value")
            new[key] = recursiveMergeDictionaries(ref_value, value, key_path)
            continue

        # bool is a subclass of int, so reject it explicitly for numbers
        if isinstance(ref_value, float) and isinstance(value, int) \
                and not isinstance(value, bool):
            value = float(value)
        if isinstance(value, bool) != isinstance(ref_value, bool) \
                or not isinstance(value, type(ref_value)):
            raise TypeError(f"{ERROR_HEADER}: expected a value of type "
                            f"{type(ref_value).__name__} for settings value "
                            f"at `{key_path}`")
        new[key] = value

    return new


def expandDictShorthand(d: dict[str, Any], path: str = '') -> dict:
    """
    Recursively expands dotted short-hand keys

    For example,
    ```py
    {"numerics.tolerance": 1e-8, "numerics.seed": 3}
    ```
    would expand to
    ```py
    {"numerics": {"tolerance": 1e-8, "seed": 3}}
    ```

    ### Args:
    * `d` (`dict`): dictionary to expand
    * `path` (`str`, optional): path string to give meaningful exceptions.
      Defaults to ''.

    ### Raises:
    * `KeyError`: duplicate key

    ### Returns:
    * `dict`: new dictionary that is expanded
    """
    new: dict[str, Any] = {}

    for key, value in d.items():
        full_key = f"{path}.{key}" if path else key
        if isinstance(value, dict):
            value = expandDictShorthand(value, full_key)
        target = new
        *parents, last = key.split('.')
        for parent in parents:
            target = target.setdefault(parent, {})
            if not isinstance(target, dict):
                raise KeyError(f"Duplicate key at {full_key}")
        if last in target:
            if isinstance(target[last], dict) and isinstance(value, dict):
                target[last] = {**target[last], **value}
                continue
            raise KeyError(f"Duplicate key at {full_key}")
        target[last] = value

    return new
