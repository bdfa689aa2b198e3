"""
common > logger > hierarchy

Contains a formal definition of the logging hierarchy, used to verify
logging into particular categories

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

HIERARCHY = {
    "projective": {
        "eigen": {},
        "limit": {},
        "projection": {},
    },
    "curves": {
        "intersection": {},
        "singular": {},
        "inflection": {},
        "dual": {},
        "invariance": {},
    },
    "families": {
        "normalize": {},
    },
    "classifier": {
        "orbit": {},
        "component": {},
        "census": {},
        "report": {},
    },
    "cli": {
        "scene": {},
        "command": {},
    },
    "general": {}
}


def isValidCategory(category: str) -> bool:
    """
    Returns whether the given dotted category exists in the hierarchy

    ### Args:
    * `category` (`str`): category, eg `"curves.singular"`

    ### Returns:
    * `bool`: whether it is valid
    """
    level = HIERARCHY
    for part in category.split('.'):
        if part not in level:
            return False
        level = level[part]
    return True
