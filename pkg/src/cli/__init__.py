"""
cli

Batch command-line front end: reads scene files, runs the operations of the
library on them and prints reports.

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

__all__ = [
    'Scene',
    'parseScene',
    'loadScene',
    'serializeScene',
    'dumpScene',
    'main',
]

from .scene import Scene, parseScene, loadScene, serializeScene, dumpScene
from .main import main
