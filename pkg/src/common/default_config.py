"""
common > default_config

Stores the default configuration for the library. Overrides given to the
context (for example from command-line flags) replace settings found here.

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""

from .logger import verbosity

CONFIG = {
    # Settings shared by all numeric decisions
    "numerics": {
        # The tolerance used for every rank, equality and unitarity decision
        "tolerance": 1e-9,
        # Eigenvalues closer than this (relative to the norm of the matrix)
        # are treated as a single repeated eigenvalue
        "eigen_cluster_radius": 1e-3,
        # Number of Newton steps used to polish simple eigenvalues
        "newton_steps": 2,
        # Seed for randomized guards and generic coordinate changes, so that
        # results are reproducible
        "seed": 0,
    },
    # Settings used by the plane curve machinery
    "curves": {
        # Roots of a restricted binary form closer than this are treated as
        # one root whose multiplicity is the size of the cluster
        "cluster_radius": 1e-6,
        # Clusters closer than this may still be merged, if the merged root
        # passes the derivative test below
        "merge_radius": 1e-3,
        # Relative size of the derivatives at a merged root below which the
        # merge is accepted
        "multiplicity_tol": 1e-10,
        # Relative gradient size below which a point is treated as singular
        "gradient_tol": 1e-7,
        # Relative singular value below which the tangent cone of a singular
        # point is considered to lose rank
        "cone_rank_tol": 1e-5,
        # Number of sampled dual points used to implicitize a dual curve
        "dual_samples": 16,
        # Relative residual below which an implicit dual curve is accepted
        "dual_residual": 1e-7,
        # Number of random lines used by the repeated factor guard
        "guard_lines": 3,
        # Relative size of a polynomial along a line below which the line is
        # treated as a component
        "factor_residual": 1e-7,
        # How many generic coordinate changes to try when intersecting curves
        "intersection_retries": 3,
    },
    # Settings used when normalizing curves to the canonical models
    "families": {
        # How many random lines to try when choosing the extra frame point of
        # a cuspidal cubic
        "frame_retries": 8,
        # Relative residual a normalizing transform must achieve
        "normalize_residual": 1e-7,
    },
    # Logging settings
    "logger": {
        # Verbosity for which full details will be printed to the console when
        # it is logged.
        "critical_verbosity": verbosity.ERROR,
        # Maximum verbosity for which all logged messages will be printed
        "max_verbosity": verbosity.WARNING,
        # Categories to watch, meaning they will be printed, even if a lower
        # verbosity is used. For details on available categories, refer to
        # common/logger/log_hierarchy.py.
        "watched_categories": [
            "general"
        ],
        # Maximum verbosity for which watched categories of logged messages
        # will be printed
        "max_watched_verbosity": verbosity.INFO,
        # Verbosity levels above this will be discarded entirely by the
        # logger
        "discard_verbosity": verbosity.NOTE,
    },
}
