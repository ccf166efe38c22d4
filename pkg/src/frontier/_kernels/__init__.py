"""Kernel backend selection.

Imports the compiled extension when present, otherwise the pure-Python
fallback. Both expose the same functions with identical semantics;
BACKEND names the one in use ("native" or "python").
"""

try:
    from frontier._kernels._native import (
        BACKEND,
        angle_edit_distance,
        coverage_counts,
        drive,
    )
except ImportError:  # extension not built; use the slow path
    from frontier._kernels._fallback import (  # noqa: F401
        BACKEND,
        angle_edit_distance,
        coverage_counts,
        drive,
    )

from frontier._kernels import _fallback

__all__ = ["BACKEND", "angle_edit_distance", "coverage_counts", "drive", "_fallback"]
