"""Road-to-road distance: weighted edit distance on turning-angle tokens."""

from __future__ import annotations

import numpy as np

from frontier import _kernels
from frontier.roads.geometry import RoadGeometry, resample_polyline, turning_angles

DEFAULT_RESAMPLE_STEP = 2.0  # meters between token samples


def road_tokens(geometry: RoadGeometry, step: float = DEFAULT_RESAMPLE_STEP) -> np.ndarray:
    """Turning-angle sequence sampled at fixed arc-length intervals.

    Resampling decouples the distance from each road's raw sampling
    density; the tokens are the signed heading changes at the resampled
    points.
    """
    pts = resample_polyline(geometry.spine, geometry.cumulative_lengths, step)
    return turning_angles(pts)


def road_distance(a: RoadGeometry, b: RoadGeometry,
                  step: float = DEFAULT_RESAMPLE_STEP) -> float:
    """Edit distance between the two roads' angle-token sequences.

    Substitution costs the normalized angular difference (in [0, 1]),
    insertion and deletion cost 1; symmetric by construction.
    """
    return float(_kernels.angle_edit_distance(road_tokens(a, step), road_tokens(b, step)))
