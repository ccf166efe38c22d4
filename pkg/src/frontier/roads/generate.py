"""Seed road generation and the road mutation operator."""

from __future__ import annotations

import math

import numpy as np

from frontier.roads.geometry import catmull_rom_interpolate
from frontier.roads.model import DEFAULT_BBOX_SIDE, DEFAULT_LANE_WIDTH, RoadModel
from frontier.roads.validity import validate_road

DEFAULT_NUM_CONTROL_POINTS = 10
DEFAULT_CONTROL_STEP = 25.0  # meters between consecutive control points
MAX_TURN = math.pi / 3  # heading change bound between consecutive steps


def generate_seed_road(rng: np.random.Generator,
                       num_control_points: int = DEFAULT_NUM_CONTROL_POINTS,
                       step: float = DEFAULT_CONTROL_STEP,
                       lane_width: float = DEFAULT_LANE_WIDTH,
                       bbox_side: float = DEFAULT_BBOX_SIDE,
                       samples_per_segment: int = 20,
                       max_attempts: int = 200) -> RoadModel:
    """Random road: first control point at the origin, each next one a
    fixed step away at a heading within +-60 degrees of the previous
    heading. Regenerates until the road passes validation."""
    if num_control_points < 4:
        raise ValueError("need at least 4 control points")
    if step <= 0:
        raise ValueError("step must be positive")
    for _ in range(max_attempts):
        pts = np.empty((num_control_points, 2))
        pts[0] = (0.0, 0.0)
        heading = 0.0
        for i in range(1, num_control_points):
            heading += rng.uniform(-MAX_TURN, MAX_TURN)
            pts[i, 0] = pts[i - 1, 0] + step * math.cos(heading)
            pts[i, 1] = pts[i - 1, 1] + step * math.sin(heading)
        model = RoadModel(pts, lane_width, bbox_side)
        try:
            geometry = catmull_rom_interpolate(model, samples_per_segment)
        except ValueError:
            continue
        if validate_road(model, geometry):
            return model
    raise RuntimeError(f"no valid seed road in {max_attempts} attempts")


def mutate_road(model: RoadModel, rng: np.random.Generator,
                lb: float, ub: float) -> RoadModel:
    """Displace one control point (never the fixed first one) by a vector
    with magnitude uniform in [lb, ub] and uniform direction.

    The result may violate the road constraints; the caller re-validates
    and retries."""
    pts = np.array(model.control_points)
    idx = 1 + int(rng.integers(pts.shape[0] - 1))
    direction = rng.uniform(0.0, 2.0 * math.pi)
    magnitude = rng.uniform(lb, ub)
    pts[idx, 0] += magnitude * math.cos(direction)
    pts[idx, 1] += magnitude * math.sin(direction)
    return model.with_control_points(pts)
