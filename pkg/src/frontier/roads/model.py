"""Road input models: a Catmull-Rom spine defined by 2D control points."""

from __future__ import annotations

import itertools

import numpy as np

_uid_counter = itertools.count()

DEFAULT_LANE_WIDTH = 4.0  # meters
DEFAULT_BBOX_SIDE = 250.0  # meters


class RoadModel:
    """Ordered control points (meters) plus the lane and bounding-box sizes.

    Immutable once constructed; derived geometry is cached lazily by the
    road domain. Needs at least 4 control points (the spline renders only
    segments with a neighbour on each side) and no coincident consecutive
    points.
    """

    __slots__ = ("control_points", "lane_width", "bbox_side", "uid",
                 "_geometry", "_tokens")

    def __init__(self, control_points, lane_width: float = DEFAULT_LANE_WIDTH,
                 bbox_side: float = DEFAULT_BBOX_SIDE):
        pts = np.asarray(control_points, dtype=np.float64)
        if pts.ndim != 2 or pts.shape[1] != 2:
            raise ValueError("control_points must be an (n, 2) array")
        if pts.shape[0] < 4:
            raise ValueError("a road needs at least 4 control points")
        if not np.all(np.isfinite(pts)):
            raise ValueError("control points must be finite")
        if np.any(np.all(pts[1:] == pts[:-1], axis=1)):
            raise ValueError("consecutive control points must be distinct")
        if lane_width <= 0 or bbox_side <= 0:
            raise ValueError("lane_width and bbox_side must be positive")
        pts.setflags(write=False)
        self.control_points = pts
        self.lane_width = float(lane_width)
        self.bbox_side = float(bbox_side)
        self.uid = next(_uid_counter)
        self._geometry = None
        self._tokens = None

    def __repr__(self):
        return (f"RoadModel({self.control_points.shape[0]} control points, "
                f"lane_width={self.lane_width}, bbox_side={self.bbox_side})")

    def with_control_points(self, control_points) -> "RoadModel":
        return RoadModel(control_points, self.lane_width, self.bbox_side)

    def to_obj(self) -> dict:
        return {
            "control_points": [[float(x), float(y)] for x, y in self.control_points],
            "lane_width": self.lane_width,
            "bbox_side": self.bbox_side,
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "RoadModel":
        return cls(obj["control_points"], obj["lane_width"], obj["bbox_side"])
