"""Domain constraints for roads: distinct endpoints, bounding box, no
self-intersection or near-overlap of the buffered lane polygon."""

from __future__ import annotations

import numpy as np

from frontier.roads.geometry import RoadGeometry
from frontier.roads.model import RoadModel


def segments_properly_cross(p1, p2, q1, q2) -> bool:
    """Whether segment p1-p2 intersects segment q1-q2 (touching counts)."""

    def orient(a, b, c):
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])

    def on_segment(a, b, c):
        return (min(a[0], b[0]) <= c[0] <= max(a[0], b[0])
                and min(a[1], b[1]) <= c[1] <= max(a[1], b[1]))

    d1 = orient(q1, q2, p1)
    d2 = orient(q1, q2, p2)
    d3 = orient(p1, p2, q1)
    d4 = orient(p1, p2, q2)
    if ((d1 > 0) != (d2 > 0)) and ((d3 > 0) != (d4 > 0)) and d1 != 0 and d2 != 0 \
            and d3 != 0 and d4 != 0:
        return True
    if d1 == 0 and on_segment(q1, q2, p1):
        return True
    if d2 == 0 and on_segment(q1, q2, p2):
        return True
    if d3 == 0 and on_segment(p1, p2, q1):
        return True
    if d4 == 0 and on_segment(p1, p2, q2):
        return True
    return False


def polyline_self_intersects(spine: np.ndarray) -> bool:
    """Any intersection between non-adjacent segments of the polyline.

    Vectorized all-pairs orientation test; adjacent segments (sharing an
    endpoint) are exempt.
    """
    a = spine[:-1]
    b = spine[1:]
    n = a.shape[0]
    if n < 3:
        return False
    ax, ay = a[:, 0], a[:, 1]
    bx, by = b[:, 0], b[:, 1]

    def orient(px, py, qx, qy, rx, ry):
        return (qx - px) * (ry - py) - (qy - py) * (rx - px)

    # d1[i, j]: orientation of segment j's start wrt segment i, etc.
    d1 = orient(ax[:, None], ay[:, None], bx[:, None], by[:, None], ax[None, :], ay[None, :])
    d2 = orient(ax[:, None], ay[:, None], bx[:, None], by[:, None], bx[None, :], by[None, :])
    d3 = orient(ax[None, :], ay[None, :], bx[None, :], by[None, :], ax[:, None], ay[:, None])
    d4 = orient(ax[None, :], ay[None, :], bx[None, :], by[None, :], bx[:, None], by[:, None])
    proper = ((d1 > 0) != (d2 > 0)) & ((d3 > 0) != (d4 > 0)) \
        & (d1 != 0) & (d2 != 0) & (d3 != 0) & (d4 != 0)

    def on_seg(px, py, qx, qy, rx, ry):
        return (np.minimum(px, qx) <= rx) & (rx <= np.maximum(px, qx)) \
            & (np.minimum(py, qy) <= ry) & (ry <= np.maximum(py, qy))

    touch = ((d1 == 0) & on_seg(ax[:, None], ay[:, None], bx[:, None], by[:, None],
                                ax[None, :], ay[None, :])) \
        | ((d2 == 0) & on_seg(ax[:, None], ay[:, None], bx[:, None], by[:, None],
                              bx[None, :], by[None, :])) \
        | ((d3 == 0) & on_seg(ax[None, :], ay[None, :], bx[None, :], by[None, :],
                              ax[:, None], ay[:, None])) \
        | ((d4 == 0) & on_seg(ax[None, :], ay[None, :], bx[None, :], by[None, :],
                              bx[:, None], by[:, None]))
    hits = proper | touch
    i_idx, j_idx = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    nonadjacent = np.abs(i_idx - j_idx) > 1
    return bool(np.any(hits & nonadjacent))


def overlapping_passes(spine: np.ndarray, cum: np.ndarray, clearance: float) -> bool:
    """Whether two spine points far apart along the arc come closer than
    clearance in the plane (the buffered lanes would overlap there)."""
    d2 = ((spine[:, None, :] - spine[None, :, :]) ** 2).sum(axis=2)
    arc = np.abs(cum[:, None] - cum[None, :])
    mask = arc > clearance
    return bool(np.any(mask & (d2 < clearance * clearance)))


def validate_road(model: RoadModel, geometry: RoadGeometry) -> bool:
    """All domain constraints on the rendered road.

    (1) start and end of the driving task differ (by more than the lane
    width), (2) the spine buffered by lane_width fits inside an
    axis-aligned square with side bbox_side, (3) the road does not
    self-intersect or fold back onto itself.
    """
    spine = geometry.spine
    w = model.lane_width
    start_end = spine[-1] - spine[0]
    if float(np.sqrt((start_end ** 2).sum())) <= w:
        return False
    extent = spine.max(axis=0) - spine.min(axis=0) + 2.0 * w
    if float(extent.max()) > model.bbox_side:
        return False
    if polyline_self_intersects(spine):
        return False
    if overlapping_passes(spine, geometry.cumulative_lengths, 2.0 * w):
        return False
    return True
