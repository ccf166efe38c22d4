"""Spine interpolation and curvature analysis for road models.

The spine is a centripetal Catmull-Rom spline through the control points,
evaluated with the Barry-Goldman pyramidal recursion. Only interior
segments are rendered: with n control points the drivable spine runs from
control point 1 to control point n-2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from frontier.roads.model import RoadModel

DEFAULT_SAMPLES_PER_SEGMENT = 20


@dataclass
class RoadGeometry:
    """Interpolated center line with derived headings and arc lengths."""

    spine: np.ndarray  # (m, 2) points, meters
    segment_headings: np.ndarray  # (m-1,) radians
    cumulative_lengths: np.ndarray  # (m,), cumulative_lengths[0] == 0

    @property
    def length(self) -> float:
        return float(self.cumulative_lengths[-1])


def _knots(p0, p1, p2, p3):
    """Centripetal (alpha = 0.5) knot sequence for one segment."""
    t0 = 0.0
    t1 = t0 + np.sum((p1 - p0) ** 2) ** 0.25
    t2 = t1 + np.sum((p2 - p1) ** 2) ** 0.25
    t3 = t2 + np.sum((p3 - p2) ** 2) ** 0.25
    return t0, t1, t2, t3


def barry_goldman(p0, p1, p2, p3, u):
    """Evaluate the segment between p1 and p2 at normalized parameters u.

    u is an array in [0, 1] mapped affinely onto the centripetal knot
    interval [t1, t2]; the pyramid of linear interpolations is the
    Barry-Goldman evaluation of the Catmull-Rom spline.
    """
    p0, p1, p2, p3 = (np.asarray(p, dtype=np.float64) for p in (p0, p1, p2, p3))
    t0, t1, t2, t3 = _knots(p0, p1, p2, p3)
    t = (t1 + (t2 - t1) * np.asarray(u, dtype=np.float64))[:, None]
    a1 = (t1 - t) / (t1 - t0) * p0 + (t - t0) / (t1 - t0) * p1
    a2 = (t2 - t) / (t2 - t1) * p1 + (t - t1) / (t2 - t1) * p2
    a3 = (t3 - t) / (t3 - t2) * p2 + (t - t2) / (t3 - t2) * p3
    b1 = (t2 - t) / (t2 - t0) * a1 + (t - t0) / (t2 - t0) * a2
    b2 = (t3 - t) / (t3 - t1) * a2 + (t - t1) / (t3 - t1) * a3
    return (t2 - t) / (t2 - t1) * b1 + (t - t1) / (t2 - t1) * b2


def catmull_rom_interpolate(model: RoadModel,
                            samples_per_segment: int = DEFAULT_SAMPLES_PER_SEGMENT) -> RoadGeometry:
    """Interpolate the spine: samples_per_segment points per interior
    segment plus the final control point, passing through every interior
    control point."""
    if samples_per_segment < 1:
        raise ValueError("samples_per_segment must be >= 1")
    pts = model.control_points
    n = pts.shape[0]
    u = np.arange(samples_per_segment) / samples_per_segment
    pieces = []
    for i in range(1, n - 2):
        pieces.append(barry_goldman(pts[i - 1], pts[i], pts[i + 1], pts[i + 2], u))
    pieces.append(pts[n - 2][None, :])
    spine = np.concatenate(pieces, axis=0)
    diffs = np.diff(spine, axis=0)
    seg_lens = np.sqrt((diffs ** 2).sum(axis=1))
    if np.any(seg_lens == 0.0):
        raise ValueError("degenerate spine: coincident consecutive points")
    headings = np.arctan2(diffs[:, 1], diffs[:, 0])
    cum = np.concatenate(([0.0], np.cumsum(seg_lens)))
    return RoadGeometry(spine=spine, segment_headings=headings, cumulative_lengths=cum)


def resample_polyline(spine: np.ndarray, cum: np.ndarray, step: float) -> np.ndarray:
    """Points at fixed arc-length intervals along a polyline."""
    total = cum[-1]
    targets = np.arange(int(total / step) + 1) * step
    idx = np.searchsorted(cum, targets, side="right") - 1
    idx = np.clip(idx, 0, len(cum) - 2)
    seg = cum[idx + 1] - cum[idx]
    frac = (targets - cum[idx]) / seg
    return spine[idx] + frac[:, None] * (spine[idx + 1] - spine[idx])


def turning_angles(points: np.ndarray) -> np.ndarray:
    """Signed heading change at each interior point, wrapped to (-pi, pi]."""
    v = np.diff(points, axis=0)
    h = np.arctan2(v[:, 1], v[:, 0])
    d = np.diff(h)
    return np.arctan2(np.sin(d), np.cos(d))


CURVATURE_SPAN = 10.0  # meters of arc covered by each curvature triple
COLLINEAR_TOL = 1e-6


def min_curvature_radius(geometry: RoadGeometry) -> float:
    """Smallest circumradius over spine point triples spanning ~10 m of arc.

    Returns +inf when every triple is collinear within tolerance (the
    perpendicular deviation of the middle point from the chord).
    """
    spine = geometry.spine
    n = spine.shape[0]
    if n < 3:
        raise ValueError("need at least 3 spine points")
    spacing = geometry.length / (n - 1)
    w = int(round(CURVATURE_SPAN / 2.0 / spacing)) if spacing > 0 else 1
    w = max(1, min(w, (n - 1) // 2))
    a = spine[: n - 2 * w]
    b = spine[w: n - w]
    c = spine[2 * w:]
    ab = b - a
    bc = c - b
    ac = c - a
    cross = ab[:, 0] * ac[:, 1] - ab[:, 1] * ac[:, 0]
    len_ab = np.sqrt((ab ** 2).sum(axis=1))
    len_bc = np.sqrt((bc ** 2).sum(axis=1))
    len_ac = np.sqrt((ac ** 2).sum(axis=1))
    deviation = np.abs(cross) / np.maximum(len_ac, 1e-300)
    curved = deviation >= COLLINEAR_TOL
    if not np.any(curved):
        return float("inf")
    radii = (len_ab[curved] * len_bc[curved] * len_ac[curved]) / (2.0 * np.abs(cross[curved]))
    return float(radii.min())
