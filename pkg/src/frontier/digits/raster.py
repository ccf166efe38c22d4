"""Rasterization of digit models and the pixel-space distance."""

from __future__ import annotations

import numpy as np

from frontier import _kernels
from frontier.digits.model import CANVAS, DigitModel

FLATTEN_TOL = 0.05  # canvas units of allowed chord deviation
SUBSAMPLES = 8  # per pixel axis; 64 coverage samples per pixel


def flatten_cubic(p0, c1, c2, p3, tol: float = FLATTEN_TOL, depth: int = 0) -> list:
    """Polyline approximation of one cubic segment (excludes the start point).

    De Casteljau subdivision until both control points sit within tol of
    the chord.
    """
    chord = p3 - p0
    clen2 = chord[0] * chord[0] + chord[1] * chord[1]
    if clen2 > 1e-24:
        d1 = abs(chord[0] * (c1[1] - p0[1]) - chord[1] * (c1[0] - p0[0]))
        d2 = abs(chord[0] * (c2[1] - p0[1]) - chord[1] * (c2[0] - p0[0]))
        flat = max(d1, d2) ** 2 <= tol * tol * clen2
    else:
        # degenerate chord (loop): flat only once the whole hull is tiny
        flat = max(abs(c1 - p0).max(), abs(c2 - p0).max()) <= tol
    if flat or depth >= 16:
        return [p3]
    m01 = (p0 + c1) * 0.5
    m12 = (c1 + c2) * 0.5
    m23 = (c2 + p3) * 0.5
    m012 = (m01 + m12) * 0.5
    m123 = (m12 + m23) * 0.5
    mid = (m012 + m123) * 0.5
    return (flatten_cubic(p0, m01, m012, mid, tol, depth + 1)
            + flatten_cubic(mid, m123, m23, p3, tol, depth + 1))


def outline_edges(model: DigitModel, tol: float = FLATTEN_TOL) -> np.ndarray:
    """Flattened outline of every subpath as an (n, 4) segment array."""
    edges = []
    for sp in model.subpaths:
        points = [sp[0, 0]]
        for seg in sp:
            points.extend(flatten_cubic(seg[0], seg[1], seg[2], seg[3], tol))
        pts = np.asarray(points)
        e = np.empty((pts.shape[0] - 1, 4))
        e[:, 0:2] = pts[:-1]
        e[:, 2:4] = pts[1:]
        edges.append(e)
    if not edges:
        return np.empty((0, 4))
    return np.concatenate(edges, axis=0)


def rasterize(model: DigitModel, size: int = CANVAS,
              subsamples: int = SUBSAMPLES, tol: float = FLATTEN_TOL) -> np.ndarray:
    """Grayscale raster of the model: per pixel, 255 times the covered
    fraction under the even-odd fill rule, rounded half-up.

    Coverage comes from a regular subsamples x subsamples grid per pixel
    against the flattened outline; geometry outside the canvas simply
    contributes nothing.
    """
    edges = outline_edges(model, tol)
    counts = _kernels.coverage_counts(edges, size, subsamples)
    total = subsamples * subsamples
    return np.floor(255.0 * counts / total + 0.5).astype(np.uint8)


def pixel_distance(a: np.ndarray, b: np.ndarray) -> float:
    """Euclidean distance between two rasters, values taken as reals."""
    if a.shape != b.shape:
        raise ValueError("rasters must have the same shape")
    diff = a.astype(np.float64) - b.astype(np.float64)
    return float(np.sqrt((diff * diff).sum()))
