#!/usr/bin/env python3
"""Regenerate the shipped digit corpus (src/frontier/digits/data/*.json).

Each digit is drawn as one or more skeleton strokes on the 28x28 canvas
(y down), expanded to a filled outline by buffering, and the resulting
rings are fitted with closed Catmull-Rom cubics so the models consist of
smooth Bezier subpaths. Jittered variants of the same skeletons provide
the classifier training samples and the digit-5 seed pool.

Dev-time script: needs shapely, which the package itself does not.
Deterministic (fixed seeds); run from the repo root:

    python tools/make_digit_corpus.py
"""

import json
import math
import sys
from pathlib import Path

import numpy as np
from shapely.geometry import LinearRing, LineString, MultiPolygon, Polygon
from shapely.ops import unary_union

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from frontier.digits.classifier import classifier_preset, classify_margin  # noqa: E402
from frontier.digits.model import DigitModel  # noqa: E402
from frontier.digits.raster import rasterize  # noqa: E402
from frontier.roads.geometry import barry_goldman  # noqa: E402

STROKE_RADIUS = 1.35
RING_SPACING = 1.6  # target arc spacing of ring points before curve fitting
SIMPLIFY_TOL = 0.12
CENTER = np.array([14.0, 14.0])


def ellipse(cx, cy, rx, ry, n=28):
    a = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
    return np.stack([cx + rx * np.cos(a), cy + ry * np.sin(a)], axis=1)


def smooth_stroke(keypoints, samples_per_segment=8):
    """Centripetal Catmull-Rom polyline through the keypoints."""
    pts = np.asarray(keypoints, dtype=np.float64)
    if pts.shape[0] == 2:
        return pts
    padded = np.concatenate([
        (2 * pts[0] - pts[1])[None], pts, (2 * pts[-1] - pts[-2])[None]])
    u = np.arange(samples_per_segment) / samples_per_segment
    pieces = []
    for i in range(1, padded.shape[0] - 2):
        pieces.append(barry_goldman(padded[i - 1], padded[i],
                                    padded[i + 1], padded[i + 2], u))
    pieces.append(pts[-1][None])
    return np.concatenate(pieces, axis=0)


# Skeletons: ("open", keypoints) strokes or ("ring", keypoints)
# closed loops. Multiple strokes per digit are unioned after buffering.
SKELETONS = {
    0: [("ring", ellipse(14.0, 14.0, 4.9, 7.9))],
    1: [("open", [(11.6, 8.6), (14.4, 5.2), (14.4, 23.0)])],
    2: [("open", [(9.8, 8.6), (12.0, 5.8), (15.8, 5.4), (18.2, 8.0),
                  (17.4, 11.8), (13.4, 15.6), (9.6, 19.6), (9.2, 22.2),
                  (18.8, 22.2)])],
    3: [("open", [(10.0, 6.8), (14.2, 5.2), (17.8, 7.8), (16.2, 11.6),
                  (13.2, 13.2), (16.6, 14.6), (18.2, 18.4), (14.6, 22.4),
                  (9.8, 21.0)])],
    4: [("open", [(16.4, 4.8), (8.4, 16.6), (20.2, 16.6)]),
        ("open", [(16.4, 9.6), (16.4, 23.4)])],
    5: [("open", [(18.2, 5.4), (10.4, 5.4), (9.8, 12.0), (13.6, 11.2),
                  (17.4, 13.6), (17.8, 18.2), (14.0, 22.4), (9.4, 20.8)])],
    6: [("open", [(16.6, 4.8), (12.6, 9.2), (10.4, 14.4), (10.2, 18.6),
                  (12.8, 22.2), (16.6, 20.4), (17.4, 16.4), (14.2, 13.8),
                  (10.8, 15.6)])],
    7: [("open", [(9.0, 5.6), (19.0, 5.6), (15.6, 12.6), (12.8, 23.2)])],
    8: [("ring", ellipse(14.0, 9.4, 3.9, 3.9)),
        ("ring", ellipse(14.0, 18.2, 4.8, 4.8))],
    9: [("open", [(17.4, 9.4), (15.0, 5.8), (11.0, 7.2), (10.6, 11.4),
                  (13.8, 13.4), (17.0, 11.4), (17.4, 9.4), (17.2, 15.2),
                  (15.2, 23.0)])],
}


def jitter(points, rng, noise=0.45, rot=0.10, scale=0.06, shift=0.8):
    """Random similarity transform plus per-point noise, about the canvas center."""
    pts = np.asarray(points, dtype=np.float64)
    theta = rng.uniform(-rot, rot)
    s = 1.0 + rng.uniform(-scale, scale)
    c, sn = math.cos(theta), math.sin(theta)
    rotm = np.array([[c, -sn], [sn, c]])
    out = (pts - CENTER) @ rotm.T * s + CENTER
    out = out + rng.uniform(-shift, shift, size=2)
    out = out + rng.normal(0.0, noise, size=pts.shape)
    return out


def resample_ring(coords, spacing=RING_SPACING):
    pts = np.asarray(coords, dtype=np.float64)
    if np.allclose(pts[0], pts[-1]):
        pts = pts[:-1]
    closed = np.concatenate([pts, pts[:1]])
    seg = np.sqrt((np.diff(closed, axis=0) ** 2).sum(axis=1))
    cum = np.concatenate([[0.0], np.cumsum(seg)])
    total = cum[-1]
    n = max(8, int(round(total / spacing)))
    targets = np.arange(n) * (total / n)
    idx = np.clip(np.searchsorted(cum, targets, side="right") - 1, 0, len(seg) - 1)
    frac = (targets - cum[idx]) / seg[idx]
    return closed[idx] + frac[:, None] * (closed[idx + 1] - closed[idx])


def closed_curve_segments(ring):
    """Closed uniform Catmull-Rom through the ring points as cubic segments."""
    p = np.asarray(ring, dtype=np.float64)
    n = p.shape[0]
    tangents = 0.5 * (np.roll(p, -1, axis=0) - np.roll(p, 1, axis=0))
    segs = np.empty((n, 4, 2))
    for i in range(n):
        j = (i + 1) % n
        segs[i, 0] = p[i]
        segs[i, 1] = p[i] + tangents[i] / 3.0
        segs[i, 2] = p[j] - tangents[j] / 3.0
        segs[i, 3] = p[j]
    return segs


def build_model(label, rng=None) -> DigitModel:
    shapes = []
    for kind, pts in SKELETONS[label]:
        pts = np.asarray(pts, dtype=np.float64)
        if rng is not None:
            pts = jitter(pts, rng)
        if kind == "ring":
            shapes.append(LinearRing(pts).buffer(STROKE_RADIUS, quad_segs=8))
        else:
            line = smooth_stroke(pts)
            shapes.append(LineString(line).buffer(STROKE_RADIUS, quad_segs=8))
    merged = unary_union(shapes)
    polys = list(merged.geoms) if isinstance(merged, MultiPolygon) else [merged]
    subpaths = []
    for poly in polys:
        poly = poly.simplify(SIMPLIFY_TOL)
        for ring in [poly.exterior, *poly.interiors]:
            subpaths.append(closed_curve_segments(resample_ring(ring.coords)))
    return DigitModel(subpaths, label)


def main():
    out_dir = Path(__file__).resolve().parent.parent / "src" / "frontier" / "digits" / "data"
    out_dir.mkdir(parents=True, exist_ok=True)

    templates = [build_model(d) for d in range(10)]

    rng = np.random.default_rng(2024_0)
    train = []
    for d in range(10):
        for _ in range(6):
            train.append(build_model(d, rng))

    rng = np.random.default_rng(2024_1)
    seeds5 = [build_model(5, rng) for _ in range(24)]

    for name, models in (("templates", templates), ("train", train),
                         ("seeds5", seeds5)):
        path = out_dir / f"{name}.json"
        path.write_text(json.dumps([m.to_obj() for m in models]) + "\n")
        print(f"wrote {path} ({len(models)} models)")

    # sanity: classifier presets built from the train split must behave
    samples = [(m.expected_label, rasterize(m)) for m in train]
    hq = classifier_preset("hq", samples)
    lq = classifier_preset("lq", samples)
    for nm, clf in (("hq", hq), ("lq", lq)):
        tacc = np.mean([clf.predict(rasterize(m)) == m.expected_label for m in templates])
        sacc = np.mean([clf.predict(rasterize(m)) == m.expected_label for m in train])
        good5 = sum(classify_margin(rasterize(m), clf, 5) > 0 for m in seeds5)
        print(f"{nm}: template acc {tacc:.2f}, train acc {sacc:.2f}, "
              f"usable 5-seeds {good5}/{len(seeds5)}")


if __name__ == "__main__":
    main()
