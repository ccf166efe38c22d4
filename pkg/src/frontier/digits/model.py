"""Vector digit models: closed paths of cubic Bezier segments on a 28x28
canvas, plus the label the classifier is expected to assign."""

from __future__ import annotations

import itertools

import numpy as np

CANVAS = 28

_uid_counter = itertools.count()


class DigitModel:
    """One or more closed Bezier subpaths with an expected label.

    Each subpath is a (k, 4, 2) array of cubic segments
    [start, control1, control2, end]; segment ends meet the next
    segment's start exactly and the last joins the first (closure).
    """

    __slots__ = ("subpaths", "expected_label", "uid", "_raster", "_flat", "_norm2")

    def __init__(self, subpaths, expected_label: int):
        if not (0 <= int(expected_label) <= 9):
            raise ValueError("expected_label must be in [0, 9]")
        norm = []
        for sp in subpaths:
            arr = np.asarray(sp, dtype=np.float64)
            if arr.ndim != 3 or arr.shape[1:] != (4, 2) or arr.shape[0] < 1:
                raise ValueError("each subpath must be a (k, 4, 2) array of segments")
            if not np.all(np.isfinite(arr)):
                raise ValueError("digit model coordinates must be finite")
            ends = arr[:, 3]
            starts = np.roll(arr[:, 0], -1, axis=0)
            if not np.array_equal(ends, starts):
                raise ValueError("subpath is not closed: segment ends must "
                                 "match the next segment's start")
            arr.setflags(write=False)
            norm.append(arr)
        self.subpaths = norm
        self.expected_label = int(expected_label)
        self.uid = next(_uid_counter)
        self._raster = None
        self._flat = None
        self._norm2 = None

    def __repr__(self):
        segs = sum(sp.shape[0] for sp in self.subpaths)
        return (f"DigitModel(label={self.expected_label}, "
                f"{len(self.subpaths)} subpaths, {segs} segments)")

    def point_count(self) -> int:
        """Distinct movable points: one endpoint plus two controls per segment."""
        return sum(3 * sp.shape[0] for sp in self.subpaths)

    def to_obj(self) -> dict:
        return {
            "expected_label": self.expected_label,
            "subpaths": [
                [[float(v) for v in seg.reshape(8)] for seg in sp]
                for sp in self.subpaths
            ],
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "DigitModel":
        subpaths = [
            np.asarray(sp, dtype=np.float64).reshape(-1, 4, 2)
            for sp in obj["subpaths"]
        ]
        return cls(subpaths, obj["expected_label"])


def cubic_from_quadratic(q0, qc, q2) -> np.ndarray:
    """Exact cubic representation of a quadratic Bezier (degree elevation)."""
    q0 = np.asarray(q0, dtype=np.float64)
    qc = np.asarray(qc, dtype=np.float64)
    q2 = np.asarray(q2, dtype=np.float64)
    c1 = q0 + 2.0 / 3.0 * (qc - q0)
    c2 = q2 + 2.0 / 3.0 * (qc - q2)
    return np.stack([q0, c1, c2, q2])
