"""Pure-Python/numpy implementations of the hot kernels.

These are the reference semantics for the compiled extension in
_native.pyx: both backends must produce identical outputs on identical
inputs (the parity tests assert this). Keep every floating-point
expression textually in sync with the .pyx twin.
"""

import math

import numpy as np

BACKEND = "python"


def coverage_counts(edges, size, subsamples):
    """Count covered subsamples per pixel of a closed outline (even-odd rule).

    edges: (n, 4) float64 array of line segments [x0, y0, x1, y1] forming
    closed contours in canvas coordinates (x right, y down, one unit per
    pixel). Returns an int32 (size, size) array where entry [row, col] is
    the number of the subsamples-x-subsamples regular grid points of that
    pixel lying inside the outline.
    """
    edges = np.ascontiguousarray(edges, dtype=np.float64)
    counts = np.zeros((size, size), dtype=np.int32)
    if edges.shape[0] == 0:
        return counts
    n = size * subsamples
    grid = (np.arange(n) + 0.5) / subsamples  # subsample center coordinates
    x0, y0, x1, y1 = edges[:, 0], edges[:, 1], edges[:, 2], edges[:, 3]
    for row in range(n):
        y = grid[row]
        crossing = (y0 <= y) != (y1 <= y)
        if not crossing.any():
            continue
        xs = x0[crossing] + (y - y0[crossing]) * (x1[crossing] - x0[crossing]) / (
            y1[crossing] - y0[crossing]
        )
        xs = np.sort(xs)
        pix_row = row // subsamples
        for k in range(0, len(xs) - 1, 2):
            lo, hi = xs[k], xs[k + 1]
            i = np.searchsorted(grid, lo, side="right")
            j = np.searchsorted(grid, hi, side="right")
            for col in range(i, j):
                counts[pix_row, col // subsamples] += 1
    return counts


def angle_edit_distance(a, b):
    """Edit distance between two angle sequences.

    Insertion/deletion cost 1; substitution cost is the normalized angular
    difference min(|d|, 2*pi - |d|) / pi, clipped to [0, 1].
    """
    a = np.ascontiguousarray(a, dtype=np.float64)
    b = np.ascontiguousarray(b, dtype=np.float64)
    na, nb = len(a), len(b)
    if na == 0:
        return float(nb)
    if nb == 0:
        return float(na)
    prev = [float(j) for j in range(nb + 1)]
    cur = [0.0] * (nb + 1)
    two_pi = 2.0 * math.pi
    for i in range(1, na + 1):
        cur[0] = float(i)
        ai = a[i - 1]
        for j in range(1, nb + 1):
            d = abs(ai - b[j - 1])
            sub = min(d, two_pi - d) / math.pi
            if sub > 1.0:
                sub = 1.0
            best = prev[j] + 1.0
            alt = cur[j - 1] + 1.0
            if alt < best:
                best = alt
            alt = prev[j - 1] + sub
            if alt < best:
                best = alt
            cur[j] = best
        prev, cur = cur, prev
    return prev[nb]


_SEARCH_WINDOW = 32  # segments scanned forward for the nearest-point search


def drive(path, cum, lookahead, speed, max_steer_rate, lag_steps, wheelbase,
          half_width, dt, max_steps):
    """Step a pure-pursuit kinematic bicycle along a polyline path.

    path: (m, 2) float64 waypoints of the lane center to follow;
    cum: (m,) cumulative arc length. Returns (states, outcome) where
    states is an (n, 5) array of [x, y, heading, steer, d] per step and
    outcome is 0 = completed, 1 = out of bound (d exceeded half_width),
    2 = timeout.
    """
    path = np.ascontiguousarray(path, dtype=np.float64)
    cum = np.ascontiguousarray(cum, dtype=np.float64)
    m = path.shape[0]
    total = cum[m - 1]
    x = path[0, 0]
    y = path[0, 1]
    heading = math.atan2(path[1, 1] - path[0, 1], path[1, 0] - path[0, 0])
    steer = 0.0
    lag_buf = [0.0] * lag_steps
    lag_pos = 0
    seg = 0
    states = []
    outcome = 2
    for _ in range(max_steps):
        # nearest point on the polyline, searching forward from seg
        end = min(seg + _SEARCH_WINDOW, m - 2)
        best_d2 = math.inf
        best_seg = seg
        best_t = 0.0
        for s in range(seg, end + 1):
            px = path[s, 0]
            py = path[s, 1]
            vx = path[s + 1, 0] - px
            vy = path[s + 1, 1] - py
            t = ((x - px) * vx + (y - py) * vy) / (vx * vx + vy * vy)
            if t < 0.0:
                t = 0.0
            elif t > 1.0:
                t = 1.0
            dx = x - (px + t * vx)
            dy = y - (py + t * vy)
            d2 = dx * dx + dy * dy
            if d2 < best_d2:
                best_d2 = d2
                best_seg = s
                best_t = t
        seg = best_seg
        d = math.sqrt(best_d2)
        states.append((x, y, heading, steer, d))
        if d > half_width:
            outcome = 1
            break
        s_near = cum[seg] + best_t * (cum[seg + 1] - cum[seg])
        if s_near >= total - speed * dt:
            outcome = 0
            break
        # target point at arc length s_near + lookahead
        s_t = s_near + lookahead
        if s_t >= total:
            tx = path[m - 1, 0]
            ty = path[m - 1, 1]
        else:
            k = seg
            while k < m - 2 and cum[k + 1] < s_t:
                k += 1
            frac = (s_t - cum[k]) / (cum[k + 1] - cum[k])
            tx = path[k, 0] + frac * (path[k + 1, 0] - path[k, 0])
            ty = path[k, 1] + frac * (path[k + 1, 1] - path[k, 1])
        aim = math.atan2(ty - y, tx - x) - heading
        alpha = math.atan2(math.sin(aim), math.cos(aim))
        chord = math.sqrt((tx - x) * (tx - x) + (ty - y) * (ty - y))
        if chord < 1e-9:
            chord = 1e-9
        cmd = math.atan2(2.0 * wheelbase * math.sin(alpha), chord)
        if lag_steps > 0:
            applied = lag_buf[lag_pos]
            lag_buf[lag_pos] = cmd
            lag_pos = (lag_pos + 1) % lag_steps
        else:
            applied = cmd
        limit = max_steer_rate * dt
        delta = applied - steer
        if delta > limit:
            delta = limit
        elif delta < -limit:
            delta = -limit
        steer += delta
        x += speed * dt * math.cos(heading)
        y += speed * dt * math.sin(heading)
        heading += speed * dt * math.tan(steer) / wheelbase
    return np.array(states, dtype=np.float64), outcome
