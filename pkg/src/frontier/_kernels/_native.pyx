# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the _fallback.py kernels.

Every floating-point expression mirrors the pure-Python fallback so both
backends produce identical results (the extension is compiled with
-ffp-contract=off to rule out FMA contraction).
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport atan2, cos, sin, sqrt, tan, INFINITY

cnp.import_array()

BACKEND = "native"


def coverage_counts(edges, int size, int subsamples):
    """Count covered subsamples per pixel of a closed outline (even-odd rule)."""
    cdef cnp.ndarray[cnp.float64_t, ndim=2] e = np.ascontiguousarray(edges, dtype=np.float64)
    cdef cnp.ndarray[cnp.int32_t, ndim=2] counts = np.zeros((size, size), dtype=np.int32)
    cdef int ne = e.shape[0]
    if ne == 0:
        return counts
    cdef int n = size * subsamples
    cdef cnp.ndarray[cnp.float64_t, ndim=1] grid = (np.arange(n) + 0.5) / subsamples
    cdef cnp.ndarray[cnp.float64_t, ndim=1] xs = np.empty(ne, dtype=np.float64)
    cdef int row, k, i, j, col, nx, pix_row
    cdef double y, x0, y0, x1, y1, lo, hi, v
    cdef int a, b, mid
    for row in range(n):
        y = grid[row]
        nx = 0
        for k in range(ne):
            x0 = e[k, 0]; y0 = e[k, 1]; x1 = e[k, 2]; y1 = e[k, 3]
            if (y0 <= y) != (y1 <= y):
                xs[nx] = x0 + (y - y0) * (x1 - x0) / (y1 - y0)
                nx += 1
        if nx == 0:
            continue
        # insertion sort: crossing counts per row are small
        for i in range(1, nx):
            v = xs[i]
            j = i - 1
            while j >= 0 and xs[j] > v:
                xs[j + 1] = xs[j]
                j -= 1
            xs[j + 1] = v
        pix_row = row // subsamples
        for k in range(0, nx - 1, 2):
            lo = xs[k]
            hi = xs[k + 1]
            # first grid index with grid[i] > lo (searchsorted side='right')
            a = 0; b = n
            while a < b:
                mid = (a + b) >> 1
                if grid[mid] <= lo:
                    a = mid + 1
                else:
                    b = mid
            i = a
            a = 0; b = n
            while a < b:
                mid = (a + b) >> 1
                if grid[mid] <= hi:
                    a = mid + 1
                else:
                    b = mid
            j = a
            for col in range(i, j):
                counts[pix_row, col // subsamples] += 1
    return counts


def angle_edit_distance(a, b):
    """Edit distance between two angle sequences (see fallback docstring)."""
    cdef cnp.ndarray[cnp.float64_t, ndim=1] aa = np.ascontiguousarray(a, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] bb = np.ascontiguousarray(b, dtype=np.float64)
    cdef int na = aa.shape[0]
    cdef int nb = bb.shape[0]
    if na == 0:
        return float(nb)
    if nb == 0:
        return float(na)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] prev = np.empty(nb + 1, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] cur = np.empty(nb + 1, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] tmp
    cdef int i, j
    cdef double d, sub, best, alt, ai
    cdef double pi = 3.14159265358979323846264338327950288
    cdef double two_pi = 2.0 * pi
    for j in range(nb + 1):
        prev[j] = <double>j
    for i in range(1, na + 1):
        cur[0] = <double>i
        ai = aa[i - 1]
        for j in range(1, nb + 1):
            d = ai - bb[j - 1]
            if d < 0.0:
                d = -d
            sub = d if d < two_pi - d else two_pi - d
            sub = sub / pi
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
        tmp = prev; prev = cur; cur = tmp
    return prev[nb]


cdef int _SEARCH_WINDOW = 32


def drive(path, cum, double lookahead, double speed, double max_steer_rate,
          int lag_steps, double wheelbase, double half_width, double dt,
          int max_steps):
    """Step a pure-pursuit kinematic bicycle along a polyline path."""
    cdef cnp.ndarray[cnp.float64_t, ndim=2] p = np.ascontiguousarray(path, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] c = np.ascontiguousarray(cum, dtype=np.float64)
    cdef int m = p.shape[0]
    cdef double total = c[m - 1]
    cdef double x = p[0, 0]
    cdef double y = p[0, 1]
    cdef double heading = atan2(p[1, 1] - p[0, 1], p[1, 0] - p[0, 0])
    cdef double steer = 0.0
    cdef cnp.ndarray[cnp.float64_t, ndim=1] lag_buf = np.zeros(max(lag_steps, 1), dtype=np.float64)
    cdef int lag_pos = 0
    cdef int seg = 0
    cdef cnp.ndarray[cnp.float64_t, ndim=2] states = np.empty((max_steps, 5), dtype=np.float64)
    cdef int outcome = 2
    cdef int nstates = 0
    cdef int step, end, s, best_seg, k
    cdef double best_d2, best_t, px, py, vx, vy, t, dx, dy, d2, d
    cdef double s_near, s_t, tx, ty, frac, aim, alpha, chord, cmd, applied
    cdef double limit, delta
    for step in range(max_steps):
        end = seg + _SEARCH_WINDOW
        if end > m - 2:
            end = m - 2
        best_d2 = INFINITY
        best_seg = seg
        best_t = 0.0
        for s in range(seg, end + 1):
            px = p[s, 0]
            py = p[s, 1]
            vx = p[s + 1, 0] - px
            vy = p[s + 1, 1] - py
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
        d = sqrt(best_d2)
        states[nstates, 0] = x
        states[nstates, 1] = y
        states[nstates, 2] = heading
        states[nstates, 3] = steer
        states[nstates, 4] = d
        nstates += 1
        if d > half_width:
            outcome = 1
            break
        s_near = c[seg] + best_t * (c[seg + 1] - c[seg])
        if s_near >= total - speed * dt:
            outcome = 0
            break
        s_t = s_near + lookahead
        if s_t >= total:
            tx = p[m - 1, 0]
            ty = p[m - 1, 1]
        else:
            k = seg
            while k < m - 2 and c[k + 1] < s_t:
                k += 1
            frac = (s_t - c[k]) / (c[k + 1] - c[k])
            tx = p[k, 0] + frac * (p[k + 1, 0] - p[k, 0])
            ty = p[k, 1] + frac * (p[k + 1, 1] - p[k, 1])
        aim = atan2(ty - y, tx - x) - heading
        alpha = atan2(sin(aim), cos(aim))
        chord = sqrt((tx - x) * (tx - x) + (ty - y) * (ty - y))
        if chord < 1e-9:
            chord = 1e-9
        cmd = atan2(2.0 * wheelbase * sin(alpha), chord)
        if lag_steps > 0:
            applied = lag_buf[lag_pos]
            lag_buf[lag_pos] = cmd
            lag_pos = lag_pos + 1
            if lag_pos == lag_steps:
                lag_pos = 0
        else:
            applied = cmd
        limit = max_steer_rate * dt
        delta = applied - steer
        if delta > limit:
            delta = limit
        elif delta < -limit:
            delta = -limit
        steer += delta
        x += speed * dt * cos(heading)
        y += speed * dt * sin(heading)
        heading += speed * dt * tan(steer) / wheelbase
    return states[:nstates].copy(), outcome
