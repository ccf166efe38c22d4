"""SVG rendering of frontier pairs for human inspection."""

from __future__ import annotations

from pathlib import Path

import numpy as np

from frontier.search.archive import Archive

_SVG_HEADER = ('<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
               'viewBox="{vb}">')


def _digit_path_d(model) -> str:
    parts = []
    for sp in model.subpaths:
        parts.append(f"M {sp[0, 0, 0]:.3f} {sp[0, 0, 1]:.3f}")
        for seg in sp:
            parts.append(
                f"C {seg[1, 0]:.3f} {seg[1, 1]:.3f} {seg[2, 0]:.3f} "
                f"{seg[2, 1]:.3f} {seg[3, 0]:.3f} {seg[3, 1]:.3f}")
        parts.append("Z")
    return " ".join(parts)


def _digit_panel(model, domain, dx: float) -> str:
    pieces = [f'<g transform="translate({dx} 0)">']
    raster = domain.raster(model) if domain is not None else None
    if raster is not None:
        for r, c in zip(*np.nonzero(raster)):
            v = 255 - int(raster[r, c])
            pieces.append(f'<rect x="{30 + int(c)}" y="{int(r)}" width="1" height="1" '
                          f'fill="rgb({v},{v},{v})"/>')
    pieces.append(f'<path d="{_digit_path_d(model)}" fill="black" '
                  'fill-rule="evenodd"/>')
    pieces.append("</g>")
    return "\n".join(pieces)


def _polyline(points, stroke, width, dash="") -> str:
    coords = " ".join(f"{x:.2f},{y:.2f}" for x, y in points)
    dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
    return (f'<polyline points="{coords}" fill="none" stroke="{stroke}" '
            f'stroke-width="{width}"{dash_attr}/>')


def _road_panel(model, domain, dx: float) -> str:
    from frontier.driver import right_lane_center

    geometry = domain.geometry(model)
    spine = geometry.spine
    w = model.lane_width
    tangents = np.empty_like(spine)
    tangents[1:-1] = spine[2:] - spine[:-2]
    tangents[0] = spine[1] - spine[0]
    tangents[-1] = spine[-1] - spine[-2]
    tangents /= np.sqrt((tangents ** 2).sum(axis=1))[:, None]
    right = np.stack([tangents[:, 1], -tangents[:, 0]], axis=1)
    pieces = [f'<g transform="translate({dx} 0)">']
    pieces.append(_polyline(spine + w * right, "#888", 0.6))
    pieces.append(_polyline(spine - w * right, "#888", 0.6))
    pieces.append(_polyline(spine, "#e0a000", 0.6, dash="3 3"))
    path, _ = right_lane_center(geometry, w)
    pieces.append(_polyline(path, "#bbb", 0.3))
    states, outcome = _drive_states(model, domain)
    pieces.append(_polyline(states[:, :2], "#c00000", 0.8))
    if outcome == 1:
        x, y = states[-1, 0], states[-1, 1]
        pieces.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3" fill="none" '
                      'stroke="#c00000" stroke-width="1.2"/>')
    pieces.append("</g>")
    return "\n".join(pieces)


def _drive_states(model, domain):
    from frontier import _kernels
    from frontier.driver import right_lane_center

    geometry = domain.geometry(model)
    path, cum = right_lane_center(geometry, domain.lane_width)
    p = domain.params
    return _kernels.drive(path, cum, p.lookahead, p.speed, p.max_steer_rate,
                          p.steering_lag, p.wheelbase, domain.lane_width / 2.0,
                          domain.dt, domain.max_steps)


def render_frontier(archive: Archive, domain_kind: str, out_dir,
                    domain=None) -> list[Path]:
    """One SVG per archive entry showing the pair side by side.

    Roads show spine, lane boundaries and the driven trace, with the
    departure point marked on the misbehaving member; digits show the
    vector outline next to a raster preview. Filenames carry the entry
    index and its frontier fitness.
    """
    entries = list(archive)
    if not entries:
        raise ValueError("cannot render an empty archive")
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for i, e in enumerate(entries):
        if domain_kind == "digit":
            body = "\n".join([_digit_panel(e.m1.model, domain, 0),
                              _digit_panel(e.m2.model, domain, 70)])
            header = _SVG_HEADER.format(w=560, h=120, vb="-2 -2 132 32")
        elif domain_kind == "road":
            if domain is None:
                raise ValueError("road rendering needs the domain")
            pieces = []
            span = domain.bbox_side
            for dx, model in ((0.0, e.m1.model), (span + 20.0, e.m2.model)):
                lo = domain.geometry(model).spine.min(axis=0)
                pieces.append(f'<g transform="translate({dx - lo[0]:.2f} {-lo[1]:.2f})">'
                              + _road_panel(model, domain, 0.0) + "</g>")
            body = "\n".join(pieces)
            header = _SVG_HEADER.format(
                w=900, h=450, vb=f"-10 -10 {2 * span + 60:.0f} {span + 20:.0f}")
        else:
            raise ValueError(f"unknown domain kind {domain_kind!r}")
        doc = f"{header}\n{body}\n</svg>\n"
        path = out_dir / f"entry{i:03d}_f2{e.f2:+.4f}.svg"
        path.write_text(doc, encoding="utf-8")
        written.append(path)
    return written
