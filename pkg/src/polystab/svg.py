"""SVG 1.1 drawings of a configuration and its minimal configuration.

Palette: original polygons filled grey (#9aa5b1, stroke #3e4c59); scaled
polygons outlined blue (#1f6feb), tangent ones drawn thicker in orange
(#d9480f); transversals dark red (#a61e4d) labelled t1, t2, ...; centroids as
small black dots.  The viewport is the bounding box of the original and
scaled polygons inflated by 10%.
"""
from __future__ import annotations

from pathlib import Path

from .geometry import Configuration, Line, scale_polygon
from .solver import Solution

WIDTH = 800.0
FILL = "#9aa5b1"
STROKE = "#3e4c59"
SCALED = "#1f6feb"
TANGENT = "#d9480f"
LINE = "#a61e4d"


def _clip_line(line: Line, box) -> tuple[tuple[float, float], tuple[float, float]] | None:
    """Segment of ``line`` inside the box ``(x0, y0, x1, y1)``."""
    x0, y0, x1, y1 = box
    nx, ny = line.normal
    b = line.offset
    pts = []
    if abs(ny) > 1e-15:
        for x in (x0, x1):
            y = (b - nx * x) / ny
            if y0 <= y <= y1:
                pts.append((x, y))
    if abs(nx) > 1e-15:
        for y in (y0, y1):
            x = (b - ny * y) / nx
            if x0 <= x <= x1:
                pts.append((x, y))
    if len(pts) < 2:
        return None
    pts.sort()
    return pts[0], pts[-1]


def svg_document(config: Configuration, sol: Solution | None = None) -> str:
    scaled = []
    tangent: set[int] = set()
    if sol is not None and sol.c_m > 0:
        scaled = [scale_polygon(p, sol.c_m) for p in config.polygons]
        for cert in sol.certificates:
            tangent.update(cert.tangent_indices)

    xs = [v.x for p in list(config.polygons) + scaled for v in p.vertices]
    ys = [v.y for p in list(config.polygons) + scaled for v in p.vertices]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0, 1e-12)
    x0, x1 = x0 - 0.1 * span, x1 + 0.1 * span
    y0, y1 = y0 - 0.1 * span, y1 + 0.1 * span
    box = (x0, y0, x1, y1)
    k = WIDTH / max(x1 - x0, y1 - y0)
    width, height = (x1 - x0) * k, (y1 - y0) * k

    def px(x, y):
        return (x - x0) * k, (y1 - y) * k

    def points(poly):
        return " ".join("%.3f,%.3f" % px(v.x, v.y) for v in poly.vertices)

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width:.3f}" height="{height:.3f}" viewBox="0 0 {width:.3f} {height:.3f}">',
        f'<rect x="0" y="0" width="{width:.3f}" height="{height:.3f}" fill="white"/>',
    ]
    for i, poly in enumerate(config.polygons, start=1):
        out.append(
            f'<polygon class="original" id="P{i}" points="{points(poly)}" '
            f'fill="{FILL}" stroke="{STROKE}" stroke-width="1"/>'
        )
    for i, poly in enumerate(scaled, start=1):
        hit = i in tangent
        out.append(
            f'<polygon class="scaled{" tangent" if hit else ""}" id="H{i}" points="{points(poly)}" '
            f'fill="none" stroke="{TANGENT if hit else SCALED}" stroke-width="{2.5 if hit else 1}"/>'
        )
    for i, poly in enumerate(config.polygons, start=1):
        cx, cy = px(*poly.centroid)
        out.append(f'<circle class="centroid" cx="{cx:.3f}" cy="{cy:.3f}" r="2" fill="black"/>')
        out.append(
            f'<text x="{cx + 4:.3f}" y="{cy - 4:.3f}" font-family="sans-serif" font-size="12">{i}</text>'
        )
    if sol is not None:
        for j, line in enumerate(sol.lines, start=1):
            seg = _clip_line(line, box)
            if seg is None:
                continue
            (ax, ay), (bx, by) = px(*seg[0]), px(*seg[1])
            out.append(
                f'<line class="transversal" id="t{j}" x1="{ax:.3f}" y1="{ay:.3f}" x2="{bx:.3f}" y2="{by:.3f}" '
                f'stroke="{LINE}" stroke-width="1.5"/>'
            )
            out.append(
                f'<text class="label" x="{bx - 20:.3f}" y="{by - 6:.3f}" font-family="sans-serif" '
                f'font-size="14" fill="{LINE}">t{j}</text>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_svg(config: Configuration, sol: Solution | None, path) -> None:
    Path(path).write_text(svg_document(config, sol), encoding="utf-8")
