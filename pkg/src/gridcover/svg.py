"""Plain SVG renderer for covering paths in two and three dimensions."""

from __future__ import annotations

from .errors import RenderError
from .grid import CoveringPath

_PREAMBLE = """\
<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">
<rect width="100%" height="100%" fill="white"/>
"""

_POSTAMBLE = "</svg>\n"

_CIRCLE = '<circle cx="{x}" cy="{y}" r="3" fill="black"/>\n'

_POLYLINE = '<polyline points="{pts}" fill="none" stroke="crimson" stroke-width="2"/>\n'

_COS30 = 0.8660254037844386


def _project(point: tuple, k: int) -> tuple[float, float]:
    if k == 2:
        r, c = point
        return float(c), float(r)
    # Fixed isometric view; larger third coordinate runs up-right.
    x, y, z = point
    return (z - x) * _COS30, (x + z) * 0.5 - y


def render_path_svg(path: CoveringPath, scale: int = 24) -> str:
    """SVG 1.1 document: one circle per grid point, one polyline for the path."""
    k = path.spec.k
    if k not in (2, 3):
        raise RenderError(f"can only draw 2- or 3-dimensional paths, got k={k}")
    grid = [_project(p, k) for p in path.spec.points()]
    verts = [_project(v, k) for v in path.vertices]
    margin = 1.0
    off_u = margin - min(u for u, _ in grid)
    off_v = margin - min(v for _, v in grid)

    def fmt(value: float) -> str:
        return f"{value:.2f}"

    def place(uv: tuple[float, float]) -> tuple[str, str]:
        u, v = uv
        return fmt((u + off_u) * scale), fmt((v + off_v) * scale)

    width = (max(u for u, _ in grid) - min(u for u, _ in grid) + 2 * margin) * scale
    height = (max(v for _, v in grid) - min(v for _, v in grid) + 2 * margin) * scale
    parts = [_PREAMBLE.format(w=fmt(width), h=fmt(height))]
    for uv in grid:
        x, y = place(uv)
        parts.append(_CIRCLE.format(x=x, y=y))
    if len(verts) >= 2:
        pts = " ".join("{},{}".format(*place(uv)) for uv in verts)
        parts.append(_POLYLINE.format(pts=pts))
    parts.append(_POSTAMBLE)
    return "".join(parts)
