"""Deterministic SVG rendering of wall-circle scenes.

Output is plain SVG 1.1 with fixed 6-decimal coordinate formatting, so a
given scene renders to byte-identical documents across runs.
"""

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InputError
from .walls import WallCircle


@dataclass(frozen=True)
class RenderOptions:
    width: int = 640
    height: int = 640
    scale: float = 60.0  # pixels per model unit
    stroke_width: float = 1.0
    stroke: str = "#1a1a1a"
    labels: Optional[Sequence[str]] = None  # parallel to the scene
    mark_infinity: bool = False  # annotate the cusp for uhs scenes
    samples: int = 64  # polyline resolution for 3d ball circles


def _fmt(v: float) -> str:
    s = f"{v:.6f}"
    return "0.000000" if s == "-0.000000" else s


def _px(options: RenderOptions, x: float, y: float):
    cx = options.width / 2.0 + options.scale * x
    cy = options.height / 2.0 - options.scale * y
    return cx, cy


def _circle_elem(options, x, y, r, extra=""):
    cx, cy = _px(options, x, y)
    return (f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(r * options.scale)}"'
            f' fill="none" stroke="{options.stroke}"'
            f' stroke-width="{_fmt(options.stroke_width)}"{extra}/>')


def _text_elem(options, x, y, text):
    cx, cy = _px(options, x, y)
    return (f'<text x="{_fmt(cx)}" y="{_fmt(cy)}" font-size="12"'
            f' font-family="monospace">{text}</text>')


def _path_elem(options, points):
    parts = []
    for i, (x, y) in enumerate(points):
        cx, cy = _px(options, x, y)
        parts.append(f"{'M' if i == 0 else 'L'} {_fmt(cx)} {_fmt(cy)}")
    parts.append("Z")
    return (f'<path d="{" ".join(parts)}" fill="none" stroke="{options.stroke}"'
            f' stroke-width="{_fmt(options.stroke_width)}"/>')


def _pad2(coords):
    xs = list(coords) + [0.0, 0.0]
    return xs[0], xs[1]


def _ball_circle_points(circle: WallCircle, samples: int):
    import math

    from .walls import _plane_frame
    if len(circle.center) == 2:
        # 2-dimensional ball: the trace is a pair of boundary points
        normal = circle.normal
        e1 = (-normal[1], normal[0])
        return [(circle.center[0] + s * circle.radius * e1[0],
                 circle.center[1] + s * circle.radius * e1[1])
                for s in (1.0, -1.0)]
    basis = _plane_frame(list(circle.normal))
    e1 = basis[0]
    e2 = basis[1] if len(basis) > 1 else [0.0] * len(e1)
    pts = []
    for k in range(samples):
        theta = 2.0 * math.pi * k / samples
        p = [c + circle.radius * (math.cos(theta) * a + math.sin(theta) * b)
             for c, a, b in zip(circle.center, e1, e2)]
        pts.append((p[0], p[1]))  # orthographic projection
    return pts


def render_svg(scene: Sequence[WallCircle],
               options: RenderOptions = RenderOptions()) -> str:
    """Render wall circles to an SVG document (deterministic bytes)."""
    if not scene:
        raise InputError("empty scene")
    labels = options.labels
    if labels is not None and len(labels) != len(scene):
        raise InputError("labels must parallel the scene")
    body = []
    models = {c.model for c in scene}
    if models == {"ball"}:
        body.append(_circle_elem(options, 0.0, 0.0, 1.0,
                                 extra=' stroke-dasharray="4 3"'))
    for idx, circle in enumerate(scene):
        if circle.degenerate is not None:
            nx, ny = _pad2(circle.degenerate.normal)
            off = circle.degenerate.offset
            # line through off*(nx, ny), direction (-ny, nx), clipped crudely
            span = max(options.width, options.height) / options.scale
            p1 = (off * nx - span * ny, off * ny + span * nx)
            p2 = (off * nx + span * ny, off * ny - span * nx)
            c1, c2 = _px(options, *p1), _px(options, *p2)
            body.append(f'<line x1="{_fmt(c1[0])}" y1="{_fmt(c1[1])}"'
                        f' x2="{_fmt(c2[0])}" y2="{_fmt(c2[1])}"'
                        f' stroke="{options.stroke}"'
                        f' stroke-width="{_fmt(options.stroke_width)}"/>')
        elif circle.model == "uhs":
            x, y = _pad2(circle.center)
            body.append(_circle_elem(options, x, y, circle.radius))
        elif circle.model == "ball":
            body.append(_path_elem(
                options, _ball_circle_points(circle, options.samples)))
        else:
            raise InputError(f"unknown circle model {circle.model!r}")
        if labels is not None and labels[idx]:
            x, y = _pad2(circle.center)
            body.append(_text_elem(options, x, y, labels[idx]))
    if options.mark_infinity:
        body.append(f'<text x="8" y="16" font-size="12" font-family="monospace">'
                    f"[E] at infinity</text>")
    header = (f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
              f'width="{options.width}" height="{options.height}" '
              f'viewBox="0 0 {options.width} {options.height}">')
    return "\n".join([header, *body, "</svg>"]) + "\n"
