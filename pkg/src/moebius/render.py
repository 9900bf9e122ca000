"""Deterministic scene rendering: primitives and an SVG 1.1 writer.

World coordinates are mapped with the y axis up; every emitted number is
formatted to a fixed precision so identical inputs give identical bytes.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from . import errors
from .cycles import OrientedCycle
from .projective import Point
from .triangles import TriangleSides

TWO_PI = 2.0 * math.pi
MIN_ARC_RAD = 1e-6

STYLE_TABLE = {
    "cycle": ("#4878a8", 1.5, None),
    "side": ("#202020", 2.5, None),
    "circumcircle": ("#b0b0b0", 1.0, "6 4"),
    "cevian": ("#c03030", 1.5, None),
    "common": ("#2858c8", 1.5, "6 4"),
    "perp": ("#309048", 1.5, "4 3"),
    "bisector": ("#c03030", 1.5, None),
    "altitude": ("#c03030", 1.5, None),
    "vertex": ("#000000", 0.0, None),
    "default": ("#666666", 1.0, None),
}


@dataclass(frozen=True)
class Viewport:
    xmin: float
    ymin: float
    xmax: float
    ymax: float

    def __post_init__(self):
        if not (self.xmax > self.xmin and self.ymax > self.ymin):
            raise errors.EmptyViewport("viewport must have positive area")

    def contains(self, x: float, y: float) -> bool:
        return self.xmin <= x <= self.xmax and self.ymin <= y <= self.ymax


def clip_segment(vp: Viewport, x0, y0, dx, dy, t0, t1):
    """Liang-Barsky clip of the parametric segment to the viewport box."""
    for p, q in ((-dx, x0 - vp.xmin), (dx, vp.xmax - x0),
                 (-dy, y0 - vp.ymin), (dy, vp.ymax - y0)):
        if p == 0.0:
            if q < 0:
                return None
            continue
        r = q / p
        if p < 0:
            if r > t1:
                return None
            t0 = max(t0, r)
        else:
            if r < t0:
                return None
            t1 = min(t1, r)
    if t0 >= t1:
        return None
    return t0, t1


def _line_prims(a: OrientedCycle, vp: Viewport, style: str,
                t_range=(-1e9, 1e9)) -> list[dict]:
    d = a.line_direction()
    z0 = -0.5 * a.n * a.l.conjugate() / abs(a.l) ** 2
    clipped = clip_segment(vp, z0.real, z0.imag, d.real, d.imag, *t_range)
    if clipped is None:
        return []
    t0, t1 = clipped
    p0, p1 = z0 + t0 * d, z0 + t1 * d
    return [{"kind": "line", "x1": p0.real, "y1": p0.imag,
             "x2": p1.real, "y2": p1.imag, "style": style}]


def cycle_primitives(a: OrientedCycle, vp: Viewport, style: str = "cycle") -> list[dict]:
    """Full circle, or the visible segment of a line."""
    if a.is_line:
        return _line_prims(a, vp, style)
    o, r = a.center, abs(a.signed_radius)
    return [{"kind": "circle", "cx": o.real, "cy": o.imag, "r": r, "style": style}]


def point_primitive(p: Point, style: str = "vertex") -> list[dict]:
    if p.is_infinite:
        return []
    z = p.value()
    return [{"kind": "point", "x": z.real, "y": z.imag, "style": style}]


def arc_primitives(side: OrientedCycle, start: Point, end: Point,
                   vp: Viewport, style: str = "side") -> list[dict]:
    """The traveled boundary arc from start to end of an oriented side."""
    if side.is_line:
        d = side.line_direction()
        z0 = -0.5 * side.n * side.l.conjugate() / abs(side.l) ** 2
        if start.is_infinite or end.is_infinite:
            fin = end if start.is_infinite else start
            t_at = ((fin.value() - z0) / d).real
            rng = (-1e9, t_at) if start.is_infinite else (t_at, 1e9)
            return _line_prims(side, vp, style, rng)
        t_s = ((start.value() - z0) / d).real
        t_e = ((end.value() - z0) / d).real
        if t_e > t_s:
            return _line_prims(side, vp, style, (t_s, t_e))
        # passes through infinity: two rays
        return (_line_prims(side, vp, style, (t_s, 1e9))
                + _line_prims(side, vp, style, (-1e9, t_e)))
    o, r = side.center, abs(side.signed_radius)
    th1 = cmath.phase(start.value() - o)
    th2 = cmath.phase(end.value() - o)
    ccw = side.k > 0
    sweep = (th2 - th1) % TWO_PI if ccw else (th1 - th2) % TWO_PI
    if sweep * r <= MIN_ARC_RAD:
        return point_primitive(start, style)
    return [{"kind": "arc", "cx": o.real, "cy": o.imag, "r": r,
             "theta1": th1, "theta2": th2, "ccw": ccw, "style": style}]


def triangle_primitives(t: TriangleSides, vp: Viewport) -> list[dict]:
    prims = []
    for start, end, side in t.boundary():
        prims.extend(arc_primitives(side, start, end, vp, "side"))
    for v in t.vertices:
        prims.extend(point_primitive(v))
    return prims


# --------------------------------------------------------------------------
# SVG output

def _fmt(x: float) -> str:
    s = f"{x:.6f}"
    return "0.000000" if s == "-0.000000" else s


def _style_attrs(style: str) -> str:
    stroke, width, dash = STYLE_TABLE.get(style, STYLE_TABLE["default"])
    extra = f' stroke-dasharray="{dash}"' if dash else ""
    return (f'fill="none" stroke="{stroke}" '
            f'stroke-width="{_fmt(width)}"{extra}')


def render_svg(primitives: list[dict], vp: Viewport, width_px: int = 640) -> bytes:
    """Serialize primitives to a standalone SVG document, byte-deterministic."""
    scale = width_px / (vp.xmax - vp.xmin)
    height_px = (vp.ymax - vp.ymin) * scale

    def sx(x):
        return (x - vp.xmin) * scale

    def sy(y):
        return (vp.ymax - y) * scale

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(width_px)}" height="{_fmt(height_px)}" '
        f'viewBox="0 0 {_fmt(width_px)} {_fmt(height_px)}">',
        f'<rect x="0" y="0" width="{_fmt(width_px)}" height="{_fmt(height_px)}" '
        'fill="#ffffff"/>',
    ]
    for pr in primitives:
        kind, style = pr["kind"], pr.get("style", "default")
        if kind == "circle":
            out.append(f'<circle cx="{_fmt(sx(pr["cx"]))}" cy="{_fmt(sy(pr["cy"]))}" '
                       f'r="{_fmt(pr["r"] * scale)}" {_style_attrs(style)}/>')
        elif kind == "line":
            out.append(f'<line x1="{_fmt(sx(pr["x1"]))}" y1="{_fmt(sy(pr["y1"]))}" '
                       f'x2="{_fmt(sx(pr["x2"]))}" y2="{_fmt(sy(pr["y2"]))}" '
                       f'{_style_attrs(style)}/>')
        elif kind == "arc":
            o = complex(pr["cx"], pr["cy"])
            r = pr["r"]
            e1 = o + r * cmath.exp(1j * pr["theta1"])
            e2 = o + r * cmath.exp(1j * pr["theta2"])
            ccw = pr["ccw"]
            sweep_angle = ((pr["theta2"] - pr["theta1"]) % TWO_PI if ccw
                           else (pr["theta1"] - pr["theta2"]) % TWO_PI)
            large = 1 if sweep_angle > math.pi else 0
            sweep = 0 if ccw else 1
            out.append(f'<path d="M {_fmt(sx(e1.real))} {_fmt(sy(e1.imag))} '
                       f'A {_fmt(r * scale)} {_fmt(r * scale)} 0 {large} {sweep} '
                       f'{_fmt(sx(e2.real))} {_fmt(sy(e2.imag))}" '
                       f'{_style_attrs(style)}/>')
        elif kind == "point":
            stroke, _, _ = STYLE_TABLE.get(style, STYLE_TABLE["default"])
            out.append(f'<circle cx="{_fmt(sx(pr["x"]))}" cy="{_fmt(sy(pr["y"]))}" '
                       f'r="3.000000" fill="{stroke}"/>')
        else:
            raise errors.SchemaError(f"unknown primitive kind {kind!r}")
    out.append("</svg>")
    return ("\n".join(out) + "\n").encode()
