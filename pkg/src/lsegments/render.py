"""SVG 1.1 pictures of L-representations and segment representations.

Huge coordinates cannot be drawn to scale, so segment pictures may switch to a
log display (each coordinate ``v`` drawn at ``log2(v)``, i.e. roughly its bit
length).  The transform only affects the picture.
"""

from __future__ import annotations

import math
import warnings
import xml.etree.ElementTree as ET

from .model import TR, GridSegment, LRep

CANVAS = 480
MARGIN = 30
LOG_THRESHOLD = 1 << 20
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf")


def _fmt(v: float) -> str:
    return f"{v:.2f}".rstrip("0").rstrip(".")


class _Frame:
    """Map data coordinates into the canvas, y axis pointing up."""

    def __init__(self, xs, ys):
        self.x0, self.x1 = min(xs), max(xs)
        self.y0, self.y1 = min(ys), max(ys)
        # axes scaled independently: pictures are not to scale in general
        self.kx = (CANVAS - 2 * MARGIN) / max(self.x1 - self.x0, 1e-9)
        self.ky = (CANVAS - 2 * MARGIN) / max(self.y1 - self.y0, 1e-9)

    def __call__(self, x: float, y: float) -> tuple[str, str]:
        px = MARGIN + (x - self.x0) * self.kx
        py = CANVAS - MARGIN - (y - self.y0) * self.ky
        return _fmt(px), _fmt(py)


def _root() -> ET.Element:
    return ET.Element(
        "svg",
        xmlns="http://www.w3.org/2000/svg",
        version="1.1",
        width=str(CANVAS),
        height=str(CANVAS),
        viewBox=f"0 0 {CANVAS} {CANVAS}",
    )


def _label(parent, xy, text, color):
    el = ET.SubElement(parent, "text", x=xy[0], y=xy[1], fill=color)
    el.set("font-size", "12")
    el.set("font-family", "sans-serif")
    el.text = text


def render_lrep(rep: LRep) -> str:
    pts = [(s.l, s.b) for s in rep] + [(s.r, s.t) for s in rep]
    frame = _Frame([p[0] for p in pts] or [0], [p[1] for p in pts] or [0])
    svg = _root()
    g = ET.SubElement(svg, "g", fill="none")
    g.set("stroke-width", "2")
    for k, s in enumerate(rep):
        color = PALETTE[k % len(PALETTE)]
        if s.orient is TR:
            path = [(s.l, s.t), (s.r, s.t), (s.r, s.b)]
        else:
            path = [(s.r, s.t), (s.l, s.t), (s.l, s.b)]
        points = " ".join(",".join(frame(x, y)) for x, y in path)
        ET.SubElement(g, "polyline", points=points, stroke=color).set("data-id", s.id)
        _label(svg, frame(s.l, s.t), s.id, color)
    return _serialize(svg)


def needs_log_scale(segs: list[GridSegment]) -> bool:
    return any(c > LOG_THRESHOLD for s in segs for c in s.coords)


def render_segments(segs: list[GridSegment], log_scale: bool = False) -> str:
    """Draw segments; warns and switches to log display if coordinates are huge."""
    if not log_scale and needs_log_scale(segs):
        warnings.warn("coordinates exceed 2**20; enabling --log-scale for display", stacklevel=2)
        log_scale = True

    # y always goes to log display; x only if it is huge too (pow2 output)
    log_x = log_scale and any(x > LOG_THRESHOLD for s in segs for x in (s.p[0], s.q[0]))

    def ty(v: int) -> float:
        if log_scale:
            return math.log2(v) if v > 0 else -1.0
        return float(v)

    def tx(v: int) -> float:
        return ty(v) if log_x else float(v)

    pts = [(tx(x), ty(y)) for s in segs for x, y in (s.p, s.q)]
    frame = _Frame([p[0] for p in pts] or [0], [p[1] for p in pts] or [0])
    svg = _root()
    g = ET.SubElement(svg, "g", fill="none")
    g.set("stroke-width", "2")
    for k, s in enumerate(segs):
        color = PALETTE[k % len(PALETTE)]
        (x1, y1), (x2, y2) = frame(tx(s.p[0]), ty(s.p[1])), frame(tx(s.q[0]), ty(s.q[1]))
        if s.is_point:
            el = ET.SubElement(svg, "circle", cx=x1, cy=y1, r="3", fill=color)
        else:
            el = ET.SubElement(g, "line", x1=x1, y1=y1, x2=x2, y2=y2, stroke=color)
        el.set("data-id", s.id)
        _label(svg, (x1, y1), s.id, color)
    if log_scale:
        svg.set("data-log-scale", "true")
    return _serialize(svg)


def _serialize(svg: ET.Element) -> str:
    ET.indent(svg)
    return ET.tostring(svg, encoding="unicode") + "\n"
