"""Deterministic SVG figures for chains and their dual arrangements.

Rationals are rounded to floats here and only here; the drawings are pure
presentation and nothing reads them back.  Output is byte-identical across
runs: fixed formatting, no timestamps, no generated ids.
"""

from __future__ import annotations

from .arrangement import Arrangement
from .chain import Chain
from .geometry import Point

POINT_COLOR = "#1f3b73"
EDGE_COLOR = "#1f3b73"
TRIANGLE_COLOR = "#9aa7c4"
SHADE_COLOR = "#d7def0"
LINE_COLOR = "#333333"
BOX_COLOR = "#bbbbbb"
LABEL_COLOR = "#888888"

LABEL_FACE_LIMIT = 9  # label face sizes only while the picture stays readable


class _SvgCanvas:
    """Maps a world window onto pixel coordinates with the y-axis flipped."""

    def __init__(self, xmin, xmax, ymin, ymax, width_px: int):
        self.xmin, self.xmax = float(xmin), float(xmax)
        self.ymin, self.ymax = float(ymin), float(ymax)
        self.scale = width_px / (self.xmax - self.xmin)
        self.width = width_px
        self.height = (self.ymax - self.ymin) * self.scale
        self.parts: list[str] = []

    def pt(self, p: Point) -> tuple[float, float]:
        return (
            (float(p.x) - self.xmin) * self.scale,
            (self.ymax - float(p.y)) * self.scale,
        )

    def line(self, a: Point, b: Point, color: str, width: float) -> None:
        (x1, y1), (x2, y2) = self.pt(a), self.pt(b)
        self.parts.append(
            f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" '
            f'stroke="{color}" stroke-width="{width:.2f}" stroke-linecap="round"/>'
        )

    def polygon(self, points: list[Point], fill: str, stroke: str = "none") -> None:
        coords = " ".join(f"{x:.2f},{y:.2f}" for x, y in map(self.pt, points))
        self.parts.append(f'<polygon points="{coords}" fill="{fill}" stroke="{stroke}"/>')

    def circle(self, p: Point, r: float, color: str) -> None:
        x, y = self.pt(p)
        self.parts.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="{r:.2f}" fill="{color}"/>')

    def text(self, p: Point, label: str, size: float, color: str) -> None:
        x, y = self.pt(p)
        self.parts.append(
            f'<text x="{x:.2f}" y="{y:.2f}" font-family="sans-serif" '
            f'font-size="{size:.1f}" fill="{color}" '
            f'text-anchor="middle" dominant-baseline="middle">{label}</text>'
        )

    def tostring(self) -> str:
        header = (
            '<svg xmlns="http://www.w3.org/2000/svg" '
            f'width="{self.width:.0f}" height="{self.height:.0f}" '
            f'viewBox="0 0 {self.width:.0f} {self.height:.0f}">'
        )
        body = "\n".join(f"  {part}" for part in self.parts)
        return f"{header}\n{body}\n</svg>\n"


def render_chain(chain: Chain, width_px: int = 720) -> str:
    """The chain with its base triangle; for s > 1 the two child triangles are shaded."""
    canvas = _SvgCanvas(-1.15, 1.15, -1.15, 0.15, width_px)
    first, mid, last = chain.points[0], chain.point(0), chain.points[-1]
    if chain.s > 1:
        quarter = 2 ** (chain.s - 2)
        canvas.polygon([first, chain.point(-quarter), mid], fill=SHADE_COLOR)
        canvas.polygon([mid, chain.point(quarter), last], fill=SHADE_COLOR)
    canvas.polygon([first, mid, last], fill="none", stroke=TRIANGLE_COLOR)
    for a, b in zip(chain.points, chain.points[1:]):
        canvas.line(a, b, EDGE_COLOR, 2.0)
    radius = max(2.0, 5.0 - 0.5 * chain.s)
    for p in chain.points:
        canvas.circle(p, radius, POINT_COLOR)
    return canvas.tostring()


def render_arrangement(arr: Arrangement, width_px: int = 720) -> str:
    """All lines clipped to the construction box, with face sizes labelled when small."""
    half_w, half_h = arr.clip_box
    pad_x, pad_y = float(half_w) * 0.05, float(half_h) * 0.05
    canvas = _SvgCanvas(
        -float(half_w) - pad_x,
        float(half_w) + pad_x,
        -float(half_h) - pad_y,
        float(half_h) + pad_y,
        width_px,
    )
    box = [
        Point(-half_w, -half_h),
        Point(half_w, -half_h),
        Point(half_w, half_h),
        Point(-half_w, half_h),
    ]
    canvas.polygon(box, fill="none", stroke=BOX_COLOR)
    for line in arr.lines:
        canvas.line(
            Point(-half_w, line.y_at(-half_w)),
            Point(half_w, line.y_at(half_w)),
            LINE_COLOR,
            1.2,
        )
    if arr.n <= LABEL_FACE_LIMIT:
        for face, polygon in zip(arr.faces, arr.face_polygons):
            cx = sum(p.x for p in polygon) / len(polygon)
            cy = sum(p.y for p in polygon) / len(polygon)
            canvas.text(Point(cx, cy), str(face.edge_count), 14.0, LABEL_COLOR)
    for vertex in arr.vertices:
        canvas.circle(vertex, 2.0, LINE_COLOR)
    return canvas.tostring()
