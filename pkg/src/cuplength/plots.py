"""Static SVG renderings of diagrams and functions in the upper half-plane.

The output is plain hand-assembled SVG so that a fixed input always
yields byte-identical bytes.  Intervals are drawn at the point
(left, right) above the diagonal; unbounded intervals sit on a dashed
line labeled with the infinity sign.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cohomology import Bar
from .cup import CupDiagram
from .functions import CupFunction, Interval

_SIZE = 480.0
_MARGIN = 48.0
_VALUE_COLORS = ["#c6dbef", "#9ecae1", "#4292c6", "#08519c", "#08306b"]
_DIM_COLORS = ["#888888", "#d62728", "#2ca02c", "#9467bd", "#8c564b"]


def _color(palette: list[str], idx: int) -> str:
    return palette[min(max(idx, 0), len(palette) - 1)]


@dataclass
class _Canvas:
    max_finite: float
    parts: list[str]

    @property
    def inf_line(self) -> float:
        return self.max_finite * 1.15 if self.max_finite > 0 else 1.15

    @property
    def top(self) -> float:
        return self.inf_line * 1.08

    def x(self, v: float) -> float:
        return _MARGIN + (_SIZE - 2 * _MARGIN) * v / self.top

    def y(self, v: float) -> float:
        return _SIZE - _MARGIN - (_SIZE - 2 * _MARGIN) * v / self.top

    def pt(self, a: float, b: float) -> str:
        return f"{self.x(a):.2f},{self.y(b):.2f}"


def _begin(max_finite: float, title: str) -> _Canvas:
    cv = _Canvas(max_finite=max_finite, parts=[])
    p = cv.parts
    p.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE:.0f}" '
        f'height="{_SIZE:.0f}" viewBox="0 0 {_SIZE:.0f} {_SIZE:.0f}">'
    )
    p.append(f'<rect width="{_SIZE:.0f}" height="{_SIZE:.0f}" fill="white"/>')
    p.append(f'<title>{title}</title>')
    x0, y0 = cv.x(0.0), cv.y(0.0)
    xm, ym = cv.x(cv.top), cv.y(cv.top)
    p.append(
        f'<line x1="{x0:.2f}" y1="{y0:.2f}" x2="{cv.x(cv.top):.2f}" y2="{y0:.2f}" '
        'stroke="black" stroke-width="1"/>'
    )
    p.append(
        f'<line x1="{x0:.2f}" y1="{y0:.2f}" x2="{x0:.2f}" y2="{cv.y(cv.top):.2f}" '
        'stroke="black" stroke-width="1"/>'
    )
    p.append(
        f'<line x1="{x0:.2f}" y1="{y0:.2f}" x2="{xm:.2f}" y2="{ym:.2f}" '
        'stroke="#999999" stroke-width="1"/>'
    )
    yi = cv.y(cv.inf_line)
    p.append(
        f'<line x1="{x0:.2f}" y1="{yi:.2f}" x2="{cv.x(cv.top):.2f}" y2="{yi:.2f}" '
        'stroke="#999999" stroke-width="1" stroke-dasharray="4 3"/>'
    )
    p.append(
        f'<text x="{x0 - 26:.2f}" y="{yi + 4:.2f}" font-size="14" '
        'font-family="sans-serif">&#8734;</text>'
    )
    return cv


def _finish(cv: _Canvas) -> str:
    cv.parts.append("</svg>")
    return "\n".join(cv.parts) + "\n"


def _max_finite(values) -> float:
    finite = [v for v in values if not math.isinf(v)]
    return max(finite) if finite else 1.0


def _interval_point(cv: _Canvas, interval: Interval) -> tuple[float, float]:
    b = cv.inf_line if interval.unbounded else interval.right
    return interval.left, b


def render_diagram_svg(diagram: CupDiagram) -> str:
    pts = diagram.sorted_points()
    cv = _begin(
        _max_finite([i.left for i, _ in pts] + [i.right for i, _ in pts]),
        "persistent cup-length diagram",
    )
    for interval, value in pts:
        a, b = _interval_point(cv, interval)
        color = _color(_VALUE_COLORS, value)
        cv.parts.append(
            f'<circle cx="{cv.x(a):.2f}" cy="{cv.y(b):.2f}" r="4" fill="{color}" '
            'stroke="black" stroke-width="0.6"/>'
        )
        cv.parts.append(
            f'<text x="{cv.x(a) + 6:.2f}" y="{cv.y(b) + 12:.2f}" font-size="12" '
            f'font-family="sans-serif">{value}</text>'
        )
    return _finish(cv)


def render_function_svg(f: CupFunction) -> str:
    gens = list(f.generators)
    cv = _begin(
        _max_finite(
            [g.left for g, _ in gens] + [g.right for g, _ in gens]
        ),
        "persistent cup-length function",
    )
    # lower values first so that stronger regions stay visible on top
    for interval, value in sorted(gens, key=lambda g: (g[1], g[0].left, g[0].right)):
        left = interval.left
        right = cv.inf_line if interval.unbounded else interval.right
        color = _color(_VALUE_COLORS, value)
        cv.parts.append(
            f'<polygon points="{cv.pt(left, left)} {cv.pt(left, right)} {cv.pt(right, right)}" '
            f'fill="{color}" fill-opacity="0.55" stroke="{color}"/>'
        )
        cx = left + (right - left) * 0.25
        cy = left + (right - left) * 0.75
        cv.parts.append(
            f'<text x="{cv.x(cx):.2f}" y="{cv.y(cy):.2f}" font-size="12" '
            f'font-family="sans-serif">{value}</text>'
        )
    return _finish(cv)


def render_barcode_svg(bars: list[Bar]) -> str:
    cv = _begin(
        _max_finite([b.birth for b in bars] + [b.death for b in bars]),
        "persistence diagram",
    )
    for bar in sorted(bars, key=lambda b: (b.dim, b.birth, b.death)):
        b = cv.inf_line if bar.essential else bar.death
        color = _color(_DIM_COLORS, bar.dim)
        cv.parts.append(
            f'<circle cx="{cv.x(bar.birth):.2f}" cy="{cv.y(b):.2f}" r="4" '
            f'fill="{color}" fill-opacity="0.8"/>'
        )
    return _finish(cv)
