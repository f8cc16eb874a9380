"""Schematic SVG of the core polygon, with a sibling JSON of exact data.

The drawing is topological only: the disk stands for the complex hyperbolic
plane slice, walls are straight chords, and vertices are colored by the
exact sign of their norm (inside, ideal, outside). Positions carry no metric
meaning.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

from .hybrid import HEXAGON, core_polygon
from .mostow import Phase

SIZE = 480
R = 200
COLORS = {-1: "#2b8a3e", 0: "#e67700", 1: "#868e96"}
SIGN_TEXT = {-1: "inside", 0: "ideal", 1: "outside"}


def _pt(angle_deg, r):
    a = math.radians(angle_deg)
    return SIZE / 2 + r * math.cos(a), SIZE / 2 - r * math.sin(a)


def _fmt(x):
    return f"{x:.1f}"


def _line(a, b, **attrs):
    extra = " ".join(f'{k.replace("_", "-")}="{v}"' for k, v in attrs.items())
    return f'<line x1="{_fmt(a[0])}" y1="{_fmt(a[1])}" x2="{_fmt(b[0])}" y2="{_fmt(b[1])}" {extra}/>'


def _dot(c, sign, label, marker=""):
    out = [f'<circle cx="{_fmt(c[0])}" cy="{_fmt(c[1])}" r="6" fill="{COLORS[sign]}" stroke="black"/>']
    if marker == "elliptic":
        out.append(f'<circle cx="{_fmt(c[0])}" cy="{_fmt(c[1])}" r="11" fill="none" stroke="{COLORS[sign]}" stroke-dasharray="3,2"/>')
    out.append(f'<text x="{_fmt(c[0] + 10)}" y="{_fmt(c[1] - 10)}" font-size="11">{label}</text>')
    return out


def _wall_label(a, b, text):
    mx, my = (a[0] + b[0]) / 2, (a[1] + b[1]) / 2
    # push the label away from the center
    dx, dy = mx - SIZE / 2, my - SIZE / 2
    n = math.hypot(dx, dy) or 1
    return f'<text x="{_fmt(mx + 14 * dx / n)}" y="{_fmt(my + 14 * dy / n)}" font-size="12" text-anchor="middle">{text}</text>'


def render_svg(poly):
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE + 40}" viewBox="0 0 {SIZE} {SIZE + 40}">',
        f"<title>Core polygon, p={poly.p}, t={poly.t} ({poly.phase.value} phase, schematic)</title>",
        f'<circle cx="{SIZE / 2}" cy="{SIZE / 2}" r="{R}" fill="#f8f9fa" stroke="black"/>',
    ]
    if poly.phase is Phase.SMALL:
        pts = [_pt(90 + 60 * k, 0.62 * R) for k in range(6)]
        for k, v in enumerate(poly.hexagon):
            a, b = pts[k - 1], pts[k]
            parts.append(_line(a, b, stroke="black", stroke_width="2"))
            parts.append(_wall_label(a, b, f"v{HEXAGON[k]}"))
        for k, v in enumerate(poly.hexagon):
            mark = " ⟂" if v.orthogonal else ""
            parts += _dot(pts[k], v.norm_sign, f"{SIGN_TEXT[v.norm_sign]}{mark}")
    else:
        r = R if poly.phase is Phase.CRITICAL else 0.55 * R
        pts = [_pt(90 + 120 * k, r) for k in range(3)]
        walls = ("123", "231", "312")
        corner_of = {("123", "231"): "213", ("231", "312"): "321", ("312", "123"): "132"}
        for k in range(3):
            a, b = pts[k], pts[(k + 1) % 3]
            parts.append(_line(a, b, stroke="black", stroke_width="2"))
            parts.append(_wall_label(a, b, f"v{walls[k]}"))
        for k, v in enumerate(poly.triangle):
            corner = corner_of[v.walls]
            marker = "elliptic" if poly.phase is Phase.LARGE else ""
            parts += _dot(pts[(k + 1) % 3], v.norm_sign, f"[v{corner}] {SIGN_TEXT[v.norm_sign]}", marker)
    legend = "green: inside, orange: ideal, grey: outside; dashed ring: elliptic fixed point"
    parts.append(f'<text x="10" y="{SIZE + 25}" font-size="11">{poly.topology()} (schematic). {legend}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def write_polygon(g, out_path):
    """Write the SVG and a sibling .json; returns both paths."""
    out = Path(out_path)
    poly = core_polygon(g)
    data = poly.as_dict()
    data["field"] = f"Q(zeta_{g.field.conductor}), z = exp(2 pi i / {g.field.conductor})"
    data["schematic"] = True
    svg_path = out if out.suffix == ".svg" else out.with_suffix(".svg")
    json_path = svg_path.with_suffix(".json")
    svg_path.write_text(render_svg(poly), encoding="utf-8")
    json_path.write_text(json.dumps(data, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    return svg_path, json_path
