"""Deterministic SVG rendering of meshes, diagrams and regions.

Follows the usual figure conventions for this domain: solid triangulation
edges, dotted Voronoi edges, filled site dots, open circumcenter dots.
Every styling constant lives in one table and coordinates are quantized
through exact integer rounding, so a given input renders to identical
bytes on every run.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .delaunay import TriMesh
from .geometry import Polygon
from .regions import extract_regions, region_union_polygon
from .voronoi import VoronoiDiagram

STYLE = {
    "width": 640,
    "height": 640,
    "margin": 24,
    "background": "#ffffff",
    "edge_color": "#000000",
    "edge_width": "1.5",
    "constrained_color": "#aa0000",
    "constrained_width": "2.5",
    "voronoi_color": "#333333",
    "voronoi_width": "1.2",
    "voronoi_dash": "2 4",
    "site_radius": "3.5",
    "site_fill": "#000000",
    "vertex_radius": "3.5",
    "vertex_fill": "#ffffff",
    "vertex_stroke": "#000000",
    "frame_color": "#999999",
    "frame_width": "1",
    "region_palette": (
        "#bcd9ea", "#f9d4a0", "#c4e3b2", "#e6c3de",
        "#f3b8b0", "#d8d5ef", "#ffe9a8", "#c8e8e4",
    ),
    "region_stroke": "#555555",
}

WHAT_CHOICES = ("delaunay", "voronoi", "overlay", "regions")


def _quantize(value: Fraction) -> str:
    """Fixed two-decimal rendering via exact integer rounding."""
    scaled = value * 100
    n = scaled.numerator
    d = scaled.denominator
    q, r = divmod(n, d)
    # round half to even on the exact remainder
    if 2 * r > d or (2 * r == d and q % 2):
        q += 1
    sign = "-" if q < 0 else ""
    q = abs(q)
    return f"{sign}{q // 100}.{q % 100:02d}"


class _Mapper:
    """World to screen transform with y flip."""

    def __init__(self, x0, y0, x1, y1):
        margin = Fraction(STYLE["margin"])
        width = Fraction(STYLE["width"]) - 2 * margin
        height = Fraction(STYLE["height"]) - 2 * margin
        span_x = x1 - x0
        span_y = y1 - y0
        if span_x == 0:
            span_x = Fraction(1)
        if span_y == 0:
            span_y = Fraction(1)
        self.scale = min(width / span_x, height / span_y)
        self.x0 = x0
        self.y1 = y1
        self.margin = margin

    def point(self, p) -> tuple[str, str]:
        sx = self.margin + (p.x - self.x0) * self.scale
        sy = self.margin + (self.y1 - p.y) * self.scale
        return (_quantize(sx), _quantize(sy))


def _bounds(points) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    return (min(xs), min(ys), max(xs), max(ys))


def _line(m: _Mapper, a, b, color, width, dash: str = "") -> str:
    x1, y1 = m.point(a)
    x2, y2 = m.point(b)
    dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
    return (
        f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
        f'stroke="{color}" stroke-width="{width}"{dash_attr}/>'
    )


def _polygon_el(m: _Mapper, poly, fill, stroke, width, dash: str = "") -> str:
    pts = " ".join(",".join(m.point(v)) for v in poly.vertices)
    dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
    return (
        f'<polygon points="{pts}" fill="{fill}" stroke="{stroke}" '
        f'stroke-width="{width}"{dash_attr}/>'
    )


def _circle(m: _Mapper, p, radius, fill, stroke: str = "") -> str:
    cx, cy = m.point(p)
    stroke_attr = f' stroke="{stroke}" stroke-width="1"' if stroke else ""
    return f'<circle cx="{cx}" cy="{cy}" r="{radius}" fill="{fill}"{stroke_attr}/>'


def _svg(body: list[str]) -> str:
    head = (
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{STYLE["width"]}" height="{STYLE["height"]}" '
        f'viewBox="0 0 {STYLE["width"]} {STYLE["height"]}">'
    )
    rect = (
        f'<rect x="0" y="0" width="{STYLE["width"]}" height="{STYLE["height"]}" '
        f'fill="{STYLE["background"]}"/>'
    )
    return "\n".join([head, rect] + body + ["</svg>"]) + "\n"


def _mesh_elements(m: _Mapper, mesh: TriMesh) -> list[str]:
    body = []
    for t in range(len(mesh)):
        body.append(
            _polygon_el(
                m,
                mesh.triangle_polygon(t),
                "none",
                STYLE["edge_color"],
                STYLE["edge_width"],
            )
        )
    for a, b in mesh.edges():
        if mesh.is_constrained(a, b):
            body.append(
                _line(
                    m,
                    mesh.sites[a],
                    mesh.sites[b],
                    STYLE["constrained_color"],
                    STYLE["constrained_width"],
                )
            )
    return body


def _site_elements(m: _Mapper, mesh: TriMesh) -> list[str]:
    return [
        _circle(m, p, STYLE["site_radius"], STYLE["site_fill"])
        for p in mesh.sites.points
    ]


def _voronoi_elements(m: _Mapper, diagram: VoronoiDiagram) -> list[str]:
    body = []
    seen: set[tuple] = set()
    for cell in diagram.cells:
        for edge in cell.edges:
            if edge.neighbor is None:
                continue
            key = tuple(sorted((edge.segment.a.key(), edge.segment.b.key())))
            if key in seen:
                continue
            seen.add(key)
            body.append(
                _line(
                    m,
                    edge.segment.a,
                    edge.segment.b,
                    STYLE["voronoi_color"],
                    STYLE["voronoi_width"],
                    STYLE["voronoi_dash"],
                )
            )
    vertex_points = []
    vseen: set[tuple] = set()
    for v in diagram.vertices:
        if v.key() not in vseen:
            vseen.add(v.key())
            vertex_points.append(v)
    for v in vertex_points:
        body.append(
            _circle(
                m, v, STYLE["vertex_radius"], STYLE["vertex_fill"], STYLE["vertex_stroke"]
            )
        )
    return body


def render_svg(
    what: str,
    mesh: TriMesh,
    diagram: Optional[VoronoiDiagram] = None,
) -> str:
    """Render one view to an SVG string; see WHAT_CHOICES."""
    if what not in WHAT_CHOICES:
        raise ValueError(f"unknown render target {what!r}")
    if what in ("voronoi", "overlay"):
        if diagram is None:
            raise ValueError(f"{what} rendering needs a Voronoi diagram")
        # View covers sites and Voronoi vertices; cell edges that run to the
        # clip frame leave the canvas, which reads as unbounded rays.
        x0, y0, x1, y1 = _bounds(list(mesh.sites.points) + list(diagram.vertices))
        pad = max(x1 - x0, y1 - y0, Fraction(1)) * Fraction(3, 20)
        m = _Mapper(x0 - pad, y0 - pad, x1 + pad, y1 + pad)
        frame_el = _polygon_el(
            m,
            Polygon(diagram.frame.corners()),
            "none",
            STYLE["frame_color"],
            STYLE["frame_width"],
        )
    else:
        x0, y0, x1, y1 = _bounds(mesh.sites.points)
        pad = max(x1 - x0, y1 - y0, Fraction(1)) / 20
        m = _Mapper(x0 - pad, y0 - pad, x1 + pad, y1 + pad)
        frame_el = None

    body: list[str] = []
    if what == "delaunay":
        body += _mesh_elements(m, mesh)
        body += _site_elements(m, mesh)
    elif what == "voronoi":
        body.append(frame_el)
        body += _voronoi_elements(m, diagram)
        body += _site_elements(m, mesh)
    elif what == "overlay":
        body.append(frame_el)
        body += _mesh_elements(m, mesh)
        body += _voronoi_elements(m, diagram)
        body += _site_elements(m, mesh)
    elif what == "regions":
        palette = STYLE["region_palette"]
        for idx, region in enumerate(extract_regions(mesh)):
            body.append(
                _polygon_el(
                    m,
                    region_union_polygon(region),
                    palette[idx % len(palette)],
                    STYLE["region_stroke"],
                    "1",
                )
            )
        body += _mesh_elements(m, mesh)
        body += _site_elements(m, mesh)
    return _svg(body)
