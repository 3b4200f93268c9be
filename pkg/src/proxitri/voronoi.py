"""Voronoi diagram as the dual of the Delaunay mesh.

Each cell is read off the fan of triangles around its site: the
circumcenters of the fan, walked counterclockwise, are the cell corners.
Hull sites get two outward bisector rays which are clipped to a bounding
frame, so every cell is represented by a closed convex polygon. Edges
introduced purely by the clip frame are tagged so proximity queries can
tell genuine bisector contact from clipping artifacts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .delaunay import SiteSet, TriMesh, triangulate
from .errors import DegenerateIntersection, FrameTooSmall, GeometryError, IndexOutOfRange
from .geometry import (
    Point,
    PointLocation,
    Polygon,
    Rect,
    Segment,
    distance_sq,
    locate_point,
    segment_intersection,
)


@dataclass(frozen=True)
class CellEdge:
    """One boundary edge of a cell: either a piece of the bisector against a
    neighboring site, or a piece of the clip frame (neighbor None)."""

    segment: Segment
    neighbor: Optional[int]


@dataclass(frozen=True)
class VoronoiCell:
    site: int
    polygon: Polygon
    unbounded: bool
    edges: tuple[CellEdge, ...]


@dataclass(frozen=True)
class VoronoiDiagram:
    sites: SiteSet
    mesh: TriMesh
    frame: Rect
    vertices: tuple[Point, ...]  # circumcenter of triangle t at index t
    cells: tuple[VoronoiCell, ...]

    def cell(self, site: int) -> VoronoiCell:
        self.sites.check_index(site)
        return self.cells[site]


def default_frame(sites: SiteSet, centers: list[Point]) -> Rect:
    """Bounding box of sites and circumcenters, inflated by twice the sum
    of its side lengths (a rational upper bound on twice the diagonal) so
    clipping never disturbs a bounded intersection."""
    xs = [p.x for p in sites.points] + [c.x for c in centers]
    ys = [p.y for p in sites.points] + [c.y for c in centers]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    pad = 2 * ((x1 - x0) + (y1 - y0))
    if pad == 0:
        pad = Fraction(1)
    return Rect(x0 - pad, y0 - pad, x1 + pad, y1 + pad)


def _ray_frame_exit(frame: Rect, start: Point, dx: Fraction, dy: Fraction) -> Point:
    """First boundary point hit by the ray start + t*(dx, dy), t > 0.

    The start point is strictly inside the frame, so the exit is unique.
    """
    best: Optional[Fraction] = None
    if dx > 0:
        best = (frame.x1 - start.x) / dx
    elif dx < 0:
        best = (frame.x0 - start.x) / dx
    if dy > 0:
        t = (frame.y1 - start.y) / dy
        best = t if best is None else min(best, t)
    elif dy < 0:
        t = (frame.y0 - start.y) / dy
        best = t if best is None else min(best, t)
    if best is None:
        raise GeometryError("ray has zero direction")
    return Point(start.x + best * dx, start.y + best * dy)


def _frame_walk(frame: Rect, exit_pt: Point, entry_pt: Point) -> list[Point]:
    """Corners passed when walking the frame boundary CCW from exit_pt to
    entry_pt (endpoints not included)."""
    corners = frame.corners()

    def side_of(p: Point) -> int:
        # Sides CCW: 0 bottom, 1 right, 2 top, 3 left.
        if p.y == frame.y0 and p.x < frame.x1:
            return 0
        if p.x == frame.x1 and p.y < frame.y1:
            return 1
        if p.y == frame.y1 and p.x > frame.x0:
            return 2
        if p.x == frame.x0 and p.y > frame.y0:
            return 3
        raise GeometryError(f"point {p} not on frame boundary")

    def progress(side: int, p: Point) -> Fraction:
        # Position along the side, increasing in the CCW walk direction.
        return {0: p.x, 1: p.y, 2: -p.x, 3: -p.y}[side]

    out: list[Point] = []
    side = side_of(exit_pt)
    end_side = side_of(entry_pt)
    cur = exit_pt
    for _ in range(5):
        if side == end_side and progress(side, cur) <= progress(side, entry_pt):
            return out
        corner = corners[(side + 1) % 4]
        out.append(corner)
        cur = corner
        side = (side + 1) % 4
    raise GeometryError("frame walk did not terminate")


def _dedupe_ring(points: list[Point]) -> list[Point]:
    out: list[Point] = []
    for p in points:
        if not out or out[-1] != p:
            out.append(p)
    while len(out) > 1 and out[0] == out[-1]:
        out.pop()
    return out


def _cell_ring(mesh: TriMesh, site: int) -> tuple[list[int], bool, Optional[int], Optional[int]]:
    """Fan of triangles around a site in CCW order.

    Returns (triangle ids, closed?, first hull neighbor, last hull
    neighbor); the hull neighbors are None for interior sites.
    """
    tids = mesh.vertex_triangles(site)
    if not tids:
        raise GeometryError(f"site {site} has no incident triangle")

    def rotation(tid: int) -> tuple[int, int]:
        i, j, k = mesh.triangles[tid]
        if i == site:
            return (j, k)
        if j == site:
            return (k, i)
        return (i, j)

    # Open fans start where the incoming directed edge has no mate.
    start = None
    for tid in sorted(tids):
        a, _ = rotation(tid)
        if mesh.directed_triangle(a, site) is None:
            start = tid
            break
    closed = start is None
    if closed:
        start = min(tids)
    ring = [start]
    first_neighbor = rotation(start)[0]
    while True:
        _, b = rotation(ring[-1])
        nxt = mesh.directed_triangle(site, b)
        if nxt is None:
            return ring, False, first_neighbor, b
        if nxt == start:
            return ring, True, None, None
        ring.append(nxt)


def _build_cell(
    mesh: TriMesh,
    centers: list[Point],
    frame: Rect,
    site: int,
) -> VoronoiCell:
    pts = mesh.sites.points
    ring, closed, first_nb, last_nb = _cell_ring(mesh, site)
    if closed:
        corners = _dedupe_ring([centers[t] for t in ring])
        unbounded = False
    else:
        chain = _dedupe_ring([centers[t] for t in ring])
        p = pts[site]
        # Outward ray duals of the two hull edges at this site: rotate the
        # CCW hull direction by -90 degrees so the ray leaves the hull.
        a0 = pts[first_nb]
        d_in = (a0.y - p.y, p.x - a0.x)
        bm = pts[last_nb]
        d_out = (p.y - bm.y, bm.x - p.x)
        entry = _ray_frame_exit(frame, chain[0], d_in[0], d_in[1])
        exit_pt = _ray_frame_exit(frame, chain[-1], d_out[0], d_out[1])
        corners = _dedupe_ring(
            [entry] + chain + [exit_pt] + _frame_walk(frame, exit_pt, entry)
        )
        unbounded = True
    polygon = Polygon(tuple(corners))
    candidates = sorted(_mesh_neighbors(mesh, site, ring))
    edges = tuple(_label_edges(mesh, frame, site, polygon, candidates))
    return VoronoiCell(site=site, polygon=polygon, unbounded=unbounded, edges=edges)


def _mesh_neighbors(mesh: TriMesh, site: int, ring: list[int]) -> set[int]:
    out: set[int] = set()
    for tid in ring:
        for v in mesh.triangles[tid]:
            if v != site:
                out.add(v)
    return out


def _label_edges(mesh: TriMesh, frame: Rect, site: int, polygon: Polygon, candidates):
    """Attribute each polygon edge to the neighboring site whose bisector
    carries it, or to the frame. Only the site's mesh neighbors can own a
    bisector edge of its cell."""
    pts = mesh.sites.points
    p = pts[site]
    for seg in polygon.edges():
        da = distance_sq(seg.a, p)
        db = distance_sq(seg.b, p)
        neighbor = None
        for q in candidates:
            if distance_sq(seg.a, pts[q]) == da and distance_sq(seg.b, pts[q]) == db:
                neighbor = q
                break
        if neighbor is None and not (frame.on_boundary(seg.a) and frame.on_boundary(seg.b)):
            raise GeometryError(
                f"cell edge {seg} of site {site} is neither bisector nor frame"
            )
        yield CellEdge(segment=seg, neighbor=neighbor)


def voronoi_diagram(sites: SiteSet, frame: Optional[Rect] = None) -> VoronoiDiagram:
    """Voronoi diagram of the sites, built from the Delaunay dual.

    The frame must strictly contain every site and circumcenter; when
    omitted it is derived from their bounding box.
    """
    mesh = triangulate(sites)
    centers = [mesh.circumcenter(t) for t in range(len(mesh))]
    if frame is None:
        frame = default_frame(sites, centers)
    for p in sites.points:
        if not frame.contains_strict(p):
            raise FrameTooSmall(f"site {p} not strictly inside frame")
    for c in centers:
        if not frame.contains_strict(c):
            raise FrameTooSmall(f"circumcenter {c} not strictly inside frame")
    cells = tuple(
        _build_cell(mesh, centers, frame, site) for site in range(len(sites))
    )
    return VoronoiDiagram(
        sites=sites,
        mesh=mesh,
        frame=frame,
        vertices=tuple(centers),
        cells=cells,
    )


def _polygon_line_slice(
    poly: Polygon, fa: Fraction, fb: Fraction, fc: Fraction
) -> Optional[tuple[Point, Point]]:
    """Intersection of a convex polygon with the line fa*x + fb*y + fc = 0.

    Returns the extreme contact points ordered along the line (equal for a
    single-point touch), or None when the line misses the polygon.
    """
    verts = poly.vertices
    n = len(verts)
    vals = [fa * v.x + fb * v.y + fc for v in verts]
    hits: list[Point] = []
    for i in range(n):
        a, b = verts[i], verts[(i + 1) % n]
        va, vb = vals[i], vals[(i + 1) % n]
        if va == 0:
            hits.append(a)
        if (va > 0 > vb) or (va < 0 < vb):
            t = va / (va - vb)
            hits.append(Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)))
    if not hits:
        return None
    lo = min(hits, key=Point.key)
    hi = max(hits, key=Point.key)
    return (lo, hi)


def closed_cell_intersection(diagram: VoronoiDiagram, p: int, q: int):
    """Exact cl(cell p) * cl(cell q) as a closed set.

    Any common point of two distinct cells is equidistant from both sites,
    so the intersection lives on their bisector line; slicing each polygon
    by that line and overlapping the two slices gives the answer in linear
    time. Returns None, a Point, or a Segment.
    """
    sp = diagram.sites[p]
    sq = diagram.sites[q]
    # Bisector: 2(q - p) . x = |q|^2 - |p|^2
    fa = 2 * (sq.x - sp.x)
    fb = 2 * (sq.y - sp.y)
    fc = sp.x * sp.x + sp.y * sp.y - sq.x * sq.x - sq.y * sq.y
    sl_p = _polygon_line_slice(diagram.cells[p].polygon, fa, fb, fc)
    if sl_p is None:
        return None
    sl_q = _polygon_line_slice(diagram.cells[q].polygon, fa, fb, fc)
    if sl_q is None:
        return None
    lo = max(sl_p[0], sl_q[0], key=Point.key)
    hi = min(sl_p[1], sl_q[1], key=Point.key)
    if lo.key() > hi.key():
        return None
    if lo == hi:
        return lo
    return Segment(lo, hi)


def cells_strongly_near(diagram: VoronoiDiagram, p: int, q: int) -> bool:
    """True when the closed cells of p and q share a positive-length edge.

    The shared geometry necessarily lies on the p/q bisector, so contact
    induced purely by the clip frame can never count here.
    """
    diagram.sites.check_index(p)
    diagram.sites.check_index(q)
    if p == q:
        raise IndexOutOfRange("strong proximity needs two distinct cells")
    return isinstance(closed_cell_intersection(diagram, p, q), Segment)


def common_vertex(diagram: VoronoiDiagram, p: int, q: int, r: int) -> Optional[Point]:
    """The single point shared by the closures of three cells, if any.

    Returns None when the closed cells have no common point. Raises
    DegenerateIntersection when the meeting point is a cocircular Voronoi
    vertex where four or more cells meet, or (impossible for distinct
    sites, but checked) when the intersection is larger than a point.
    """
    for idx in (p, q, r):
        diagram.sites.check_index(idx)
    if len({p, q, r}) != 3:
        raise IndexOutOfRange("common vertex query needs three distinct cells")
    first = closed_cell_intersection(diagram, p, q)
    if first is None:
        return None
    third = diagram.cells[r].polygon
    if isinstance(first, Point):
        result = first if locate_point(first, third) is not PointLocation.EXTERIOR else None
    else:
        result = _segment_polygon_closed(first, third)
    if result is None:
        return None
    if not isinstance(result, Point):
        raise DegenerateIntersection(
            f"cells {p}, {q}, {r} share more than a point: {result}"
        )
    u = result
    d_min = distance_sq(u, diagram.sites[p])
    tied = sum(1 for s in diagram.sites.points if distance_sq(u, s) == d_min)
    if tied > 3:
        raise DegenerateIntersection(
            f"{tied} cocircular cells meet at {u}; no three-cell vertex"
        )
    return u


def _segment_polygon_closed(seg: Segment, poly: Polygon):
    """Closed intersection of a segment with a convex polygon."""
    candidates: set[Point] = set()
    for end in (seg.a, seg.b):
        if locate_point(end, poly) is not PointLocation.EXTERIOR:
            candidates.add(end)
    for edge in poly.edges():
        hit = segment_intersection(seg, edge)
        if isinstance(hit, Point):
            candidates.add(hit)
        elif isinstance(hit, Segment):
            candidates.add(hit.a)
            candidates.add(hit.b)
    if not candidates:
        return None
    ordered = sorted(candidates, key=Point.key)
    lo, hi = ordered[0], ordered[-1]
    if lo == hi:
        return lo
    return Segment(lo, hi)
