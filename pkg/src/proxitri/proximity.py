"""Nearness relations on closed planar sets.

Two sets are near when their closures intersect, far otherwise; the
verdict always carries an explicit witness when near. Strong nearness
(sharing a full positive-length edge rather than a mere point) is flagged
for convex region pairs and answered combinatorially for mesh triangles.
All computation is exact; there is no tolerance parameter anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from .delaunay import TriMesh
from .errors import IndexOutOfRange
from .geometry import (
    Point,
    PointLocation,
    Polygon,
    Segment,
    convex_closed_intersection,
    is_convex_polygon,
    locate_point,
    segment_intersection,
)

GeometrySet = Union[Point, Segment, Polygon, tuple, frozenset, list]


class Relation(Enum):
    NEAR = "near"
    FAR = "far"


@dataclass(frozen=True)
class ProximityVerdict:
    relation: Relation
    witness: Optional[Union[Point, Segment, Polygon]] = None
    strongly: bool = False

    def __post_init__(self):
        if (self.relation is Relation.NEAR) != (self.witness is not None):
            raise ValueError("near verdicts carry a witness; far verdicts do not")
        if self.strongly and not isinstance(self.witness, Segment):
            raise ValueError("a strong verdict's witness is a shared edge segment")

    @property
    def is_near(self) -> bool:
        return self.relation is Relation.NEAR


_FAR = ProximityVerdict(Relation.FAR)


def _as_points(g) -> Optional[tuple[Point, ...]]:
    if isinstance(g, Point):
        return (g,)
    if isinstance(g, (tuple, list, frozenset, set)):
        items = tuple(g)
        if not all(isinstance(p, Point) for p in items):
            raise TypeError("point sets must contain only Points")
        if not items:
            raise ValueError("empty point set has no proximity relation")
        return tuple(sorted(items, key=Point.key))
    return None


def _bbox(g) -> tuple:
    if isinstance(g, Segment):
        xs = (g.a.x, g.b.x)
        ys = (g.a.y, g.b.y)
    elif isinstance(g, Polygon):
        return g.bounding_box()
    else:  # point tuple
        xs = tuple(p.x for p in g)
        ys = tuple(p.y for p in g)
    return (min(xs), min(ys), max(xs), max(ys))


def _boxes_disjoint(a, b) -> bool:
    ax0, ay0, ax1, ay1 = _bbox(a)
    bx0, by0, bx1, by1 = _bbox(b)
    return ax1 < bx0 or bx1 < ax0 or ay1 < by0 or by1 < ay0


def near(a: GeometrySet, b: GeometrySet) -> ProximityVerdict:
    """Closure-intersection verdict with a witness.

    Accepts points, point collections, segments and polygons (polygons are
    closed regions: boundary plus interior). The strong flag is set when
    both arguments are convex polygons touching along a positive-length
    common edge with disjoint interiors.
    """
    pa = _as_points(a)
    pb = _as_points(b)
    ga = pa if pa is not None else a
    gb = pb if pb is not None else b
    if _boxes_disjoint(ga, gb):
        return _FAR
    if pa is not None:
        return _points_near(pa, gb)
    if pb is not None:
        verdict = _points_near(pb, ga)
        return verdict
    if isinstance(ga, Segment) and isinstance(gb, Segment):
        hit = segment_intersection(ga, gb)
        if hit is None:
            return _FAR
        return ProximityVerdict(Relation.NEAR, hit)
    if isinstance(ga, Segment) and isinstance(gb, Polygon):
        return _segment_polygon_near(ga, gb)
    if isinstance(ga, Polygon) and isinstance(gb, Segment):
        return _segment_polygon_near(gb, ga)
    if isinstance(ga, Polygon) and isinstance(gb, Polygon):
        return _polygons_near(ga, gb)
    raise TypeError(f"unsupported geometry pair {type(a).__name__}/{type(b).__name__}")


def far(a: GeometrySet, b: GeometrySet) -> bool:
    """True when the closures of a and b do not meet."""
    return not near(a, b).is_near


def _points_near(pts: tuple[Point, ...], other) -> ProximityVerdict:
    for p in pts:
        if isinstance(other, tuple):
            if p in other:
                return ProximityVerdict(Relation.NEAR, p)
        elif locate_point(p, other) is not PointLocation.EXTERIOR:
            return ProximityVerdict(Relation.NEAR, p)
    return _FAR


def _segment_polygon_near(seg: Segment, poly: Polygon) -> ProximityVerdict:
    for end in (seg.a, seg.b):
        if locate_point(end, poly) is not PointLocation.EXTERIOR:
            return ProximityVerdict(Relation.NEAR, end)
    for edge in poly.edges():
        hit = segment_intersection(seg, edge)
        if hit is not None:
            return ProximityVerdict(Relation.NEAR, hit)
    return _FAR


def _polygons_near(p: Polygon, q: Polygon) -> ProximityVerdict:
    if is_convex_polygon(p) and is_convex_polygon(q):
        inter = convex_closed_intersection(p, q)
        if inter is None:
            return _FAR
        return ProximityVerdict(
            Relation.NEAR, inter, strongly=isinstance(inter, Segment)
        )
    # General simple polygons: find some witness of closure contact.
    for v in p.vertices:
        if locate_point(v, q) is not PointLocation.EXTERIOR:
            return ProximityVerdict(Relation.NEAR, v)
    for v in q.vertices:
        if locate_point(v, p) is not PointLocation.EXTERIOR:
            return ProximityVerdict(Relation.NEAR, v)
    for e in p.edges():
        for f in q.edges():
            hit = segment_intersection(e, f)
            if hit is not None:
                return ProximityVerdict(Relation.NEAR, hit)
    return _FAR


def triangles_near(mesh: TriMesh, t1: int, t2: int) -> bool:
    """Closure contact of two mesh triangles, decided from shared indices.

    Reflexive: a triangle is near itself.
    """
    a = set(mesh.check_triangle(t1))
    b = set(mesh.check_triangle(t2))
    return bool(a & b)


def strongly_near_triangles(mesh: TriMesh, t1: int, t2: int) -> bool:
    """True when two distinct triangles share a full mesh edge."""
    a = set(mesh.check_triangle(t1))
    b = set(mesh.check_triangle(t2))
    if t1 == t2:
        raise IndexOutOfRange("strong proximity needs two distinct triangles")
    return len(a & b) == 2
