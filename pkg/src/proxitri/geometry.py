"""Exact planar primitives.

Coordinates are arbitrary-precision rationals (`fractions.Fraction`).
Every predicate in this module determines signs exactly; there are no
tolerances anywhere. Floats are rejected at the boundary so binary
rounding error can never leak into a construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Union

from .errors import CollinearInput, NonConvexInput, NotCCW

CoordinateInput = Union[Fraction, int, str]


def as_coord(value: CoordinateInput) -> Fraction:
    """Coerce a coordinate to an exact rational.

    Accepts ints, Fractions and decimal/fraction literals ("1.25", "5/4").
    Floats are rejected: pass the literal as a string instead.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a coordinate")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad coordinate literal {value!r}") from exc
    if isinstance(value, float):
        raise TypeError(
            f"float coordinate {value!r} rejected; pass a decimal string for exactness"
        )
    raise TypeError(f"cannot use {type(value).__name__} as a coordinate")


class Orientation(Enum):
    CCW = 1
    COLLINEAR = 0
    CW = -1


class CirclePosition(Enum):
    INSIDE = 1
    ON = 0
    OUTSIDE = -1


class PointLocation(Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    EXTERIOR = "exterior"


@dataclass(frozen=True, slots=True)
class Point:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", as_coord(self.x))
        object.__setattr__(self, "y", as_coord(self.y))

    def key(self) -> tuple[Fraction, Fraction]:
        """Lexicographic sort key."""
        return (self.x, self.y)

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


@dataclass(frozen=True, slots=True)
class Segment:
    a: Point
    b: Point

    def __post_init__(self):
        if self.a == self.b:
            raise ValueError(f"degenerate segment at {self.a}")

    def reversed(self) -> "Segment":
        return Segment(self.b, self.a)

    def length_sq(self) -> Fraction:
        dx = self.b.x - self.a.x
        dy = self.b.y - self.a.y
        return dx * dx + dy * dy

    def __str__(self) -> str:
        return f"[{self.a} - {self.b}]"


def _cross(o: Point, a: Point, b: Point) -> Fraction:
    """Signed cross product of vectors o->a and o->b."""
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def orientation(a: Point, b: Point, c: Point) -> Orientation:
    """Exact turn direction of the triple (a, b, c)."""
    d = _cross(a, b, c)
    if d > 0:
        return Orientation.CCW
    if d < 0:
        return Orientation.CW
    return Orientation.COLLINEAR


def collinear(a: Point, b: Point, c: Point) -> bool:
    return _cross(a, b, c) == 0


@dataclass(frozen=True, slots=True)
class CircumCircle:
    """Circle through three non-collinear points; radius kept squared so the
    representation stays rational."""

    center: Point
    radius_sq: Fraction

    def position_of(self, p: Point) -> CirclePosition:
        d = (p.x - self.center.x) ** 2 + (p.y - self.center.y) ** 2
        if d < self.radius_sq:
            return CirclePosition.INSIDE
        if d == self.radius_sq:
            return CirclePosition.ON
        return CirclePosition.OUTSIDE


def circumcircle(a: Point, b: Point, c: Point) -> CircumCircle:
    """Center and squared radius of the circle through a, b, c.

    Raises CollinearInput when no finite circle exists.
    """
    d = 2 * _cross(a, b, c)
    if d == 0:
        raise CollinearInput(f"no circumcircle through collinear {a}, {b}, {c}")
    sa = a.x * a.x + a.y * a.y
    sb = b.x * b.x + b.y * b.y
    sc = c.x * c.x + c.y * c.y
    ux = (sa * (b.y - c.y) + sb * (c.y - a.y) + sc * (a.y - b.y)) / d
    uy = (sa * (c.x - b.x) + sb * (a.x - c.x) + sc * (b.x - a.x)) / d
    center = Point(ux, uy)
    radius_sq = (a.x - ux) ** 2 + (a.y - uy) ** 2
    return CircumCircle(center, radius_sq)


def in_circumcircle(a: Point, b: Point, c: Point, d: Point) -> CirclePosition:
    """Exact position of d relative to the circle through the CCW triple a, b, c."""
    if orientation(a, b, c) is not Orientation.CCW:
        raise NotCCW(f"defining triple {a}, {b}, {c} is not counterclockwise")
    adx = a.x - d.x
    ady = a.y - d.y
    bdx = b.x - d.x
    bdy = b.y - d.y
    cdx = c.x - d.x
    cdy = c.y - d.y
    alift = adx * adx + ady * ady
    blift = bdx * bdx + bdy * bdy
    clift = cdx * cdx + cdy * cdy
    det = (
        alift * (bdx * cdy - bdy * cdx)
        - blift * (adx * cdy - ady * cdx)
        + clift * (adx * bdy - ady * bdx)
    )
    if det > 0:
        return CirclePosition.INSIDE
    if det < 0:
        return CirclePosition.OUTSIDE
    return CirclePosition.ON


def _on_segment(p: Point, a: Point, b: Point) -> bool:
    """True when p lies on the closed segment ab (a != b)."""
    if _cross(a, b, p) != 0:
        return False
    lo_x, hi_x = (a.x, b.x) if a.x <= b.x else (b.x, a.x)
    lo_y, hi_y = (a.y, b.y) if a.y <= b.y else (b.y, a.y)
    return lo_x <= p.x <= hi_x and lo_y <= p.y <= hi_y


SegmentIntersection = Union[None, Point, Segment]


def segment_intersection(s: Segment, t: Segment) -> SegmentIntersection:
    """Exact intersection of two closed segments.

    Returns None when disjoint, the Point of a single-point contact, or the
    Segment of a positive-length collinear overlap.
    """
    r_x = s.b.x - s.a.x
    r_y = s.b.y - s.a.y
    q_x = t.b.x - t.a.x
    q_y = t.b.y - t.a.y
    denom = r_x * q_y - r_y * q_x
    if denom == 0:
        if _cross(s.a, s.b, t.a) != 0:
            return None  # parallel, different carrier lines
        # Collinear: overlap interval along the dominant axis.
        pts = sorted([s.a, s.b], key=Point.key)
        qts = sorted([t.a, t.b], key=Point.key)
        lo = max(pts[0], qts[0], key=Point.key)
        hi = min(pts[1], qts[1], key=Point.key)
        if lo.key() > hi.key():
            return None
        if lo == hi:
            return lo
        return Segment(lo, hi)
    w_x = t.a.x - s.a.x
    w_y = t.a.y - s.a.y
    t_par = (w_x * q_y - w_y * q_x) / denom
    u_par = (w_x * r_y - w_y * r_x) / denom
    if 0 <= t_par <= 1 and 0 <= u_par <= 1:
        return Point(s.a.x + t_par * r_x, s.a.y + t_par * r_y)
    return None


@dataclass(frozen=True, slots=True)
class Polygon:
    """Simple polygon with counterclockwise boundary.

    Construction normalizes the boundary: consecutive collinear (and
    duplicate) vertices are dropped and the cycle is rotated so the
    lexicographically smallest vertex comes first, giving a canonical
    representative for equality tests.
    """

    vertices: tuple[Point, ...]

    def __post_init__(self):
        verts = _normalize_ring(tuple(self.vertices))
        if len(verts) < 3:
            raise CollinearInput("polygon degenerates to fewer than 3 vertices")
        object.__setattr__(self, "vertices", verts)
        if _signed_area2(verts) <= 0:
            raise ValueError("polygon boundary must be counterclockwise")
        _check_simple(verts)

    def edges(self) -> list[Segment]:
        v = self.vertices
        return [Segment(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    def area(self) -> Fraction:
        return _signed_area2(self.vertices) / 2

    def bounding_box(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        xs = [p.x for p in self.vertices]
        ys = [p.y for p in self.vertices]
        return (min(xs), min(ys), max(xs), max(ys))

    def __str__(self) -> str:
        return "[" + ", ".join(str(p) for p in self.vertices) + "]"


def _signed_area2(verts: tuple[Point, ...]) -> Fraction:
    """Twice the signed area of the closed ring."""
    total = Fraction(0)
    n = len(verts)
    for i in range(n):
        p = verts[i]
        q = verts[(i + 1) % n]
        total += p.x * q.y - q.x * p.y
    return total


def _normalize_ring(verts: tuple[Point, ...]) -> tuple[Point, ...]:
    vs = list(verts)
    changed = True
    while changed and len(vs) >= 3:
        changed = False
        for i in range(len(vs)):
            prev = vs[i - 1]
            cur = vs[i]
            nxt = vs[(i + 1) % len(vs)]
            if cur == prev or _cross(prev, cur, nxt) == 0:
                del vs[i]
                changed = True
                break
    if len(vs) < 3:
        return tuple(vs)
    start = min(range(len(vs)), key=lambda i: vs[i].key())
    return tuple(vs[start:] + vs[:start])


def _ring_is_strictly_convex(verts: tuple[Point, ...]) -> bool:
    """Strictly convex rings are simple; lets validation skip the O(n^2)
    self-intersection scan for the common case.

    Requires every turn strictly CCW and the edge direction to wrap the
    full circle exactly once (rules out doubly-wound star rings).
    """
    n = len(verts)
    dirs = []
    for i in range(n):
        a = verts[i]
        b = verts[(i + 1) % n]
        dirs.append((b.x - a.x, b.y - a.y))
    wraps = 0
    for i in range(n):
        dx1, dy1 = dirs[i]
        dx2, dy2 = dirs[(i + 1) % n]
        if dx1 * dy2 - dy1 * dx2 <= 0:
            return False
        h1 = 0 if (dy1 > 0 or (dy1 == 0 and dx1 > 0)) else 1
        h2 = 0 if (dy2 > 0 or (dy2 == 0 and dx2 > 0)) else 1
        if h2 < h1:
            wraps += 1
    return wraps == 1


def _check_simple(verts: tuple[Point, ...]) -> None:
    if _ring_is_strictly_convex(verts):
        return
    n = len(verts)
    edges = [(verts[i], verts[(i + 1) % n]) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            adjacent = j == i + 1 or (i == 0 and j == n - 1)
            hit = segment_intersection(
                Segment(*edges[i]), Segment(*edges[j])
            )
            if adjacent:
                # May only meet at the shared vertex.
                shared = edges[i][1] if j == i + 1 else edges[i][0]
                if hit != shared:
                    raise ValueError("polygon boundary self-intersects")
            elif hit is not None:
                raise ValueError("polygon boundary self-intersects")


def is_convex_polygon(p: Polygon) -> bool:
    """True when no boundary turn is clockwise (no reflex vertex)."""
    v = p.vertices
    n = len(v)
    for i in range(n):
        if _cross(v[i], v[(i + 1) % n], v[(i + 2) % n]) < 0:
            return False
    return True


def convex_hull(points: Iterable[Point]) -> list[Point]:
    """Extreme points of the input, counterclockwise (monotone chain).

    Collinear boundary points are dropped. Returns fewer than 3 points for
    degenerate inputs.
    """
    pts = sorted(set(points), key=Point.key)
    if len(pts) <= 2:
        return pts
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:  # all input points collinear
        return [pts[0], pts[-1]]
    return hull


def locate_point(p: Point, g: Union[Segment, Polygon]) -> PointLocation:
    """Exact closure/interior/exterior verdict for p against g.

    For a Segment, INTERIOR means strictly between the endpoints on the
    carrier line; the endpoints are the boundary.
    """
    if isinstance(g, Segment):
        if p == g.a or p == g.b:
            return PointLocation.BOUNDARY
        if _on_segment(p, g.a, g.b):
            return PointLocation.INTERIOR
        return PointLocation.EXTERIOR
    verts = g.vertices
    n = len(verts)
    inside = False
    for i in range(n):
        a = verts[i]
        b = verts[(i + 1) % n]
        if _on_segment(p, a, b):
            return PointLocation.BOUNDARY
        if (a.y > p.y) != (b.y > p.y):
            # Edge crosses the horizontal through p; exact side test,
            # normalized so the edge points upward.
            side = _cross(a, b, p) if a.y < b.y else _cross(b, a, p)
            if side > 0:
                inside = not inside
    return PointLocation.INTERIOR if inside else PointLocation.EXTERIOR


ClosedIntersection = Union[None, Point, Segment, Polygon]


def convex_closed_intersection(p: Polygon, q: Polygon) -> ClosedIntersection:
    """Intersection of two convex polygons as closed point sets.

    The result can be empty (None), a single Point, a positive-length
    Segment, or a Polygon with positive area. Raises NonConvexInput when
    either argument has a reflex vertex.
    """
    if not is_convex_polygon(p):
        raise NonConvexInput("first polygon is not convex")
    if not is_convex_polygon(q):
        raise NonConvexInput("second polygon is not convex")
    px0, py0, px1, py1 = p.bounding_box()
    qx0, qy0, qx1, qy1 = q.bounding_box()
    if px1 < qx0 or qx1 < px0 or py1 < qy0 or qy1 < py0:
        return None
    candidates: set[Point] = set()
    for v in p.vertices:
        if locate_point(v, q) is not PointLocation.EXTERIOR:
            candidates.add(v)
    for v in q.vertices:
        if locate_point(v, p) is not PointLocation.EXTERIOR:
            candidates.add(v)
    for e in p.edges():
        for f in q.edges():
            hit = segment_intersection(e, f)
            if isinstance(hit, Point):
                candidates.add(hit)
            elif isinstance(hit, Segment):
                candidates.add(hit.a)
                candidates.add(hit.b)
    if not candidates:
        return None
    hull = convex_hull(candidates)
    if len(hull) == 1:
        return hull[0]
    if len(hull) == 2:
        return Segment(hull[0], hull[1])
    return Polygon(tuple(hull))


def convex_polygon_intersection(p: Polygon, q: Polygon) -> Optional[Polygon]:
    """Positive-area intersection of two convex polygons, or None.

    Point and segment contacts count as empty here; use
    convex_closed_intersection for the closed-set answer.
    """
    result = convex_closed_intersection(p, q)
    return result if isinstance(result, Polygon) else None


@dataclass(frozen=True, slots=True)
class Rect:
    """Axis-aligned rectangle, used as the Voronoi clip frame."""

    x0: Fraction
    y0: Fraction
    x1: Fraction
    y1: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x0", as_coord(self.x0))
        object.__setattr__(self, "y0", as_coord(self.y0))
        object.__setattr__(self, "x1", as_coord(self.x1))
        object.__setattr__(self, "y1", as_coord(self.y1))
        if self.x0 >= self.x1 or self.y0 >= self.y1:
            raise ValueError("rectangle must have positive width and height")

    def contains_strict(self, p: Point) -> bool:
        return self.x0 < p.x < self.x1 and self.y0 < p.y < self.y1

    def corners(self) -> tuple[Point, Point, Point, Point]:
        """Counterclockwise from the lower-left corner."""
        return (
            Point(self.x0, self.y0),
            Point(self.x1, self.y0),
            Point(self.x1, self.y1),
            Point(self.x0, self.y1),
        )

    def as_polygon(self) -> Polygon:
        return Polygon(self.corners())

    def on_boundary(self, p: Point) -> bool:
        on_x = p.x in (self.x0, self.x1) and self.y0 <= p.y <= self.y1
        on_y = p.y in (self.y0, self.y1) and self.x0 <= p.x <= self.x1
        return on_x or on_y


def midpoint(a: Point, b: Point) -> Point:
    return Point((a.x + b.x) / 2, (a.y + b.y) / 2)


def distance_sq(a: Point, b: Point) -> Fraction:
    dx = a.x - b.x
    dy = a.y - b.y
    return dx * dx + dy * dy
