"""Delaunay and constrained Delaunay triangulation over exact coordinates.

Construction is a lexicographic scan (every new point is connected to the
visible hull edges of the partial triangulation) followed by Lawson edge
flips. Flip decisions use an in-circle predicate that never reports a tie:
exactly cocircular quadruples are resolved by a symbolic perturbation that
favors the lower site index, so the produced mesh is canonical and
identical runs are bit-for-bit reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterable, Optional, Sequence

from .errors import (
    AllCollinear,
    ConstraintThroughSite,
    CrossingConstraints,
    DuplicateSite,
    GeometryError,
    IndexOutOfRange,
    TooFewSites,
    UnknownEdge,
)
from .geometry import (
    CirclePosition,
    CircumCircle,
    Point,
    PointLocation,
    Polygon,
    Segment,
    circumcircle,
    in_circumcircle,
    locate_point,
    segment_intersection,
)

ScaledCoords = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class SiteSet:
    """Ordered, duplicate-free collection of sites.

    Insertion order is retained: it is the tie-break authority for
    cocircular configurations and therefore part of the value.
    """

    points: tuple[Point, ...]
    scaled: ScaledCoords = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        pts = tuple(self.points)
        object.__setattr__(self, "points", pts)
        seen: dict[Point, int] = {}
        for i, p in enumerate(pts):
            if not isinstance(p, Point):
                raise TypeError(f"site #{i} is not a Point")
            if p in seen:
                raise DuplicateSite(f"site {p} appears at #{seen[p]} and #{i}")
            seen[p] = i
        # Common-denominator integer coordinates: keeps the hot predicates in
        # pure (arbitrary-precision) integer arithmetic.
        denom = 1
        for p in pts:
            denom = lcm(denom, p.x.denominator, p.y.denominator)
        object.__setattr__(
            self,
            "scaled",
            tuple((int(p.x * denom), int(p.y * denom)) for p in pts),
        )

    @classmethod
    def of(cls, coords: Iterable[tuple]) -> "SiteSet":
        return cls(tuple(Point(x, y) for x, y in coords))

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]

    def index_of(self, p: Point) -> Optional[int]:
        for i, q in enumerate(self.points):
            if q == p:
                return i
        return None

    def check_index(self, i: int) -> int:
        if not isinstance(i, int) or isinstance(i, bool) or not 0 <= i < len(self.points):
            raise IndexOutOfRange(f"site index {i!r} out of range 0..{len(self.points) - 1}")
        return i


@dataclass(frozen=True)
class ConstraintSet:
    """Segments that a constrained triangulation must contain as edges."""

    segments: tuple[Segment, ...]

    def __post_init__(self):
        object.__setattr__(self, "segments", tuple(self.segments))

    @classmethod
    def of(cls, coords: Iterable[tuple]) -> "ConstraintSet":
        return cls(
            tuple(Segment(Point(x1, y1), Point(x2, y2)) for x1, y1, x2, y2 in coords)
        )

    def __len__(self) -> int:
        return len(self.segments)



# ---------------------------------------------------------------------------
# Integer predicates over pre-scaled site coordinates.


def _sign(value: int) -> int:
    return (value > 0) - (value < 0)


def _orient(sc: ScaledCoords, i: int, j: int, k: int) -> int:
    ax, ay = sc[i]
    bx, by = sc[j]
    cx, cy = sc[k]
    return _sign((bx - ax) * (cy - ay) - (by - ay) * (cx - ax))


def _incircle(sc: ScaledCoords, i: int, j: int, k: int, l: int) -> int:
    """Sign of the in-circle determinant; positive when site l is strictly
    inside the circle through the CCW triple (i, j, k)."""
    dx, dy = sc[l]
    adx = sc[i][0] - dx
    ady = sc[i][1] - dy
    bdx = sc[j][0] - dx
    bdy = sc[j][1] - dy
    cdx = sc[k][0] - dx
    cdy = sc[k][1] - dy
    alift = adx * adx + ady * ady
    blift = bdx * bdx + bdy * bdy
    clift = cdx * cdx + cdy * cdy
    det = (
        alift * (bdx * cdy - bdy * cdx)
        - blift * (adx * cdy - ady * cdx)
        + clift * (adx * bdy - ady * bdx)
    )
    return _sign(det)


def _incircle_perturbed(sc: ScaledCoords, i: int, j: int, k: int, l: int) -> int:
    """In-circle test that never answers "on".

    Cocircular quadruples are decided as if every site's paraboloid lift
    were lowered by an infinitesimal that shrinks with the site index, so
    the lowest-indexed site wins the tie deterministically. The expansion
    of the perturbed determinant reduces each tie to an orientation sign
    of the three remaining rows.
    """
    s = _incircle(sc, i, j, k, l)
    if s:
        return s
    rows = (i, j, k, l)
    for site in sorted(rows):
        r = rows.index(site)
        others = [rows[x] for x in range(4) if x != r]
        m = _orient(sc, others[0], others[1], others[2])
        if m:
            return m if r % 2 == 1 else -m
    raise GeometryError("perturbed in-circle test on degenerate quadruple")


# ---------------------------------------------------------------------------
# Mutable builder used during construction, frozen into TriMesh at the end.


class _MeshBuilder:
    def __init__(self, sc: ScaledCoords):
        self.sc = sc
        self.tris: dict[int, tuple[int, int, int]] = {}
        self.edge: dict[tuple[int, int], int] = {}  # directed edge -> tid
        self.constrained: set[tuple[int, int]] = set()
        self._next = 0

    def add(self, i: int, j: int, k: int) -> int:
        tid = self._next
        self._next += 1
        self.tris[tid] = (i, j, k)
        for u, v in ((i, j), (j, k), (k, i)):
            if (u, v) in self.edge:
                raise GeometryError(f"directed edge {u}->{v} claimed twice")
            self.edge[(u, v)] = tid
        return tid

    def remove(self, tid: int) -> None:
        i, j, k = self.tris.pop(tid)
        for u, v in ((i, j), (j, k), (k, i)):
            del self.edge[(u, v)]

    def apex(self, u: int, v: int) -> Optional[int]:
        """Third vertex of the triangle containing directed edge (u, v)."""
        tid = self.edge.get((u, v))
        if tid is None:
            return None
        tri = self.tris[tid]
        for r in range(3):
            if tri[r] == u:
                return tri[(r + 2) % 3]
        return None

    def legalize(self, seed_edges: Iterable[tuple[int, int]]) -> None:
        queue = deque(seed_edges)
        while queue:
            u, v = queue.popleft()
            t1 = self.edge.get((u, v))
            t2 = self.edge.get((v, u))
            if t1 is None or t2 is None:
                continue  # hull edge or edge gone stale
            if _edge_key(u, v) in self.constrained:
                continue
            c = self.apex(u, v)
            d = self.apex(v, u)
            if _incircle_perturbed(self.sc, u, v, c, d) > 0:
                self.remove(t1)
                self.remove(t2)
                self.add(u, d, c)
                self.add(d, v, c)
                queue.extend(((u, d), (d, v), (v, c), (c, u)))


def _edge_key(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i < j else (j, i)


def _build_delaunay(sites: SiteSet) -> _MeshBuilder:
    n = len(sites)
    if n < 3:
        raise TooFewSites(f"need at least 3 sites, got {n}")
    sc = sites.scaled
    order = sorted(range(n), key=lambda i: sc[i])
    builder = _MeshBuilder(sc)

    chain = [order[0], order[1]]
    k = 2
    while k < n and _orient(sc, chain[0], chain[1], order[k]) == 0:
        chain.append(order[k])
        k += 1
    if k == n:
        raise AllCollinear("all sites lie on one line")

    apex = order[k]
    side = _orient(sc, chain[0], chain[-1], apex)
    hull: list[int]
    if side > 0:
        for a, b in zip(chain, chain[1:]):
            builder.add(a, b, apex)
        hull = chain + [apex]
    else:
        for a, b in zip(chain, chain[1:]):
            builder.add(b, a, apex)
        hull = list(reversed(chain)) + [apex]

    for p in order[k + 1 :]:
        _insert_hull_point(builder, hull, p)
    return builder


def _insert_hull_point(builder: _MeshBuilder, hull: list[int], p: int) -> None:
    """Connect p (lexicographically beyond the current mesh) to every hull
    edge it strictly sees, then restore the Delaunay property locally."""
    sc = builder.sc
    m = len(hull)
    vis = [_orient(sc, hull[i], hull[(i + 1) % m], p) < 0 for i in range(m)]
    start = -1
    for i in range(m):
        if vis[i] and not vis[(i - 1) % m]:
            start = i
            break
    if start < 0:
        raise GeometryError(f"no hull edge visible from site {p}")
    count = 1
    while vis[(start + count) % m]:
        count += 1
    flip_seeds = []
    for t in range(count):
        i = (start + t) % m
        u, v = hull[i], hull[(i + 1) % m]
        builder.add(v, u, p)
        flip_seeds.append((u, v))
    arc_end = (start + count) % m
    new_hull = []
    i = arc_end
    while True:
        new_hull.append(hull[i])
        if i == start:
            break
        i = (i + 1) % m
    new_hull.append(p)
    hull[:] = new_hull
    builder.legalize(flip_seeds)


# ---------------------------------------------------------------------------
# Frozen mesh.


@dataclass(frozen=True)
class TriMesh:
    """Immutable indexed triangle mesh.

    Triangles are CCW index triples, each rotated so its smallest vertex
    comes first and listed in sorted order, so equal meshes serialize to
    equal bytes. The edge table and adjacency maps are derived caches and
    take no part in equality.
    """

    sites: SiteSet
    triangles: tuple[tuple[int, int, int], ...]
    constrained: frozenset[tuple[int, int]]
    _edge_tris: dict = field(init=False, repr=False, compare=False)
    _directed: dict = field(init=False, repr=False, compare=False)
    _vertex_tris: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        edge_tris: dict[tuple[int, int], tuple[int, ...]] = {}
        directed: dict[tuple[int, int], int] = {}
        vertex_tris: dict[int, list[int]] = {}
        for tid, (i, j, k) in enumerate(self.triangles):
            for u, v in ((i, j), (j, k), (k, i)):
                key = _edge_key(u, v)
                edge_tris[key] = edge_tris.get(key, ()) + (tid,)
                directed[(u, v)] = tid
            for u in (i, j, k):
                vertex_tris.setdefault(u, []).append(tid)
        object.__setattr__(self, "_edge_tris", edge_tris)
        object.__setattr__(self, "_directed", directed)
        object.__setattr__(self, "_vertex_tris", vertex_tris)

    # -- basic queries ------------------------------------------------------

    def __len__(self) -> int:
        return len(self.triangles)

    def check_triangle(self, t: int) -> tuple[int, int, int]:
        if not isinstance(t, int) or isinstance(t, bool) or not 0 <= t < len(self.triangles):
            raise IndexOutOfRange(f"triangle id {t!r} out of range 0..{len(self.triangles) - 1}")
        return self.triangles[t]

    def triangle_points(self, t: int) -> tuple[Point, Point, Point]:
        i, j, k = self.check_triangle(t)
        pts = self.sites.points
        return (pts[i], pts[j], pts[k])

    def triangle_polygon(self, t: int) -> Polygon:
        return Polygon(self.triangle_points(t))

    def circumcenter(self, t: int) -> Point:
        return self.circumscribed(t).center

    def circumscribed(self, t: int) -> CircumCircle:
        a, b, c = self.triangle_points(t)
        return circumcircle(a, b, c)

    def edges(self) -> list[tuple[int, int]]:
        return sorted(self._edge_tris)

    def has_edge(self, i: int, j: int) -> bool:
        return _edge_key(i, j) in self._edge_tris

    def edge_triangles(self, i: int, j: int) -> tuple[int, ...]:
        key = _edge_key(i, j)
        if key not in self._edge_tris:
            raise UnknownEdge(f"no mesh edge between sites {i} and {j}")
        return self._edge_tris[key]

    def is_hull_edge(self, i: int, j: int) -> bool:
        return len(self.edge_triangles(i, j)) == 1

    def is_constrained(self, i: int, j: int) -> bool:
        return _edge_key(i, j) in self.constrained

    def vertex_triangles(self, i: int) -> tuple[int, ...]:
        self.sites.check_index(i)
        return tuple(self._vertex_tris.get(i, ()))

    def directed_triangle(self, u: int, v: int) -> Optional[int]:
        return self._directed.get((u, v))

    def opposite_vertex(self, u: int, v: int) -> Optional[int]:
        """Apex of the triangle containing directed edge (u, v), if any."""
        tid = self._directed.get((u, v))
        if tid is None:
            return None
        tri = self.triangles[tid]
        for r in range(3):
            if tri[r] == u:
                return tri[(r + 2) % 3]
        return None

    def hull(self) -> list[int]:
        """Hull site indices in CCW order (collinear hull sites retained)."""
        outgoing = {}
        for (u, v) in self._directed:
            if (v, u) not in self._directed:
                outgoing[u] = v
        if not outgoing:
            return []
        start = min(outgoing)
        cycle = [start]
        cur = outgoing[start]
        while cur != start:
            cycle.append(cur)
            cur = outgoing[cur]
        return cycle

    def serialize_key(self) -> tuple:
        """Value identity used by determinism checks."""
        return (
            tuple((str(p.x), str(p.y)) for p in self.sites.points),
            self.triangles,
            tuple(sorted(self.constrained)),
        )


def adjacency(mesh: TriMesh, t: int) -> set[int]:
    """Triangle ids sharing a full edge with t."""
    i, j, k = mesh.check_triangle(t)
    out = set()
    for u, v in ((i, j), (j, k), (k, i)):
        for other in mesh.edge_triangles(u, v):
            if other != t:
                out.add(other)
    return out


def _freeze(sites: SiteSet, builder: _MeshBuilder) -> TriMesh:
    tris = []
    for tri in builder.tris.values():
        r = tri.index(min(tri))
        tris.append((tri[r], tri[(r + 1) % 3], tri[(r + 2) % 3]))
    tris.sort()
    return TriMesh(sites, tuple(tris), frozenset(builder.constrained))


def triangulate(sites: SiteSet) -> TriMesh:
    """Delaunay triangulation of the site set.

    Every triangle's open circumdisk contains no site; exactly cocircular
    groups are resolved deterministically in favor of lower site indices.
    """
    return _freeze(sites, _build_delaunay(sites))


# ---------------------------------------------------------------------------
# Constrained triangulation.


def _resolve_constraints(
    sites: SiteSet, constraints: ConstraintSet
) -> list[tuple[int, int]]:
    pairs = []
    for seg in constraints.segments:
        a = sites.index_of(seg.a)
        b = sites.index_of(seg.b)
        if a is None or b is None:
            raise GeometryError(f"constraint endpoint {seg.a if a is None else seg.b} is not a site")
        pairs.append((a, b))
    return pairs


def _validate_constraints(
    sites: SiteSet, constraints: ConstraintSet, pairs: Sequence[tuple[int, int]]
) -> None:
    segs = constraints.segments
    for idx, seg in enumerate(segs):
        for s, site in enumerate(sites.points):
            if s in pairs[idx]:
                continue
            if locate_point(site, seg) is PointLocation.INTERIOR:
                raise ConstraintThroughSite(
                    f"constraint {seg} passes through site #{s} {site}"
                )
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            hit = segment_intersection(segs[i], segs[j])
            if hit is None:
                continue
            if isinstance(hit, Segment):
                raise CrossingConstraints(
                    f"constraints {segs[i]} and {segs[j]} overlap along {hit}"
                )
            interior_i = locate_point(hit, segs[i]) is PointLocation.INTERIOR
            interior_j = locate_point(hit, segs[j]) is PointLocation.INTERIOR
            if interior_i and interior_j:
                raise CrossingConstraints(
                    f"constraints {segs[i]} and {segs[j]} cross at {hit}"
                )


def _insert_constraint(builder: _MeshBuilder, a: int, b: int) -> None:
    sc = builder.sc
    key = _edge_key(a, b)
    if (a, b) in builder.edge or (b, a) in builder.edge:
        builder.constrained.add(key)
        return

    # Find the triangle at a whose wedge contains the direction of b.
    entry = None
    for (u, v), tid in builder.edge.items():
        if u != a:
            continue
        x = v
        y = builder.apex(a, x)
        if _orient(sc, a, x, b) > 0 and _orient(sc, a, y, b) < 0:
            entry = (tid, x, y)
            break
    if entry is None:
        raise GeometryError(f"could not route constraint {a}-{b} through the mesh")

    tid, right, left = entry  # right of a->b, left of a->b
    dead = {tid}
    upper = [left]
    lower = [right]
    while True:
        if _edge_key(right, left) in builder.constrained:
            raise CrossingConstraints(
                f"constraint {a}-{b} crosses constrained edge {right}-{left}"
            )
        far = builder.edge.get((left, right))
        if far is None:
            raise GeometryError(f"constraint walk {a}-{b} fell off the mesh")
        dead.add(far)
        z = builder.apex(left, right)
        if z == b:
            break
        oz = _orient(sc, a, b, z)
        if oz == 0:
            raise ConstraintThroughSite(f"constraint {a}-{b} passes through site #{z}")
        if oz > 0:
            upper.append(z)
            left = z
        else:
            lower.append(z)
            right = z

    for t in dead:
        builder.remove(t)
    new_edges: list[tuple[int, int]] = []
    _retriangulate_cavity(builder, a, b, upper, new_edges)
    _retriangulate_cavity(builder, b, a, list(reversed(lower)), new_edges)
    builder.constrained.add(key)
    builder.legalize(new_edges)


def _retriangulate_cavity(
    builder: _MeshBuilder,
    a: int,
    b: int,
    chain: list[int],
    new_edges: list[tuple[int, int]],
) -> None:
    """Fill one side of a constraint cavity; chain vertices lie strictly
    left of a->b and run along the old cavity boundary from a to b."""
    if not chain:
        return
    c = 0
    for j in range(1, len(chain)):
        if _incircle_perturbed(builder.sc, a, b, chain[c], chain[j]) > 0:
            c = j
    builder.add(a, b, chain[c])
    new_edges.extend(((a, chain[c]), (chain[c], b)))
    _retriangulate_cavity(builder, a, chain[c], chain[:c], new_edges)
    _retriangulate_cavity(builder, chain[c], b, chain[c + 1 :], new_edges)


def constrained_triangulate(sites: SiteSet, constraints: ConstraintSet) -> TriMesh:
    """Triangulation of the sites containing every constraint as an edge.

    All non-constrained edges come out locally Delaunay, which pins the
    result down to the constrained Delaunay triangulation (up to the same
    cocircular tie-break as triangulate).
    """
    pairs = _resolve_constraints(sites, constraints)
    for a, b in pairs:
        if a == b:
            raise GeometryError("constraint endpoints coincide")
    _validate_constraints(sites, constraints, pairs)
    builder = _build_delaunay(sites)
    for a, b in pairs:
        _insert_constraint(builder, a, b)
    mesh = _freeze(sites, builder)
    for a, b in pairs:
        if not mesh.has_edge(a, b):  # pragma: no cover - construction guarantees it
            raise GeometryError(f"constraint {a}-{b} missing from mesh")
    return mesh


# ---------------------------------------------------------------------------
# Edge status and visibility predicates.


def is_locally_delaunay(mesh: TriMesh, edge: tuple[int, int]) -> bool:
    """Empty-circle status of one edge.

    Hull and constrained edges qualify by definition; an interior edge
    qualifies when the apex across it is not strictly inside the other
    triangle's circumcircle. Exactly cocircular apexes qualify.
    """
    i, j = edge
    tids = mesh.edge_triangles(i, j)  # raises UnknownEdge
    if len(tids) == 1 or mesh.is_constrained(i, j):
        return True
    c = mesh.opposite_vertex(i, j)
    d = mesh.opposite_vertex(j, i)
    pts = mesh.sites.points
    return in_circumcircle(pts[i], pts[j], pts[c], pts[d]) is not CirclePosition.INSIDE


def is_visible(
    sites: SiteSet, constraints: ConstraintSet, p: int, q: int
) -> bool:
    """Mutual visibility of two sites.

    Blocked by any third site in the open segment pq, and by any other
    constraint that shares a point interior to both it and pq.
    """
    sites.check_index(p)
    sites.check_index(q)
    if p == q:
        raise IndexOutOfRange("visibility query needs two distinct sites")
    seg = Segment(sites[p], sites[q])
    for s, site in enumerate(sites.points):
        if s in (p, q):
            continue
        if locate_point(site, seg) is PointLocation.INTERIOR:
            return False
    return not _constraint_blocked(seg, constraints, skip={_point_key(seg.a, seg.b)})


def _point_key(a: Point, b: Point) -> frozenset:
    return frozenset((a, b))


def _constraint_blocked(seg: Segment, constraints: ConstraintSet, skip=frozenset()) -> bool:
    for c in constraints.segments:
        if _point_key(c.a, c.b) in skip:
            continue
        hit = segment_intersection(seg, c)
        if hit is None:
            continue
        if isinstance(hit, Segment):
            return True  # positive overlap always has shared interior points
        if (
            locate_point(hit, seg) is PointLocation.INTERIOR
            and locate_point(hit, c) is PointLocation.INTERIOR
        ):
            return True
    return False


def _site_blocked(seg: Segment, sites: SiteSet, exclude: frozenset[int]) -> bool:
    for s, site in enumerate(sites.points):
        if s in exclude:
            continue
        if locate_point(site, seg) is PointLocation.INTERIOR:
            return True
    return False


def _visible_from_open_edge(
    sites: SiteSet, constraints: ConstraintSet, p: int, q: int, w: int
) -> bool:
    """True when site w can be seen from at least one interior point of pq.

    The blocked parameter set along pq changes only at finitely many
    critical parameters (alignments of the viewpoint with sites or
    constraint endpoints, and crossings of constraint carrier lines), so
    sampling one exact rational point inside each induced subinterval
    decides the existential.
    """
    a = sites[p]
    b = sites[q]
    wp = sites[w]
    dx = b.x - a.x
    dy = b.y - a.y

    def line_param(g: Point, h: Point) -> Optional[Fraction]:
        # Parameter t of line(g, h) meeting line(a, b), if unique.
        gx = h.x - g.x
        gy = h.y - g.y
        denom = gx * dy - gy * dx
        if denom == 0:
            return None
        t = ((a.y - g.y) * gx - (a.x - g.x) * gy) / -denom
        return t

    crits = {Fraction(0), Fraction(1)}
    for s, site in enumerate(sites.points):
        if s in (p, q, w):
            continue
        t = line_param(wp, site)
        if t is not None:
            crits.add(t)
    for c in constraints.segments:
        for end in (c.a, c.b):
            if end != wp:
                t = line_param(wp, end)
                if t is not None:
                    crits.add(t)
        t = line_param(c.a, c.b)
        if t is not None:
            crits.add(t)
    ordered = sorted(t for t in crits if 0 <= t <= 1)
    samples = [
        (ordered[i] + ordered[i + 1]) / 2
        for i in range(len(ordered) - 1)
        if ordered[i] != ordered[i + 1]
    ]
    exclude = frozenset((p, q, w))
    for t in samples:
        x = Point(a.x + t * dx, a.y + t * dy)
        if x == wp:
            continue
        ray = Segment(x, wp)
        if _site_blocked(ray, sites, exclude):
            continue
        if _constraint_blocked(ray, constraints):
            continue
        return True
    return False


def is_constrained_delaunay_edge(
    sites: SiteSet, constraints: ConstraintSet, p: int, q: int
) -> bool:
    """Membership of pq in the constrained Delaunay triangulation.

    Either pq is itself a constraint, or p and q see each other and some
    circle through them has no visible site strictly inside. Each site
    pins the admissible circle centers to a half-line along the bisector
    of pq, so feasibility reduces to comparing two rational bounds; the
    boundary circles are exactly those through p, q and one more site.
    """
    sites.check_index(p)
    sites.check_index(q)
    if p == q:
        raise IndexOutOfRange("edge query needs two distinct sites")
    pk = _point_key(sites[p], sites[q])
    if any(_point_key(c.a, c.b) == pk for c in constraints.segments):
        return True
    if not is_visible(sites, constraints, p, q):
        return False

    a = sites[p]
    b = sites[q]
    mx = (a.x + b.x) / 2
    my = (a.y + b.y) / 2
    nx = -(b.y - a.y)
    ny = b.x - a.x
    lower = None  # need center parameter >= lower
    upper = None  # need center parameter <= upper
    for w in range(len(sites)):
        if w in (p, q):
            continue
        wp = sites[w]
        rel_x = a.x - wp.x
        rel_y = a.y - wp.y
        alpha = 2 * (nx * rel_x + ny * rel_y)
        if alpha == 0:
            # w on the carrier line of pq: outside every circle through p, q
            # unless strictly between them, which visibility already rejected.
            continue
        if not _visible_from_open_edge(sites, constraints, p, q, w):
            continue
        beta = (
            2 * (mx * rel_x + my * rel_y)
            + wp.x * wp.x
            + wp.y * wp.y
            - a.x * a.x
            - a.y * a.y
        )
        s_w = -beta / alpha
        if alpha > 0:
            lower = s_w if lower is None else max(lower, s_w)
        else:
            upper = s_w if upper is None else min(upper, s_w)
    if lower is None or upper is None:
        return True
    return lower <= upper


def is_delaunay_edge(mesh: TriMesh, diagram, p: int, q: int) -> bool:
    """Delaunay-edge test straight from the defining relation: the two
    Voronoi cells must meet along a positive-length segment.

    Works from cell polygons rather than the mesh so it can cross-check
    the construction. `diagram` is the Voronoi dual of mesh.sites.
    """
    from .voronoi import cells_strongly_near  # local import: avoid a cycle

    return cells_strongly_near(diagram, p, q)


def is_delaunay_triangle(mesh: TriMesh, diagram, t: int) -> bool:
    """True when the triangle's circumcenter is the vertex shared by the
    closures of its three sites' Voronoi cells.

    Propagates DegenerateIntersection for cocircular configurations where
    four or more cells meet at the would-be vertex.
    """
    from .voronoi import common_vertex

    i, j, k = mesh.check_triangle(t)
    center = mesh.circumcenter(t)
    shared = common_vertex(diagram, i, j, k)
    return shared is not None and shared == center
