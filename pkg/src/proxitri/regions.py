"""Triangulation regions and neighborhood families.

A region is a set of mesh triangles in which every pair shares a full
edge (a clique of the edge-adjacency graph). Because a triangle has only
three edges and edge-adjacent triangles of a planar triangulation cannot
form a 4-clique, maximal regions have at most three members and direct
enumeration is cheap. Connected-component grouping is also available as
an explicitly separate mode for comparison; it is not the default reading.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .delaunay import TriMesh, adjacency
from .errors import GeometryError, MixedMeshes, UnionHasHole
from .geometry import Polygon
from .proximity import strongly_near_triangles


@dataclass(frozen=True)
class Region:
    """Pairwise edge-adjacent triangle collection from one mesh.

    Construction checks the clique property. Maximality is a property of
    extract_regions output, not of the type: sub-cliques are legal values
    (they are what the union/convexity queries get exercised on).
    """

    mesh: TriMesh
    triangles: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "triangles", frozenset(self.triangles))
        if not self.triangles:
            raise GeometryError("region needs at least one triangle")
        members = sorted(self.triangles)
        for t in members:
            self.mesh.check_triangle(t)
        for i, t in enumerate(members):
            for u in members[i + 1 :]:
                if not strongly_near_triangles(self.mesh, t, u):
                    raise GeometryError(
                        f"triangles {t} and {u} do not share an edge; not a region"
                    )

    def members(self) -> list[int]:
        return sorted(self.triangles)


@dataclass(frozen=True)
class LeaderNeighborhood:
    """All triangles near a given anchor triangle (anchor excluded)."""

    anchor: int
    neighbors: frozenset[int]


def extract_regions(mesh: TriMesh) -> list[Region]:
    """All maximal regions of the mesh, deterministically ordered.

    Every triangle belongs to at least one region (a lone triangle is its
    own singleton region).
    """
    n = len(mesh)
    adj = {t: adjacency(mesh, t) for t in range(n)}
    cliques: set[frozenset[int]] = set()
    for t in range(n):
        cliques.add(frozenset((t,)))
        neighborhood = sorted(adj[t])
        for i, u in enumerate(neighborhood):
            cliques.add(frozenset((t, u)))
            for v in neighborhood[i + 1 :]:
                if v in adj[u]:
                    cliques.add(frozenset((t, u, v)))
    maximal = [c for c in cliques if not any(c < other for other in cliques)]
    maximal.sort(key=lambda c: sorted(c))
    return [Region(mesh, c) for c in maximal]


def connected_components(mesh: TriMesh) -> list[frozenset[int]]:
    """Edge-connected triangle groups; the non-default comparison grouping.

    These are not regions in general (connectivity does not give pairwise
    adjacency), hence the distinct return type.
    """
    seen: set[int] = set()
    out = []
    for t in range(len(mesh)):
        if t in seen:
            continue
        stack = [t]
        comp = set()
        while stack:
            cur = stack.pop()
            if cur in comp:
                continue
            comp.add(cur)
            stack.extend(adjacency(mesh, cur) - comp)
        seen |= comp
        out.append(frozenset(comp))
    out.sort(key=lambda c: sorted(c))
    return out


def proximal_region_pairs(regions: list[Region]) -> list[tuple[int, int]]:
    """Indices of region pairs sharing at least one mesh vertex."""
    if not regions:
        return []
    mesh = regions[0].mesh
    if any(r.mesh is not mesh and r.mesh != mesh for r in regions):
        raise MixedMeshes("regions come from different meshes")
    vertex_sets = []
    for r in regions:
        verts: set[int] = set()
        for t in r.members():
            verts.update(mesh.triangles[t])
        vertex_sets.append(verts)
    pairs = []
    for i in range(len(regions)):
        for j in range(i + 1, len(regions)):
            if vertex_sets[i] & vertex_sets[j]:
                pairs.append((i, j))
    return pairs


def region_union_polygon(region: Region) -> Polygon:
    """Outer boundary of the union of the region's triangles.

    Directed triangle edges whose reverse is not used by another member
    are the boundary; chaining them must yield a single loop, otherwise
    the union is not a simple polygon (hole or pinch) and UnionHasHole is
    raised.
    """
    mesh = region.mesh
    members = region.members()
    directed: set[tuple[int, int]] = set()
    for t in members:
        i, j, k = mesh.triangles[t]
        directed.update(((i, j), (j, k), (k, i)))
    boundary = {(u, v): False for (u, v) in directed if (v, u) not in directed}
    nxt: dict[int, list[int]] = {}
    for u, v in boundary:
        nxt.setdefault(u, []).append(v)
    if any(len(vs) > 1 for vs in nxt.values()):
        raise UnionHasHole("union boundary pinches at a vertex")
    start = min(nxt)
    loop = [start]
    cur = nxt[start][0]
    while cur != start:
        loop.append(cur)
        cur = nxt[cur][0]
    if len(loop) != len(boundary):
        raise UnionHasHole("union boundary is not a single loop")
    pts = mesh.sites.points
    return Polygon(tuple(pts[i] for i in loop))


def is_region_convex(region: Region) -> bool:
    """Convexity of the region's union polygon."""
    from .geometry import is_convex_polygon

    return is_convex_polygon(region_union_polygon(region))


def region_common_intersection(region: Region):
    """Intersection of the closures of all member triangles.

    The alternative reading of a region as an intersection rather than a
    union: a single triangle yields itself, an edge-sharing pair yields
    the shared edge, and larger cliques collapse to an edge or a vertex.
    Returns a Polygon, Segment, Point, or None.
    """
    from .geometry import Point, Segment, convex_closed_intersection, locate_point
    from .geometry import PointLocation, segment_intersection

    mesh = region.mesh
    members = region.members()
    acc = mesh.triangle_polygon(members[0])
    for t in members[1:]:
        poly = mesh.triangle_polygon(t)
        if acc is None:
            return None
        if isinstance(acc, Point):
            if locate_point(acc, poly) is PointLocation.EXTERIOR:
                return None
        elif isinstance(acc, Segment):
            hits = []
            for end in (acc.a, acc.b):
                if locate_point(end, poly) is not PointLocation.EXTERIOR:
                    hits.append(end)
            for edge in poly.edges():
                hit = segment_intersection(acc, edge)
                if isinstance(hit, Point):
                    hits.append(hit)
                elif isinstance(hit, Segment):
                    hits.extend((hit.a, hit.b))
            if not hits:
                return None
            ordered = sorted(set(hits), key=Point.key)
            acc = ordered[0] if ordered[0] == ordered[-1] else Segment(ordered[0], ordered[-1])
        else:
            acc = convex_closed_intersection(acc, poly)
    return acc


def leader_neighborhoods(
    mesh: TriMesh, scope: Optional[Region] = None
) -> list[LeaderNeighborhood]:
    """Near-neighbor family of every triangle (the local topology builder).

    With a scope region, both the anchors and the neighbor candidates are
    restricted to the region's members.
    """
    if scope is not None and scope.mesh != mesh:
        raise MixedMeshes("scope region belongs to a different mesh")
    anchors = scope.members() if scope is not None else list(range(len(mesh)))
    allowed = set(anchors)
    vert_tris: dict[int, set[int]] = {}
    for t in anchors:
        for v in mesh.triangles[t]:
            vert_tris.setdefault(v, set()).add(t)
    out = []
    for t in anchors:
        near_set: set[int] = set()
        for v in mesh.triangles[t]:
            near_set |= vert_tris[v]
        near_set.discard(t)
        out.append(LeaderNeighborhood(anchor=t, neighbors=frozenset(near_set & allowed)))
    return out
