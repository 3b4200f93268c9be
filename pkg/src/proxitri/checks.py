"""Executable property checks behind the `check` CLI command.

Each suite turns one structural claim about the constructions into a
pass/fail verdict with a minimal witness on failure. Exactly-degenerate
inputs (four or more cocircular sites) surface as "degenerate-skip"
rather than "fail": the claims are stated for three-cell meeting points
and general-position duals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .delaunay import SiteSet, TriMesh
from .errors import DegenerateIntersection
from .geometry import CirclePosition, Point, Rect, in_circumcircle, segment_intersection
from .proximity import near, triangles_near
from .regions import (
    extract_regions,
    is_region_convex,
    leader_neighborhoods,
    region_union_polygon,
)
from .voronoi import (
    VoronoiDiagram,
    cells_strongly_near,
    closed_cell_intersection,
    common_vertex,
    voronoi_diagram,
)

SUITES = ("delaunay", "dual", "lemma2", "theorem-equivalence", "regions", "leader", "all")


@dataclass
class CheckResult:
    name: str
    status: str  # pass | fail | degenerate-skip
    witness: str = "-"

    @property
    def failed(self) -> bool:
        return self.status == "fail"


def run_checks(
    suite: str,
    sites: SiteSet,
    frame: Optional[Rect] = None,
) -> tuple[list[CheckResult], dict]:
    """Run one suite (or all) against the sites; returns results and stats."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    wanted = SUITES[:-1] if suite == "all" else (suite,)
    diagram = voronoi_diagram(sites, frame)
    mesh = diagram.mesh
    results: list[CheckResult] = []
    stats: dict = {}
    if "delaunay" in wanted:
        results.extend(_check_delaunay(mesh))
    if "dual" in wanted:
        results.extend(_check_dual(diagram))
    if "lemma2" in wanted:
        results.extend(_check_lemma2(diagram))
    if "theorem-equivalence" in wanted:
        results.extend(_check_theorem_equivalence(diagram))
    if "regions" in wanted:
        region_results, region_stats = _check_regions(mesh)
        results.extend(region_results)
        stats.update(region_stats)
    if "leader" in wanted:
        results.extend(_check_leader(mesh))
    return results, stats


def _site_inside_circumdisk(mesh: TriMesh, t: int) -> Optional[int]:
    i, j, k = mesh.triangles[t]
    pts = mesh.sites.points
    for d in range(len(pts)):
        if d in (i, j, k):
            continue
        if in_circumcircle(pts[i], pts[j], pts[k], pts[d]) is CirclePosition.INSIDE:
            return d
    return None


def _check_delaunay(mesh: TriMesh) -> list[CheckResult]:
    results = []
    bad = None
    for t in range(len(mesh)):
        hit = _site_inside_circumdisk(mesh, t)
        if hit is not None:
            bad = f"triangle-{t}:site-{hit}-inside"
            break
    results.append(
        CheckResult("delaunay/empty-circumdisk", "fail" if bad else "pass", bad or "-")
    )
    n = len(mesh.sites)
    h = len(mesh.hull())
    t_ok = len(mesh) == 2 * n - h - 2
    e_ok = len(mesh.edges()) == 3 * n - h - 3
    results.append(
        CheckResult(
            "delaunay/euler-counts",
            "pass" if (t_ok and e_ok) else "fail",
            "-" if (t_ok and e_ok) else f"n={n},h={h},t={len(mesh)},e={len(mesh.edges())}",
        )
    )
    return results


def _degenerate_point(diagram: VoronoiDiagram, u: Point) -> bool:
    """True when four or more sites are jointly nearest to u."""
    dists = sorted(
        Fraction((u.x - s.x) ** 2 + (u.y - s.y) ** 2) for s in diagram.sites.points
    )
    return len(dists) >= 4 and dists[0] == dists[3]


def _check_dual(diagram: VoronoiDiagram) -> list[CheckResult]:
    mesh = diagram.mesh
    n = len(diagram.sites)
    bad = None
    degenerate = None
    for p, q in combinations(range(n), 2):
        in_mesh = mesh.has_edge(p, q)
        contact = closed_cell_intersection(diagram, p, q)
        strong = cells_strongly_near(diagram, p, q)
        if in_mesh == strong:
            continue
        if isinstance(contact, Point) and _degenerate_point(diagram, contact):
            degenerate = f"pair-{p}-{q}:cocircular-contact"
            continue
        bad = f"pair-{p}-{q}:mesh={in_mesh},voronoi={strong}"
        break
    if bad:
        return [CheckResult("dual/edge-definition", "fail", bad)]
    if degenerate:
        return [CheckResult("dual/edge-definition", "degenerate-skip", degenerate)]
    return [CheckResult("dual/edge-definition", "pass")]


def _check_lemma2(diagram: VoronoiDiagram) -> list[CheckResult]:
    mesh = diagram.mesh
    results = []
    for t in range(len(mesh)):
        i, j, k = mesh.triangles[t]
        name = f"lemma2/triangle-{t}"
        try:
            shared = common_vertex(diagram, i, j, k)
        except DegenerateIntersection:
            results.append(CheckResult(name, "degenerate-skip", "cocircular-vertex"))
            continue
        center = diagram.vertices[t]
        if shared == center:
            results.append(CheckResult(name, "pass"))
        else:
            results.append(
                CheckResult(name, "fail", f"circumcenter-{center}!=vertex-{shared}")
            )
    return results


def _check_theorem_equivalence(diagram: VoronoiDiagram) -> list[CheckResult]:
    mesh = diagram.mesh
    results = []
    for t in range(len(mesh)):
        i, j, k = mesh.triangles[t]
        name = f"theorem-equivalence/triangle-{t}"
        empty_disk = _site_inside_circumdisk(mesh, t) is None
        try:
            shared = common_vertex(diagram, i, j, k)
        except DegenerateIntersection:
            results.append(CheckResult(name, "degenerate-skip", "cocircular-vertex"))
            continue
        center_is_vertex = shared is not None and shared == diagram.vertices[t]
        pairwise_strong = all(
            cells_strongly_near(diagram, a, b) for a, b in ((i, j), (j, k), (k, i))
        )
        if empty_disk == center_is_vertex == pairwise_strong:
            results.append(CheckResult(name, "pass"))
        else:
            results.append(
                CheckResult(
                    name,
                    "fail",
                    f"empty-disk={empty_disk},vertex={center_is_vertex},strong={pairwise_strong}",
                )
            )
        # Edge-pair decomposition: triangle edges are convex pieces meeting
        # exactly in their shared vertices.
        poly = mesh.triangle_polygon(t)
        edges = poly.edges()
        decomposition_ok = True
        for e, f in combinations(edges, 2):
            hit = segment_intersection(e, f)
            if not isinstance(hit, Point):
                decomposition_ok = False
        results.append(
            CheckResult(
                f"theorem-equivalence/edge-pairs-triangle-{t}",
                "pass" if decomposition_ok else "fail",
            )
        )
    return results


def _check_regions(mesh: TriMesh) -> tuple[list[CheckResult], dict]:
    regions = extract_regions(mesh)
    results = []
    covered: set[int] = set()
    sound = True
    witness = "-"
    for idx, region in enumerate(regions):
        covered |= region.triangles
        members = region.members()
        # Region construction already checks the clique; verify maximality.
        for t in range(len(mesh)):
            if t in region.triangles:
                continue
            if all(
                len(set(mesh.triangles[t]) & set(mesh.triangles[u])) == 2
                for u in members
            ):
                sound = False
                witness = f"region-{idx}:not-maximal:misses-{t}"
                break
        if not sound:
            break
    results.append(CheckResult("regions/maximal-cliques", "pass" if sound else "fail", witness))
    cover_ok = covered == set(range(len(mesh)))
    results.append(
        CheckResult(
            "regions/cover",
            "pass" if cover_ok else "fail",
            "-" if cover_ok else f"missing-{sorted(set(range(len(mesh))) - covered)}",
        )
    )
    area_ok = True
    area_witness = "-"
    convex = 0
    for idx, region in enumerate(regions):
        poly = region_union_polygon(region)
        total = sum(
            (mesh.triangle_polygon(t).area() for t in region.members()),
            start=Fraction(0),
        )
        if poly.area() != total:
            area_ok = False
            area_witness = f"region-{idx}:union-area-mismatch"
        if is_region_convex(region):
            convex += 1
    results.append(CheckResult("regions/union-area-additivity", "pass" if area_ok else "fail", area_witness))
    stats = {
        "regions": str(len(regions)),
        "convex_regions": str(convex),
        "convex_region_fraction": str(Fraction(convex, len(regions)) if regions else Fraction(0)),
    }
    return results, stats


def _check_leader(mesh: TriMesh) -> list[CheckResult]:
    hoods = {h.anchor: h.neighbors for h in leader_neighborhoods(mesh)}
    sym_ok = all(
        (a in hoods[b]) == (b in hoods[a])
        for a, b in combinations(range(len(mesh)), 2)
    )
    results = [CheckResult("leader/symmetry", "pass" if sym_ok else "fail")]
    bad = None
    polys = [mesh.triangle_polygon(t) for t in range(len(mesh))]
    for a, b in combinations(range(len(mesh)), 2):
        combinatorial = b in hoods[a]
        geometric = near(polys[a], polys[b]).is_near
        index_near = triangles_near(mesh, a, b)
        if not (combinatorial == geometric == index_near):
            bad = f"pair-{a}-{b}:family={combinatorial},geometric={geometric},indices={index_near}"
            break
    results.append(
        CheckResult("leader/geometric-agreement", "fail" if bad else "pass", bad or "-")
    )
    return results
