from fractions import Fraction

import pytest

from proxitri.delaunay import SiteSet
from proxitri.errors import DegenerateIntersection, FrameTooSmall, IndexOutOfRange
from proxitri.geometry import (
    Point,
    PointLocation,
    Polygon,
    Rect,
    Segment,
    distance_sq,
    is_convex_polygon,
    locate_point,
)
from proxitri.voronoi import (
    cells_strongly_near,
    closed_cell_intersection,
    common_vertex,
    voronoi_diagram,
)

from oracles import halfplane_cell


def sites_of(*coords) -> SiteSet:
    return SiteSet.of(list(coords))


class TestConstruction:
    def test_five_site_center_cell(self):
        diagram = voronoi_diagram(sites_of((0, 0), (2, 0), (0, 2), (2, 2), (1, 1)))
        cell = diagram.cells[4]
        assert cell.polygon == Polygon(
            (Point(1, 0), Point(2, 1), Point(1, 2), Point(0, 1))
        )
        assert not cell.unbounded
        neighbors = {e.neighbor for e in cell.edges}
        assert neighbors == {0, 1, 2, 3}

    def test_three_site_unbounded_cells(self):
        diagram = voronoi_diagram(sites_of((0, 0), (4, 0), (0, 4)))
        assert [c.unbounded for c in diagram.cells] == [True, True, True]
        assert diagram.vertices == (Point(2, 2),)
        for cell in diagram.cells:
            frame_edges = [e for e in cell.edges if e.neighbor is None]
            assert frame_edges  # every clipped cell borders the frame

    def test_frame_too_small(self):
        sites = sites_of((0, 0), (4, 0), (0, 4))
        with pytest.raises(FrameTooSmall):
            voronoi_diagram(sites, Rect(-1, -1, Fraction(3, 2), Fraction(3, 2)))

    def test_frame_must_cover_circumcenters_too(self):
        # flat triangle: circumcenter far below the site bounding box
        sites = sites_of((0, 0), (4, 0), (2, "0.1"))
        with pytest.raises(FrameTooSmall):
            voronoi_diagram(sites, Rect(-1, -1, 5, 1))
        diagram = voronoi_diagram(sites)  # default frame adapts
        assert diagram.frame.contains_strict(diagram.vertices[0])

    def test_site_interior_to_cell(self, corpus):
        for entry in corpus[:8]:
            for cell in entry.diagram.cells:
                site = entry.sites[cell.site]
                assert locate_point(site, cell.polygon) is PointLocation.INTERIOR

    def test_cells_convex(self, corpus):
        for entry in corpus[:8]:
            for cell in entry.diagram.cells:
                assert is_convex_polygon(cell.polygon)

    def test_bounded_vertices_are_circumcenters(self, corpus):
        for entry in corpus[:8]:
            diagram = entry.diagram
            centers = set(diagram.vertices)
            for cell in diagram.cells:
                for v in cell.polygon.vertices:
                    if not diagram.frame.on_boundary(v):
                        assert v in centers

    def test_cells_tile_frame(self, corpus):
        for entry in corpus[:6]:
            diagram = entry.diagram
            f = diagram.frame
            frame_area = (f.x1 - f.x0) * (f.y1 - f.y0)
            total = sum(
                (c.polygon.area() for c in diagram.cells), start=Fraction(0)
            )
            assert total == frame_area

    def test_matches_halfplane_oracle(self, corpus):
        for entry in corpus[:8]:
            diagram = entry.diagram
            for cell in diagram.cells:
                expected = halfplane_cell(entry.sites, cell.site, diagram.frame)
                assert cell.polygon == expected

    def test_nearest_site_property_on_vertices(self, corpus):
        # every cell corner is at least as close to its own site as to others
        for entry in corpus[:6]:
            for cell in entry.diagram.cells:
                own = entry.sites[cell.site]
                for v in cell.polygon.vertices:
                    d_own = distance_sq(v, own)
                    assert all(
                        distance_sq(v, other) >= d_own for other in entry.sites.points
                    )


class TestCommonVertex:
    def test_single_triangle(self):
        diagram = voronoi_diagram(sites_of((0, 0), (4, 0), (0, 4)))
        assert common_vertex(diagram, 0, 1, 2) == Point(2, 2)

    def test_fan_outer_cells_share_nothing(self, fan_sites):
        diagram = voronoi_diagram(fan_sites)
        assert common_vertex(diagram, 0, 1, 2) is None

    def test_cocircular_square_degenerates(self):
        diagram = voronoi_diagram(sites_of((0, 0), (2, 0), (2, 2), (0, 2)))
        from itertools import combinations

        for trio in combinations(range(4), 3):
            with pytest.raises(DegenerateIntersection):
                common_vertex(diagram, *trio)

    def test_distinct_indices_required(self, fan_sites):
        diagram = voronoi_diagram(fan_sites)
        with pytest.raises(IndexOutOfRange):
            common_vertex(diagram, 0, 0, 1)

    def test_matches_circumcenters_on_corpus(self, corpus):
        for entry in corpus[:8]:
            diagram = entry.diagram
            for t, (i, j, k) in enumerate(diagram.mesh.triangles):
                assert common_vertex(diagram, i, j, k) == diagram.vertices[t]


class TestStrongNearness:
    def test_pentagon_figure_configuration(self):
        # configuration shaped like the figure: p's cell is a pentagon, the
        # p/q cells share a segment, and edge pr stays far from it
        sites = sites_of(
            ("4.5", "2"),
            ("5.95", "1.55"),
            ("5.35", "3.25"),
            ("3.1", "1.1"),
            ("3.2", "3"),
            ("4.7", "0.5"),
            ("5.9", "0.6"),
        )
        diagram = voronoi_diagram(sites)
        mesh = diagram.mesh
        assert mesh.has_edge(0, 1) and mesh.has_edge(0, 2)
        cell_p = diagram.cells[0]
        assert not cell_p.unbounded
        assert len(cell_p.polygon.vertices) == 5
        assert cells_strongly_near(diagram, 0, 1)
        shared = closed_cell_intersection(diagram, 0, 1)
        assert isinstance(shared, Segment)
        # the oracle cells agree on the shared segment
        oracle_p = halfplane_cell(sites, 0, diagram.frame)
        oracle_q = halfplane_cell(sites, 1, diagram.frame)
        for end in (shared.a, shared.b):
            assert locate_point(end, oracle_p) is not PointLocation.EXTERIOR
            assert locate_point(end, oracle_q) is not PointLocation.EXTERIOR

    def test_separated_pair(self):
        diagram = voronoi_diagram(sites_of((0, 0), (2, 0), (4, 0), (2, 1)))
        assert not cells_strongly_near(diagram, 0, 2)

    def test_same_index_rejected(self, fan_sites):
        diagram = voronoi_diagram(fan_sites)
        with pytest.raises(IndexOutOfRange):
            cells_strongly_near(diagram, 1, 1)

    def test_duality_with_mesh_edges(self, corpus):
        from itertools import combinations

        for entry in corpus[:8]:
            diagram = entry.diagram
            for p, q in combinations(range(len(entry.sites)), 2):
                assert cells_strongly_near(diagram, p, q) == diagram.mesh.has_edge(p, q)

    def test_cocircular_square_diagonals_not_strong(self):
        diagram = voronoi_diagram(sites_of((0, 0), (2, 0), (2, 2), (0, 2)))
        # the mesh carries a tie-break diagonal, but the cells only share a point
        assert diagram.mesh.has_edge(0, 2)
        assert not cells_strongly_near(diagram, 0, 2)
        assert closed_cell_intersection(diagram, 0, 2) == Point(1, 1)
