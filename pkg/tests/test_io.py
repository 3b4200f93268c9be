from fractions import Fraction

import pytest

from proxitri.delaunay import SiteSet, is_locally_delaunay, triangulate
from proxitri.errors import ParseError
from proxitri.generate import generate_sites
from proxitri.geometry import Point, Polygon, Segment, distance_sq
from proxitri.io import (
    coord_literal,
    document_for_mesh,
    document_for_voronoi,
    format_site_file,
    geometry_literal,
    mesh_from_document,
    parse_constraint_file,
    parse_document,
    parse_frame,
    parse_geometry_literal,
    parse_site_file,
    render_document,
)
from proxitri.voronoi import voronoi_diagram


class TestCoordLiterals:
    @pytest.mark.parametrize(
        "value,expected",
        [
            (Fraction(5), "5"),
            (Fraction(-3), "-3"),
            (Fraction(5, 4), "1.25"),
            (Fraction(-1, 8), "-0.125"),
            (Fraction(1, 10), "0.1"),
            (Fraction(1, 3), "1/3"),
        ],
    )
    def test_rendering(self, value, expected):
        assert coord_literal(value) == expected
        assert Fraction(expected) == value  # always parses back exactly


class TestSiteFiles:
    def test_round_trip(self):
        points = generate_sites(12, 3, "uniform")
        text = format_site_file(points, "demo")
        sites = parse_site_file(text)
        assert sites.points == tuple(points)

    def test_comments_and_blanks_ignored(self):
        text = "# heading\n\nproxitri-sites 1\n# note\n0 0\n\n1 2.5\n"
        sites = parse_site_file(text)
        assert sites.points == (Point(0, 0), Point(1, "2.5"))

    def test_missing_header(self):
        with pytest.raises(ParseError):
            parse_site_file("0 0\n1 1\n")

    def test_duplicate_reports_line(self):
        text = "proxitri-sites 1\n0 0\n1 1\n0 0\n"
        with pytest.raises(ParseError) as err:
            parse_site_file(text, "x.sites")
        assert "x.sites:4" in str(err.value)

    def test_bad_literal_reports_line(self):
        with pytest.raises(ParseError) as err:
            parse_site_file("proxitri-sites 1\n0 zero\n")
        assert ":2" in str(err.value)

    def test_constraint_file(self):
        cs = parse_constraint_file("# c\n0 0 4 3\n1 1 2 2\n")
        assert len(cs) == 2
        assert cs.segments[0] == Segment(Point(0, 0), Point(4, 3))

    def test_frame_spec(self):
        rect = parse_frame("-1,-2.5,10,20")
        assert (rect.x0, rect.y0, rect.x1, rect.y1) == (
            Fraction(-1),
            Fraction(-5, 2),
            Fraction(10),
            Fraction(20),
        )
        with pytest.raises(ParseError):
            parse_frame("1,2,3")


class TestGeometryLiterals:
    @pytest.mark.parametrize(
        "geom",
        [
            None,
            Point("0.5", 2),
            Segment(Point(0, 0), Point("1.5", "2.25")),
            Polygon((Point(0, 0), Point(4, 0), Point(0, 4))),
        ],
    )
    def test_round_trip(self, geom):
        assert parse_geometry_literal(geometry_literal(geom)) == geom


class TestDocuments:
    def build_model(self):
        sites = SiteSet.of([(0, 0), (4, 0), (0, 4), (1, 1)])
        mesh = triangulate(sites)
        flags = {e: is_locally_delaunay(mesh, e) for e in mesh.edges()}
        model = document_for_mesh(mesh, flags)
        model["voronoi"] = document_for_voronoi(voronoi_diagram(sites))
        model["regions"] = [[0, 1, 2]]
        model["queries"] = [
            {
                "relation": "strong",
                "a": "t:0",
                "b": "t:1",
                "verdict": True,
                "witness": geometry_literal(Segment(Point(0, 0), Point(1, 1))),
            }
        ]
        model["checks"] = [{"name": "demo/x", "status": "pass", "witness": "-"}]
        model["stats"] = {"convex_region_fraction": "1"}
        return mesh, model

    def test_document_round_trip(self):
        _, model = self.build_model()
        text = render_document(model, "document")
        assert text.startswith("proxitri-document 1\n")
        assert parse_document(text) == model

    def test_json_round_trip(self):
        _, model = self.build_model()
        text = render_document(model, "json-like")
        assert parse_document(text) == model

    def test_mesh_reconstruction(self):
        mesh, model = self.build_model()
        rebuilt = mesh_from_document(parse_document(render_document(model)))
        assert rebuilt == mesh

    def test_constrained_mesh_reconstruction(self):
        from proxitri.delaunay import ConstraintSet, constrained_triangulate

        sites = SiteSet.of([(0, 0), (4, 0), (4, 3), (0, 3)])
        mesh = constrained_triangulate(sites, ConstraintSet.of([(4, 0, 0, 3)]))
        flags = {e: is_locally_delaunay(mesh, e) for e in mesh.edges()}
        model = document_for_mesh(mesh, flags)
        rebuilt = mesh_from_document(parse_document(render_document(model)))
        assert rebuilt == mesh
        assert rebuilt.is_constrained(1, 3)

    def test_schema_mismatch_rejected(self):
        with pytest.raises(ParseError):
            parse_document('{"schema": "other/9"}')
        with pytest.raises(ParseError):
            parse_document("unexpected 1\n")


class TestGenerator:
    def test_deterministic(self):
        a = generate_sites(20, 5, "clustered")
        b = generate_sites(20, 5, "clustered")
        assert a == b

    def test_distinct_points(self):
        for dist in ("uniform", "clustered", "cocircular", "collinear-heavy"):
            pts = generate_sites(24, 11, dist)
            assert len(set(pts)) == 24

    def test_cocircular_mode_places_exact_circle_points(self):
        from proxitri.generate import COCIRCULAR_CENTER, COCIRCULAR_RADIUS

        pts = generate_sites(8, 7, "cocircular")
        center = Point(*COCIRCULAR_CENTER)
        on_circle = [
            p for p in pts if distance_sq(p, center) == COCIRCULAR_RADIUS**2
        ]
        assert len(on_circle) >= 4

    def test_collinear_heavy_triangulates(self):
        sites = SiteSet(tuple(generate_sites(15, 3, "collinear-heavy")))
        mesh = triangulate(sites)
        assert len(mesh) > 0

    def test_bad_count(self):
        from proxitri.errors import BadCount

        with pytest.raises(BadCount):
            generate_sites(2, 0, "uniform")
