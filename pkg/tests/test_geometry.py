from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from proxitri.errors import CollinearInput, NonConvexInput, NotCCW
from proxitri.geometry import (
    CirclePosition,
    Orientation,
    Point,
    PointLocation,
    Polygon,
    Segment,
    circumcircle,
    convex_closed_intersection,
    convex_hull,
    convex_polygon_intersection,
    distance_sq,
    in_circumcircle,
    is_convex_polygon,
    locate_point,
    orientation,
    segment_intersection,
)

from oracles import clip_convex_intersection

coords = st.fractions(
    min_value=-20, max_value=20, max_denominator=8
)
points = st.builds(Point, coords, coords)


def P(x, y) -> Point:
    return Point(x, y)


class TestCoordinates:
    def test_string_literals_parse_exactly(self):
        p = P("0.1", "1/3")
        assert p.x == Fraction(1, 10)
        assert p.y == Fraction(1, 3)

    def test_floats_are_rejected(self):
        with pytest.raises(TypeError):
            P(0.5, 1)

    def test_degenerate_segment_rejected(self):
        with pytest.raises(ValueError):
            Segment(P(1, 1), P(1, 1))


class TestOrientation:
    def test_spec_triples(self):
        assert orientation(P(0, 0), P(1, 0), P(0, 1)) is Orientation.CCW
        assert orientation(P(0, 0), P(1, 1), P(2, 2)) is Orientation.COLLINEAR
        assert orientation(P(0, 0), P(0, 1), P(1, 0)) is Orientation.CW

    @given(points, points, points)
    def test_swap_antisymmetry_and_rotation_invariance(self, a, b, c):
        o = orientation(a, b, c)
        swapped = orientation(b, a, c)
        rotated = orientation(b, c, a)
        if o is Orientation.COLLINEAR:
            assert swapped is Orientation.COLLINEAR
        else:
            assert swapped is not o and swapped is not Orientation.COLLINEAR
        assert rotated is o


class TestCircumcircle:
    def test_right_triangle(self):
        cc = circumcircle(P(0, 0), P(4, 0), P(0, 4))
        assert cc.center == P(2, 2)
        assert cc.radius_sq == 8

    def test_bisector_solution(self):
        # perpendicular-bisector equations solved by hand for this triple
        cc = circumcircle(P(0, 0), P(2, 0), P(1, 1))
        assert cc.center == P(1, 0)
        assert cc.radius_sq == 1

    def test_collinear_rejected(self):
        with pytest.raises(CollinearInput):
            circumcircle(P(0, 0), P(1, 1), P(2, 2))

    @given(points, points, points)
    def test_center_equidistant(self, a, b, c):
        if orientation(a, b, c) is Orientation.COLLINEAR:
            with pytest.raises(CollinearInput):
                circumcircle(a, b, c)
            return
        cc = circumcircle(a, b, c)
        assert distance_sq(cc.center, a) == cc.radius_sq
        assert distance_sq(cc.center, b) == cc.radius_sq
        assert distance_sq(cc.center, c) == cc.radius_sq


class TestInCircumcircle:
    def test_spec_examples(self):
        a, b, c = P(0, 0), P(4, 0), P(0, 4)
        assert in_circumcircle(a, b, c, P(1, 1)) is CirclePosition.INSIDE
        assert in_circumcircle(a, b, c, P(4, 4)) is CirclePosition.ON
        assert in_circumcircle(a, b, c, P(5, 5)) is CirclePosition.OUTSIDE

    def test_not_ccw_rejected(self):
        with pytest.raises(NotCCW):
            in_circumcircle(P(0, 0), P(0, 4), P(4, 0), P(1, 1))

    @given(points, points, points)
    def test_defining_points_are_on(self, a, b, c):
        if orientation(a, b, c) is not Orientation.CCW:
            return
        for d in (a, b, c):
            assert in_circumcircle(a, b, c, d) is CirclePosition.ON

    @given(points, points, points, points)
    def test_matches_circumcircle_distance(self, a, b, c, d):
        if orientation(a, b, c) is not Orientation.CCW:
            return
        cc = circumcircle(a, b, c)
        assert in_circumcircle(a, b, c, d) is cc.position_of(d)


class TestSegmentIntersection:
    def test_crossing_diagonals(self):
        got = segment_intersection(
            Segment(P(0, 0), P(2, 2)), Segment(P(0, 2), P(2, 0))
        )
        assert got == P(1, 1)

    def test_collinear_overlap(self):
        got = segment_intersection(
            Segment(P(0, 0), P(2, 0)), Segment(P(1, 0), P(3, 0))
        )
        assert got == Segment(P(1, 0), P(2, 0))

    def test_parallel_disjoint(self):
        assert (
            segment_intersection(Segment(P(0, 0), P(1, 0)), Segment(P(0, 1), P(1, 1)))
            is None
        )

    def test_endpoint_touch(self):
        got = segment_intersection(
            Segment(P(0, 0), P(1, 0)), Segment(P(1, 0), P(2, 5))
        )
        assert got == P(1, 0)

    @given(points, points, points, points)
    def test_symmetry(self, a, b, c, d):
        if a == b or c == d:
            return
        s, t = Segment(a, b), Segment(c, d)
        assert segment_intersection(s, t) == segment_intersection(t, s)

    @given(points, points, points, points)
    def test_witness_lies_on_both(self, a, b, c, d):
        if a == b or c == d:
            return
        s, t = Segment(a, b), Segment(c, d)
        got = segment_intersection(s, t)
        if isinstance(got, Point):
            assert locate_point(got, s) is not PointLocation.EXTERIOR
            assert locate_point(got, t) is not PointLocation.EXTERIOR
        elif isinstance(got, Segment):
            for end in (got.a, got.b):
                assert locate_point(end, s) is not PointLocation.EXTERIOR
                assert locate_point(end, t) is not PointLocation.EXTERIOR


class TestPolygon:
    def test_normalization_canonicalizes(self):
        a = Polygon((P(4, 0), P(0, 4), P(0, 0)))
        b = Polygon((P(0, 0), P(2, 0), P(4, 0), P(0, 4)))  # collinear (2,0) dropped
        assert a == b
        assert a.vertices[0] == P(0, 0)

    def test_clockwise_rejected(self):
        with pytest.raises(ValueError):
            Polygon((P(0, 0), P(0, 4), P(4, 0)))

    def test_self_intersecting_rejected(self):
        with pytest.raises(ValueError):
            Polygon((P(0, 0), P(2, 2), P(2, 0), P(0, 2)))

    def test_degenerate_rejected(self):
        with pytest.raises(CollinearInput):
            Polygon((P(0, 0), P(1, 1), P(2, 2)))

    def test_area(self):
        assert Polygon((P(0, 0), P(2, 0), P(2, 2), P(0, 2))).area() == 4


class TestConvexity:
    def test_spec_examples(self):
        assert is_convex_polygon(Polygon((P(0, 0), P(4, 0), P(0, 4))))
        assert not is_convex_polygon(Polygon((P(0, 0), P(4, 0), P(1, 1), P(0, 4))))
        assert is_convex_polygon(Polygon((P(0, 0), P(2, 0), P(2, 2), P(0, 2))))


unit_square = Polygon((P(0, 0), P(2, 0), P(2, 2), P(0, 2)))
shifted_square = Polygon((P(1, 1), P(3, 1), P(3, 3), P(1, 3)))


class TestConvexIntersection:
    def test_axis_aligned_overlap(self):
        got = convex_polygon_intersection(unit_square, shifted_square)
        assert got == Polygon((P(1, 1), P(2, 1), P(2, 2), P(1, 2)))

    def test_idempotence(self):
        tri = Polygon((P(0, 0), P(4, 0), P(0, 4)))
        assert convex_polygon_intersection(tri, tri) == tri

    def test_disjoint_is_absent(self):
        tri = Polygon((P(0, 0), P(4, 0), P(0, 4)))
        square = Polygon((P(3, 3), P(5, 3), P(5, 5), P(3, 5)))
        assert clip_convex_intersection(tri, square) is None  # oracle agrees
        assert convex_polygon_intersection(tri, square) is None

    def test_nonconvex_rejected(self):
        bad = Polygon((P(0, 0), P(4, 0), P(1, 1), P(0, 4)))
        with pytest.raises(NonConvexInput):
            convex_polygon_intersection(bad, unit_square)

    def test_touching_edge_is_segment_not_polygon(self):
        right = Polygon((P(2, 0), P(4, 0), P(4, 2), P(2, 2)))
        assert convex_polygon_intersection(unit_square, right) is None
        closed = convex_closed_intersection(unit_square, right)
        assert closed == Segment(P(2, 0), P(2, 2))

    def test_touching_corner_is_point(self):
        corner = Polygon((P(2, 2), P(4, 2), P(4, 4), P(2, 4)))
        assert convex_closed_intersection(unit_square, corner) == P(2, 2)

    @given(st.lists(points, min_size=3, max_size=8), st.lists(points, min_size=3, max_size=8))
    @settings(max_examples=60)
    def test_matches_clipping_oracle(self, pts_a, pts_b):
        hull_a = convex_hull(pts_a)
        hull_b = convex_hull(pts_b)
        if len(hull_a) < 3 or len(hull_b) < 3:
            return
        pa, pb = Polygon(tuple(hull_a)), Polygon(tuple(hull_b))
        got = convex_polygon_intersection(pa, pb)
        expected = clip_convex_intersection(pa, pb)
        assert got == expected
        if got is not None:
            assert is_convex_polygon(got)


class TestLocatePoint:
    def test_segment_cases(self):
        seg = Segment(P(0, 0), P(2, 2))
        assert locate_point(P(1, 1), seg) is PointLocation.INTERIOR
        assert locate_point(P(0, 0), seg) is PointLocation.BOUNDARY
        assert locate_point(P(3, 3), seg) is PointLocation.EXTERIOR
        assert locate_point(P(1, 0), seg) is PointLocation.EXTERIOR

    def test_polygon_cases(self):
        tri = Polygon((P(0, 0), P(4, 0), P(0, 4)))
        assert locate_point(P(3, 3), tri) is PointLocation.EXTERIOR
        assert locate_point(P(1, 1), tri) is PointLocation.INTERIOR
        assert locate_point(P(2, 2), tri) is PointLocation.BOUNDARY
        assert locate_point(P(0, 0), tri) is PointLocation.BOUNDARY

    def test_nonconvex_polygon(self):
        poly = Polygon((P(0, 0), P(4, 0), P(1, 1), P(0, 4)))
        assert locate_point(P(2, 2), poly) is PointLocation.EXTERIOR
        assert locate_point(P(1, 1), poly) is PointLocation.BOUNDARY
        assert locate_point(P("0.5", "0.5"), poly) is PointLocation.INTERIOR

    @given(points, points, points)
    def test_segment_interior_is_collinear_non_endpoint(self, a, b, x):
        if a == b:
            return
        seg = Segment(a, b)
        if locate_point(x, seg) is PointLocation.INTERIOR:
            assert x not in (a, b)
            assert orientation(a, b, x) is Orientation.COLLINEAR
