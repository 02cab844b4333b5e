#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "orthoext/geometry.hpp"
#include "orthoext/ortho_path.hpp"

using namespace orthoext;

TEST_CASE("axis segment intersection cases") {
    Segment h1{{0, 0}, {2, 0}};
    Segment h2{{0, 1}, {2, 1}};
    CHECK(intersect_axis_segments(h1, h2).kind == SegContact::None);

    Segment v1{{1, -1}, {1, 1}};
    auto is = intersect_axis_segments(h1, v1);
    CHECK(is.kind == SegContact::Point);
    CHECK(is.at == Point{1, 0});

    Segment h3{{1, 0}, {3, 0}};
    CHECK(intersect_axis_segments(h1, h3).kind == SegContact::Overlap);

    Segment h4{{2, 0}, {3, 0}};
    auto touch = intersect_axis_segments(h1, h4);
    CHECK(touch.kind == SegContact::Point);
    CHECK(touch.at == Point{2, 0});

    CHECK(segments_conflict(h1, v1));
    CHECK(!segments_conflict(h1, h4));
    CHECK(segments_conflict(h1, h3));
}

TEST_CASE("point in rectilinear polygon") {
    std::vector<Point> square{{0, 0}, {4, 0}, {4, 4}, {0, 4}};
    CHECK(point_strictly_inside({2, 2}, square));
    CHECK(!point_strictly_inside({5, 2}, square));
    CHECK(!point_strictly_inside({4, 2}, square));  // boundary is not inside
    CHECK(point_on_polygon_boundary({4, 2}, square));
    CHECK(polygon_signed_area2(square) == 32);

    std::vector<Point> cw{{0, 0}, {0, 4}, {4, 4}, {4, 0}};
    CHECK(polygon_signed_area2(cw) == -32);
}

TEST_CASE("polygon with doubled bridge segments keeps correct parity") {
    // Square with a whisker traversed both ways.
    std::vector<Point> walk{{0, 0}, {4, 0}, {4, 4}, {2, 4}, {2, 6}, {2, 4}, {0, 4}};
    CHECK(point_strictly_inside({1, 1}, walk));
    CHECK(!point_strictly_inside({1, 5}, walk));
    CHECK(polygon_signed_area2(walk) == 32);
}

TEST_CASE("ortho path validation") {
    OrthoPath ok{{{0, 0}, {2, 0}, {2, 3}}};
    CHECK(!ok.validate().has_value());
    CHECK(ok.bend_count() == 1);
    CHECK(ok.port_at({0, 0}) == PortDir::East);
    CHECK(ok.port_at({2, 3}) == PortDir::South);

    OrthoPath diag{{{0, 0}, {1, 1}}};
    CHECK(diag.validate().has_value());
    OrthoPath collinear{{{0, 0}, {1, 0}, {2, 0}}};
    CHECK(collinear.validate().has_value());
    OrthoPath doubled{{{0, 0}, {2, 0}, {1, 0}}};
    CHECK(doubled.validate().has_value());

    OrthoPath simp = OrthoPath::simplified({{0, 0}, {1, 0}, {2, 0}, {2, 2}});
    CHECK(simp.points == std::vector<Point>{{0, 0}, {2, 0}, {2, 2}});
}

TEST_CASE("rational normalization") {
    Rational r(3, 24);
    CHECK(r.num == 1);
    CHECK(r.den == 8);
    CHECK(Rational(6, 8).str() == "3/4");
    CHECK(Rational(-2, -4) == Rational(1, 2));
}

TEST_CASE("distances") {
    CHECK(linf({0, 0}, {3, -5}) == 5);
    CHECK(segment_linf_distance({{0, 0}, {4, 0}}, {{6, 1}, {6, 5}}) == 2);
    CHECK(point_segment_linf_distance({2, 3}, {{0, 0}, {4, 0}}) == 3);
}
