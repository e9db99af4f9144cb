#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "hallplane/build.hpp"

using namespace hallplane;

TEST_CASE("counts of the order-9 Hall plane") {
    PlaneTables pt = make_hall_plane(3, 1);
    CHECK(pt.order() == 9);
    CHECK(pt.num_points() == 91);
    CHECK(pt.num_lines() == 91);
    CHECK(pt.num_affine_lines() == 90);
    CHECK(pt.num_bf() == 36);
    CHECK(pt.num_nbf() == 54);
    for (LineId l = 0; l < 91; ++l) CHECK(pt.points_on(l).size() == 10);
    for (PointId p = 0; p < 91; ++p) CHECK(pt.lines_on(p).size() == 10);
}

TEST_CASE("counts scale as q^4 + q^2, q^3 + q^2, q^4 - q^3") {
    for (auto [p, k] : {std::pair{2, 1}, {2, 2}, {5, 1}}) {
        PlaneTables pt = make_hall_plane(p, k);
        int q = pt.hall().base().q();
        CHECK(pt.num_affine_lines() == q * q * q * q + q * q);
        CHECK(pt.num_bf() == q * q * q + q * q);
        CHECK(pt.num_nbf() == q * q * q * q - q * q * q);
    }
}

TEST_CASE("incidence of named points and lines") {
    PlaneTables pt = make_hall_plane(3, 1);
    const HallSystem& H = pt.hall();
    PointId origin = pt.point_id(Point::affine(0, 0));
    for (Hidx m = 0; m < 9; ++m)
        CHECK(pt.incident(origin, pt.line_id(Line::slanted(m, 0))));
    // ((1,0),(2,0)) lies on y = x (2,0)
    PointId p = pt.point_id(Point::affine(H.index({1, 0}), H.index({2, 0})));
    CHECK(pt.incident(p, pt.line_id(Line::slanted(H.index({2, 0}), 0))));
    // slope points are never on vertical lines
    CHECK_FALSE(pt.incident(pt.point_id(Point::slope(0)), pt.line_id(Line::vertical(0))));
    CHECK(pt.incident(pt.point_id(Point::slope(0)), pt.line_at_infinity()));
    CHECK(pt.incident(pt.point_id(Point::vertical_infinity()), pt.line_id(Line::vertical(2))));
}

TEST_CASE("joins reduce to one right division") {
    PlaneTables pt = make_hall_plane(3, 1);
    const HallSystem& H = pt.hall();
    PointId a = pt.point_id(Point::affine(0, 0));
    PointId b = pt.point_id(Point::affine(H.index({1, 0}), H.index({2, 0})));
    CHECK(pt.line(pt.join(a, b)) == Line::slanted(H.index({2, 0}), 0));
    // equal x-coordinates join vertically
    PointId c = pt.point_id(Point::affine(H.index({1, 0}), H.index({1, 1})));
    PointId d = pt.point_id(Point::affine(H.index({1, 0}), H.index({0, 2})));
    CHECK(pt.line(pt.join(c, d)) == Line::vertical(H.index({1, 0})));
    // two slope points join on the line at infinity
    CHECK(pt.join(pt.point_id(Point::slope(0)), pt.point_id(Point::slope(5))) ==
          pt.line_at_infinity());
    CHECK_THROWS_AS(pt.join(a, a), CoincidentPointsError);
}

TEST_CASE("meets of named lines") {
    PlaneTables pt = make_hall_plane(3, 1);
    const HallSystem& H = pt.hall();
    // vertical and slanted meet by substitution
    for (Hidx c = 0; c < 9; ++c)
        for (Hidx m = 0; m < 9; ++m) {
            PointId want = pt.point_id(Point::affine(c, H.muli(c, m)));
            CHECK(pt.meet(pt.line_id(Line::vertical(c)), pt.line_id(Line::slanted(m, 0))) == want);
        }
    // parallel slanted lines meet at their slope point
    CHECK(pt.meet(pt.line_id(Line::slanted(4, 1)), pt.line_id(Line::slanted(4, 2))) ==
          pt.point_id(Point::slope(4)));
    CHECK_THROWS_AS(pt.meet(3, 3), CoincidentLinesError);
}

TEST_CASE("join and meet are mutually consistent on all triangles") {
    PlaneTables pt = make_hall_plane(3, 1);
    const int n = pt.num_points();
    for (PointId p = 0; p < static_cast<PointId>(n); ++p)
        for (PointId q = 0; q < static_cast<PointId>(n); ++q) {
            if (p == q) continue;
            LineId pq = pt.join(p, q);
            for (PointId r = 0; r < static_cast<PointId>(n); r += 7) {
                if (r == p || r == q || pt.incident(r, pq)) continue;
                CHECK(pt.meet(pq, pt.join(p, r)) == p);
            }
        }
}

TEST_CASE("affine lines split into q^2 + 1 parallel classes of q^2 lines") {
    PlaneTables pt = make_hall_plane(3, 1);
    std::map<int, int> sizes;
    for (LineId l = 0; l < static_cast<LineId>(pt.num_lines()); ++l)
        if (pt.line(l).is_affine()) sizes[pt.parallel_class(l)]++;
    CHECK(sizes.size() == 10);
    for (auto& [cls, n] : sizes) CHECK(n == 9);
    CHECK(pt.parallel(pt.line_id(Line::slanted(4, 1)), pt.line_id(Line::slanted(4, 2))));
    CHECK_FALSE(pt.parallel(pt.line_id(Line::slanted(4, 1)), pt.line_id(Line::slanted(3, 2))));
    CHECK_THROWS_AS(pt.parallel_class(pt.line_at_infinity()), std::invalid_argument);
}

TEST_CASE("the comparison plane has the same shape and is built the same way") {
    PlaneTables pt = make_oracle_plane(3, 1);
    CHECK_FALSE(pt.is_hall());
    CHECK(pt.order() == 9);
    CHECK(pt.num_points() == 91);
    CHECK(pt.num_bf() == 36);
    CHECK(pt.num_nbf() == 54);
}

TEST_CASE("incidence export round-trips and is byte-stable") {
    PlaneTables pt = make_hall_plane(3, 1);
    std::ostringstream os1, os2;
    pt.export_incidence(os1);
    pt.export_incidence(os2);
    CHECK(os1.str() == os2.str());
    CHECK(os1.str().substr(0, 6) == "91 91\n");

    std::istringstream in(os1.str());
    IncidenceData d = parse_incidence(in);
    REQUIRE(d.num_points == 91);
    REQUIRE(d.num_lines == 91);
    for (int l = 0; l < d.num_lines; ++l) {
        REQUIRE(d.lines[l].size() == 10);
        CHECK(std::is_sorted(d.lines[l].begin(), d.lines[l].end()));
        for (int p : d.lines[l]) CHECK(pt.incident(static_cast<PointId>(p), static_cast<LineId>(l)));
    }
    // the export determines the incidence relation completely
    std::set<std::pair<int, int>> flags;
    for (int l = 0; l < d.num_lines; ++l)
        for (int p : d.lines[l]) flags.insert({p, l});
    for (PointId p = 0; p < 91; ++p)
        for (LineId l = 0; l < 91; ++l)
            CHECK(pt.incident(p, l) == flags.count({static_cast<int>(p), static_cast<int>(l)}));

    // the comparison plane exports the same shape with different rows
    PlaneTables oracle = make_oracle_plane(3, 1);
    std::ostringstream os3;
    oracle.export_incidence(os3);
    CHECK(os3.str().substr(0, 6) == "91 91\n");
    CHECK(os3.str() != os1.str());
}
