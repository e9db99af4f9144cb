#include <doctest.h>

#include <map>

#include "hallplane/build.hpp"
#include "hallplane/collineation.hpp"

using namespace hallplane;

namespace {
PlaneTables& plane3() {
    static PlaneTables pt = make_hall_plane(3, 1);
    return pt;
}
} // namespace

TEST_CASE("translation actions on points and lines") {
    PlaneTables& pt = plane3();
    const HallSystem& H = pt.hall();
    Translation t{{1, 0}, {0, 0}};
    Line l = Line::slanted(H.index({2, 0}), 0);
    // k - a m + b with a = (1,0), m = (2,0): k moves to (1,0) wait -(2,0) = (1,0) mod 3
    CHECK(apply_line(H, Generator{t}, l) == Line::slanted(H.index({2, 0}), H.index({1, 0})));
    Translation id{{0, 0}, {0, 0}};
    for (PointId p = 0; p < static_cast<PointId>(pt.num_points()); ++p)
        CHECK(apply_point_id(pt, Generator{id}, p) == p);
    for (LineId l2 = 0; l2 < static_cast<LineId>(pt.num_lines()); ++l2)
        CHECK(apply_line_id(pt, Generator{id}, l2) == l2);
    // composing translations adds parameters
    Translation u{{2, 1}, {0, 2}}, v{{1, 2}, {2, 2}};
    Collineation w = Collineation{Generator{u}}.then(Generator{v});
    Translation sum{H.add(u.a, v.a), H.add(u.b, v.b)};
    for (PointId p = 0; p < static_cast<PointId>(pt.num_points()); ++p)
        CHECK(apply_point_id(pt, w, p) == apply_point_id(pt, Generator{sum}, p));
}

TEST_CASE("linear maps fix every type-2 parallel class") {
    PlaneTables& pt = plane3();
    const HallSystem& H = pt.hall();
    for (const auto& lm : all_linear_maps(H.base()))
        for (Hidx m = 3; m < 9; ++m)
            for (Hidx k = 0; k < 9; ++k)
                CHECK(apply_line(H, Generator{lm}, Line::slanted(m, k)).m == m);
}

TEST_CASE("every generator maps lines onto their closed-form images pointwise") {
    PlaneTables& pt = plane3();
    std::vector<Generator> gens;
    for (const auto& t : all_translations(pt.hall())) gens.emplace_back(t);
    for (const auto& s : all_autotopisms(pt.hall().base())) gens.emplace_back(s);
    for (const auto& l : all_linear_maps(pt.hall().base())) gens.emplace_back(l);
    CHECK(gens.size() == 81 + 48 + 8);
    for (const auto& g : gens)
        for (LineId l = 0; l < static_cast<LineId>(pt.num_lines()); ++l) {
            std::vector<PointId> img;
            for (PointId p : pt.points_on(l)) img.push_back(apply_point_id(pt, g, p));
            std::sort(img.begin(), img.end());
            auto want = pt.points_on(apply_line_id(pt, g, l));
            REQUIRE(std::equal(img.begin(), img.end(), want.begin(), want.end()));
        }
}

TEST_CASE("singular matrices are rejected") {
    CHECK_THROWS_AS(mat_inv(plane3().hall().base(), Mat2{1, 2, 2, 1}), SingularMatrixError);
}

TEST_CASE("linear maps compose like the multiplicative group of the quadratic extension") {
    PlaneTables& pt = plane3();
    const HallSystem& H = pt.hall();
    const PrimePowerField& F = H.base();
    auto lnrs = all_linear_maps(F);
    for (const auto& x : lnrs)
        for (const auto& y : lnrs) {
            // (b + a alpha)(d + c alpha) with alpha^2 = -r alpha + s
            Felem e = F.sub(F.add(F.mul(x.a, y.b), F.mul(x.b, y.a)), F.mul(F.mul(x.a, y.a), H.r()));
            Felem f = F.add(F.mul(x.b, y.b), F.mul(F.mul(x.a, y.a), H.s()));
            Generator prod{LinearMap{e, f}};
            for (PointId p = 0; p < static_cast<PointId>(pt.num_points()); ++p)
                CHECK(apply_point_id(pt, Generator{y}, apply_point_id(pt, Generator{x}, p)) ==
                      apply_point_id(pt, prod, p));
        }
}

TEST_CASE("generator inverses undo their generators") {
    PlaneTables& pt = plane3();
    const HallSystem& H = pt.hall();
    std::vector<Generator> gens{Generator{Translation{{1, 2}, {0, 1}}},
                                Generator{Autotopism{Mat2{1, 1, 1, 2}}},
                                Generator{LinearMap{1, 2}}, Generator{LinearMap{2, 0}}};
    for (const auto& g : gens) {
        Generator gi = inverse_generator(H, g);
        for (PointId p = 0; p < static_cast<PointId>(pt.num_points()); ++p)
            CHECK(apply_point_id(pt, gi, apply_point_id(pt, g, p)) == p);
    }
    Collineation word;
    for (const auto& g : gens) word.then(g);
    Collineation winv = word.inverse(H);
    for (PointId p = 0; p < static_cast<PointId>(pt.num_points()); ++p)
        CHECK(apply_point_id(pt, winv, apply_point_id(pt, word, p)) == p);
}

TEST_CASE("stabilizer matrix satisfies its postconditions on every nonzero pair") {
    for (auto [p, k] : {std::pair{3, 1}, {2, 2}, {5, 1}}) {
        HallSystem H{PrimePowerField::build(p, k)};
        const PrimePowerField& F = H.base();
        for (Hidx yi = 1; yi < H.order(); ++yi)
            for (Hidx zi = 1; zi < H.order(); ++zi) {
                HallElement y = H.element(yi), z = H.element(zi);
                Mat2 S = stabilizer_matrix(H, y, z);
                CHECK(mat_det(F, S) != 0);
                CHECK(mat_act(F, y, S) == z);
                HallElement a = mat_act(F, H.one(), mat_inv(F, S));
                CHECK(mat_act(F, H.mul(a, {0, 1}), S) == HallElement{0, 1});
            }
    }
}

TEST_CASE("stabilizer matrix consistency cases") {
    HallSystem H{PrimePowerField::build(3, 1)};
    const PrimePowerField& F = H.base();
    // y = z must be fixed
    for (Hidx yi = 1; yi < 9; ++yi) {
        HallElement y = H.element(yi);
        CHECK(mat_act(F, y, stabilizer_matrix(H, y, y)) == y);
    }
    // y in the basefield, z = y c
    for (Felem y1 = 1; y1 < 3; ++y1)
        for (Felem c = 1; c < 3; ++c) {
            HallElement y{y1, 0};
            HallElement z = H.mul(y, {c, 0});
            CHECK(mat_act(F, y, stabilizer_matrix(H, y, z)) == z);
        }
    CHECK_THROWS_AS(stabilizer_matrix(H, {0, 0}, {1, 0}), std::invalid_argument);
}

TEST_CASE("lines through the origin admit point-transitive stabilizers") {
    PlaneTables& pt = plane3();
    PointId origin = pt.point_id(Point::affine(0, 0));
    for (LineId l : pt.lines_on(origin)) {
        if (!pt.line(l).is_affine()) continue;
        for (PointId p : pt.points_on(l)) {
            if (p == origin || !pt.point(p).is_affine()) continue;
            for (PointId q : pt.points_on(l)) {
                if (q == origin || !pt.point(q).is_affine()) continue;
                Collineation w = transitive_stabilizer_witness(pt, l, p, q);
                CHECK(apply_point_id(pt, w, origin) == origin);
                CHECK(apply_line_id(pt, w, l) == l);
                CHECK(apply_point_id(pt, w, p) == q);
            }
        }
    }
}

TEST_CASE("group propositions verify exhaustively at q = 3") {
    GroupPropositionsReport r = verify_group_propositions(plane3());
    CHECK(r.tr_count == 81);
    CHECK(r.tr_sharply_transitive);
    CHECK(r.atp_count == 48);
    CHECK(r.lnr_count == 8);
    CHECK(r.atp_vertical_orbit_count == 2);
    CHECK(r.bf_orbit_size == 36);
    CHECK(r.nbf_orbit_size == 54);
    CHECK(r.line_orbits_are_bf_nbf);
    CHECK(r.tr_atp_transitive_type2_lines);
    CHECK(r.tr_atp_transitive_vertical_lines);
    CHECK_FALSE(r.tr_atp_type2_vertical_single_orbit); // the union is two orbits
    CHECK(r.tr_lnr_transitive_bf_lines);
    CHECK(r.all_generators_preserve_collinearity);
    CHECK(r.ok());
}

TEST_CASE("canonicalization covers every ordered affine pair at q = 3") {
    PlaneTables& pt = plane3();
    std::map<std::string, int> by_case;
    int pairs = 0;
    for (LineId a = 0; a < static_cast<LineId>(pt.num_lines()); ++a) {
        if (!pt.line(a).is_affine()) continue;
        for (LineId b = 0; b < static_cast<LineId>(pt.num_lines()); ++b) {
            if (a == b || !pt.line(b).is_affine()) continue;
            ++pairs;
            auto res = canonicalize_pair(pt, a, b);
            ++by_case[pair_case_name(res.form.tag)];
            CHECK_FALSE(res.form.used_fallback);
            REQUIRE(apply_line_id(pt, res.map, a) == pt.line_id(res.form.l1));
            REQUIRE(apply_line_id(pt, res.map, b) == pt.line_id(res.form.l2));
            // every eligible marked point lands on the stated canonical image
            PointId meetp = pt.meet(a, b);
            for (PointId m : pt.points_on(a)) {
                if (m == meetp || !pt.point(m).is_affine()) continue;
                auto mr = canonicalize_pair(pt, a, b, m);
                REQUIRE(mr.form.marked_image.has_value());
                CHECK(*mr.form.marked_image == canonical_marked_image(pt, mr.form));
                CHECK(apply_point_id(pt, mr.map, m) == pt.point_id(*mr.form.marked_image));
                CHECK_FALSE(mr.form.used_fallback);
            }
        }
    }
    CHECK(pairs == 90 * 89);
    // orbit sizes of ordered pairs per case
    CHECK(by_case["bfbf-intersecting"] == 972);
    CHECK(by_case["bfbf-parallel"] == 288);
    CHECK(by_case["nbfnbf-intersecting"] == 2430);
    CHECK(by_case["nbfnbf-parallel"] == 432);
    CHECK(by_case["nbfbf"] == 1944);
    CHECK(by_case["bfnbf"] == 1944);
}

TEST_CASE("canonicalizing a canonical pair is the identity case") {
    PlaneTables& pt = plane3();
    for (const auto& rep : canonical_pair_representatives(pt)) {
        if (rep.involves_infinity) {
            CHECK_THROWS_AS(canonicalize_pair(pt, rep.l1, rep.l2), InfinityLineUnsupportedError);
            continue;
        }
        REQUIRE(rep.marked.has_value());
        auto res = canonicalize_pair(pt, rep.l1, rep.l2, rep.marked);
        CHECK(pt.line_id(res.form.l1) == rep.l1);
        CHECK(pt.line_id(res.form.l2) == rep.l2);
        CHECK(res.form.tag == *rep.tag);
        CHECK(pt.point_id(*res.form.marked_image) == *rep.marked);
        // the word acts as the identity on the pair and the marked point
        CHECK(apply_line_id(pt, res.map, rep.l1) == rep.l1);
        CHECK(apply_point_id(pt, res.map, *rep.marked) == *rep.marked);
    }
}

TEST_CASE("representative list enumerates the residual parameters") {
    PlaneTables& pt = plane3();
    auto reps = canonical_pair_representatives(pt);
    int affine = 0, infinity = 0;
    for (const auto& r : reps) (r.involves_infinity ? infinity : affine)++;
    CHECK(affine == 3 + 8 + 5 + 8 + 1 + 1);
    CHECK(infinity == 4);
}

TEST_CASE("marked points must be eligible") {
    PlaneTables& pt = plane3();
    LineId l1 = pt.line_id(Line::slanted(0, 0));
    LineId l2 = pt.line_id(Line::vertical(0));
    PointId meetp = pt.meet(l1, l2);
    CHECK_THROWS_AS(canonicalize_pair(pt, l1, l2, meetp), std::invalid_argument);
    PointId off = pt.point_id(Point::affine(1, 1));
    CHECK_THROWS_AS(canonicalize_pair(pt, l1, l2, off), std::invalid_argument);
    CHECK_THROWS_AS(canonicalize_pair(pt, l1, l1), CoincidentLinesError);
}
