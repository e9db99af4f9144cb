#include <doctest.h>

#include "hallplane/axioms.hpp"
#include "hallplane/build.hpp"

using namespace hallplane;

namespace {
HallSystem hall3() { return HallSystem(PrimePowerField::build(3, 1)); }
} // namespace

TEST_CASE("defining quadratic defaults to the smallest rootless pair") {
    // independent oracle: scan (r, s) in order and take the first rootless f
    for (auto [p, k] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}}) {
        auto F = PrimePowerField::build(p, k);
        auto [r, s] = find_defining_quadratic(F);
        bool found = false;
        for (int rr = 0; rr < F.q() && !found; ++rr)
            for (int ss = 0; ss < F.q() && !found; ++ss) {
                bool rootless = true;
                for (int x = 0; x < F.q(); ++x) {
                    Felem fx = F.sub(F.sub(F.mul(Felem(x), Felem(x)), F.mul(Felem(rr), Felem(x))),
                                     Felem(ss));
                    if (fx == 0) rootless = false;
                }
                if (rootless) {
                    CHECK(r == rr);
                    CHECK(s == ss);
                    found = true;
                }
            }
        CHECK(found);
    }
    // frozen values for the two smallest fields
    auto F3 = PrimePowerField::build(3, 1);
    CHECK(find_defining_quadratic(F3) == std::pair<Felem, Felem>{0, 2}); // x^2 + 1
    auto F2 = PrimePowerField::build(2, 1);
    CHECK(find_defining_quadratic(F2) == std::pair<Felem, Felem>{1, 1}); // x^2 + x + 1
}

TEST_CASE("a quadratic with a root is rejected") {
    // over F_3, x^2 - x has roots 0 and 1
    CHECK_THROWS_AS(HallSystem(PrimePowerField::build(3, 1), 1, 0), std::invalid_argument);
}

TEST_CASE("addition is componentwise") {
    HallSystem H = hall3();
    CHECK(H.add({1, 2}, {2, 2}) == HallElement{0, 1});
    for (Hidx a = 0; a < H.order(); ++a) {
        CHECK(H.add(H.element(a), H.zero()) == H.element(a));
        CHECK(H.add(H.element(a), H.neg(H.element(a))) == H.zero());
    }
}

TEST_CASE("multiplication follows the two branches") {
    HallSystem H = hall3(); // (r, s) = (0, 2)
    CHECK(H.r() == 0);
    CHECK(H.s() == 2);
    CHECK(H.mul({1, 2}, {2, 0}) == HallElement{2, 1}); // second factor in the basefield
    CHECK(H.mul({0, 1}, {0, 1}) == HallElement{2, 0}); // second factor outside, f(0) = 1
    for (Hidx a = 0; a < H.order(); ++a) {
        CHECK(H.mul(H.element(a), H.one()) == H.element(a));
        CHECK(H.mul(H.one(), H.element(a)) == H.element(a));
    }
}

TEST_CASE("right factors are unique and recoverable") {
    HallSystem H = hall3();
    CHECK(H.solve_right_factor({0, 1}, {2, 0}) == HallElement{0, 1});
    CHECK_THROWS_AS(H.solve_right_factor({0, 0}, {1, 0}), ZeroDivisorError);
    for (Hidx a = 1; a < H.order(); ++a) {
        CHECK(H.rdivi(a, 0) == 0);                  // no zero divisors
        CHECK(H.rdivi(a, a) == H.index(H.one()));   // identity
        for (Hidx m = 0; m < H.order(); ++m) CHECK(H.rdivi(a, H.muli(a, m)) == m);
    }
}

TEST_CASE("quasifield structure holds exhaustively for q = 2..5") {
    for (auto [p, k] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
        HallSystem H{PrimePowerField::build(p, k)};
        auto rep = check_quasifield(H);
        CAPTURE(p);
        CAPTURE(k);
        CHECK(rep.structural_ok());
    }
}

TEST_CASE("the field laws that fail for q > 3 fail with witnesses") {
    for (auto [p, k] : {std::pair{2, 2}, {5, 1}, {7, 1}}) {
        HallSystem H{PrimePowerField::build(p, k)};
        auto rep = check_quasifield(H);
        REQUIRE(rep.noncommutative);
        REQUIRE(rep.nonassociative);
        REQUIRE(rep.non_left_distributive);
        auto [a, b] = *rep.noncommutative;
        CHECK(H.mul(a, b) != H.mul(b, a));
        auto [x, y, z] = *rep.nonassociative;
        CHECK(H.mul(H.mul(x, y), z) != H.mul(x, H.mul(y, z)));
        auto [u, v, w] = *rep.non_left_distributive;
        CHECK(H.mul(u, H.add(v, w)) != H.add(H.mul(u, v), H.mul(u, w)));
    }
}

TEST_CASE("q = 2 collapses to the field, q = 3 to the near-field") {
    QuasifieldReport r2 = check_quasifield(HallSystem{PrimePowerField::build(2, 1)});
    CHECK_FALSE(r2.noncommutative);
    CHECK_FALSE(r2.nonassociative);
    CHECK_FALSE(r2.non_left_distributive);
    QuasifieldReport r3 = check_quasifield(hall3());
    CHECK(r3.noncommutative);
    CHECK_FALSE(r3.nonassociative); // associative: the regular near-field of order 9
    CHECK(r3.non_left_distributive);
}

TEST_CASE("right multiplication by a type-2 element satisfies its own defining quadratic") {
    // (x m) m = s x + r (x m) whenever m is outside the basefield
    for (auto [p, k] : {std::pair{3, 1}, {2, 2}, {5, 1}}) {
        HallSystem H{PrimePowerField::build(p, k)};
        const int q = H.base().q();
        for (Hidx m = static_cast<Hidx>(q); m < H.order(); ++m)
            for (Hidx x = 0; x < H.order(); ++x) {
                HallElement xm = H.element(H.muli(x, m));
                HallElement lhs = H.element(H.muli(H.index(xm), m));
                HallElement rhs = H.add(H.scalar(H.s(), H.element(x)), H.scalar(H.r(), xm));
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("the comparison field exposes the right subfield") {
    FieldOracle F9{PrimePowerField::build(3, 2, 16)};
    CHECK(F9.order() == 9);
    CHECK(F9.sub_order() == 3);
    int in_sub = 0;
    for (int x = 0; x < 9; ++x) in_sub += F9.slope_in_basefield(static_cast<Hidx>(x));
    CHECK(in_sub == 3);
    // subfield is closed under multiplication
    for (Hidx a = 0; a < 9; ++a)
        for (Hidx b = 0; b < 9; ++b)
            if (F9.slope_in_basefield(a) && F9.slope_in_basefield(b))
                CHECK(F9.slope_in_basefield(F9.muli(a, b)));
}
