#include <doctest.h>

#include "hallplane/axioms.hpp"
#include "hallplane/field.hpp"

using namespace hallplane;

TEST_CASE("arithmetic mod 3") {
    auto F = PrimePowerField::build(3, 1);
    CHECK(F.q() == 3);
    CHECK(F.add(1, 2) == 0);
    CHECK(F.mul(2, 2) == 1);
    CHECK(F.neg(1) == 2);
    CHECK(F.inv(2) == 2);
}

TEST_CASE("F4 is built over x^2 + x + 1") {
    auto F = PrimePowerField::build(2, 2);
    CHECK(F.q() == 4);
    CHECK(F.modulus() == std::vector<Felem>{1, 1, 1});
    // the generator x has index 2 and x * x = x + 1
    CHECK(F.mul(2, 2) == 3);
    CHECK(F.add(2, 3) == 1);
}

TEST_CASE("composite characteristic is rejected") {
    CHECK_THROWS_AS(PrimePowerField::build(4, 1), NonPrimeError);
    CHECK_THROWS_AS(PrimePowerField::build(9, 1), NonPrimeError);
    CHECK_THROWS_AS(PrimePowerField::build(1, 1), NonPrimeError);
}

TEST_CASE("order limits are enforced but configurable") {
    CHECK_THROWS_AS(PrimePowerField::build(5, 2), UnsupportedSizeError); // 25 > default 16
    auto F25 = PrimePowerField::build(5, 2, 25);
    CHECK(F25.q() == 25);
    CHECK_THROWS_AS(PrimePowerField::build(13, 2, 500), UnsupportedSizeError); // hard cap
}

TEST_CASE("field axioms hold exhaustively for every supported order") {
    const std::pair<int, int> cases[] = {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1},
                                         {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}};
    for (auto [p, k] : cases) {
        auto F = PrimePowerField::build(p, k);
        auto rep = check_field_axioms(F);
        CAPTURE(p);
        CAPTURE(k);
        CHECK(rep.ok());
    }
}

TEST_CASE("multiplicative orders divide q - 1") {
    auto F = PrimePowerField::build(3, 2, 16);
    for (int a = 1; a < F.q(); ++a)
        CHECK((F.q() - 1) % F.element_order(static_cast<Felem>(a)) == 0);
    CHECK_THROWS_AS(F.element_order(0), ZeroDivisorError);
}

TEST_CASE("integer embedding lands in the prime subfield") {
    auto F = PrimePowerField::build(2, 2);
    CHECK(F.of_int(0) == 0);
    CHECK(F.of_int(1) == 1);
    CHECK(F.of_int(2) == 0);
    CHECK(F.of_int(-1) == 1);
    auto G = PrimePowerField::build(5, 1);
    CHECK(G.of_int(7) == 2);
    CHECK(G.of_int(-3) == 2);
}
