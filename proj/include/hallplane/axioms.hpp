#pragma once

#include <array>
#include <optional>

#include "hallplane/hall.hpp"

namespace hallplane {

struct FieldAxiomsReport {
    bool add_assoc = false, add_comm = false, add_identity = false, add_inverse = false;
    bool mul_assoc = false, mul_comm = false, mul_identity = false, mul_inverse = false;
    bool distributive = false;
    bool multiplicative_group_cyclic = false;
    bool ok() const {
        return add_assoc && add_comm && add_identity && add_inverse && mul_assoc && mul_comm &&
               mul_identity && mul_inverse && distributive && multiplicative_group_cyclic;
    }
};

/// Exhaustive axiom check by full loops over the tables.
FieldAxiomsReport check_field_axioms(const PrimePowerField& F);

struct QuasifieldReport {
    bool defining_poly_rootless = false;
    bool two_sided_identity = false;
    bool right_distributive = false; // exhaustive over all q^6 triples
    bool left_scalar_linear = false; // (c x + d y) m = c (x m) + d (y m)
    bool rows_bijective = false;     // a != 0: m -> a m is a bijection
    bool solve_right_factor_ok = false;
    // Failure witnesses for the field laws the Hall system breaks; empty when
    // the law actually holds at this order.
    std::optional<std::array<HallElement, 2>> noncommutative;
    std::optional<std::array<HallElement, 3>> nonassociative;
    std::optional<std::array<HallElement, 3>> non_left_distributive;
    bool structural_ok() const {
        return defining_poly_rootless && two_sided_identity && right_distributive &&
               left_scalar_linear && rows_bijective && solve_right_factor_ok;
    }
};

QuasifieldReport check_quasifield(const HallSystem& H);

} // namespace hallplane
