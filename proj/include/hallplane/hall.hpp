#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hallplane/field.hpp"

namespace hallplane {

/// Index of a coordinate-ring element (Hall system or comparison field),
/// 0..order-1.
using Hidx = std::uint16_t;

/// Ordered pair over the base field. (b1, 0) is identified with the base-field
/// element b1.
struct HallElement {
    Felem a1 = 0;
    Felem a2 = 0;
    auto operator<=>(const HallElement&) const = default;
    bool in_basefield() const { return a2 == 0; }
};

/// Returns the smallest (r, s), ordered by (r, s) element index, such that
/// x^2 - r x - s has no root in the field.
std::pair<Felem, Felem> find_defining_quadratic(const PrimePowerField& field);

/// The Hall system H = F_q x F_q under componentwise addition and the
/// two-branch multiplication
///   a * b = (a1 b1, a2 b1)                                          if b2 = 0
///   a * b = (a1 b1 - a2 b2^{-1} f(b1), a1 b2 - a2 b1 + a2 r)        if b2 != 0
/// where f(x) = x^2 - r x - s is rootless over F_q. Right distributive and
/// left F_q-linear; not a field for q > 3.
///
/// Elements are indexed a1 + q * a2. All products and right quotients are
/// precomputed; the tables are immutable after construction and safe to share
/// across threads.
class HallSystem {
public:
    /// Throws std::invalid_argument if x^2 - r x - s has a root.
    HallSystem(PrimePowerField field, Felem r, Felem s);

    /// Uses the default defining quadratic for the field.
    explicit HallSystem(PrimePowerField field);

    const PrimePowerField& base() const { return field_; }
    Felem r() const { return r_; }
    Felem s() const { return s_; }
    int order() const { return order_; } // q^2

    Hidx index(HallElement a) const {
        return static_cast<Hidx>(a.a1 + field_.q() * a.a2);
    }
    HallElement element(Hidx i) const {
        return HallElement{static_cast<Felem>(i % field_.q()),
                           static_cast<Felem>(i / field_.q())};
    }
    HallElement zero() const { return {0, 0}; }
    HallElement one() const { return {1, 0}; }

    HallElement add(HallElement a, HallElement b) const {
        return {field_.add(a.a1, b.a1), field_.add(a.a2, b.a2)};
    }
    HallElement sub(HallElement a, HallElement b) const {
        return {field_.sub(a.a1, b.a1), field_.sub(a.a2, b.a2)};
    }
    HallElement neg(HallElement a) const {
        return {field_.neg(a.a1), field_.neg(a.a2)};
    }
    HallElement mul(HallElement a, HallElement b) const {
        return element(muli(index(a), index(b)));
    }
    /// Componentwise action of the base field (left scalar multiplication).
    HallElement scalar(Felem c, HallElement a) const {
        return {field_.mul(c, a.a1), field_.mul(c, a.a2)};
    }

    /// f(x) = x^2 - r x - s.
    Felem f_of(Felem x) const {
        return field_.sub(field_.sub(field_.mul(x, x), field_.mul(r_, x)), s_);
    }

    /// The unique m with a * m = b; throws ZeroDivisorError for a = 0.
    HallElement solve_right_factor(HallElement a, HallElement b) const {
        return element(rdivi(index(a), index(b)));
    }

    // Index-level operations used by the incidence tables.
    Hidx addi(Hidx a, Hidx b) const { return add_[flat(a, b)]; }
    Hidx subi(Hidx a, Hidx b) const { return add_[flat(a, neg_[b])]; }
    Hidx negi(Hidx a) const { return neg_[a]; }
    Hidx muli(Hidx a, Hidx b) const { return mul_[flat(a, b)]; }
    Hidx rdivi(Hidx a, Hidx b) const {
        if (a == 0) throw ZeroDivisorError();
        return rdiv_[flat(a, b)];
    }
    bool slope_in_basefield(Hidx m) const { return m < static_cast<Hidx>(field_.q()); }

    std::string name() const;

private:
    void build_tables();
    std::size_t flat(Hidx a, Hidx b) const {
        return static_cast<std::size_t>(a) * order_ + b;
    }

    PrimePowerField field_;
    Felem r_ = 0, s_ = 0;
    int order_ = 0;
    std::vector<Hidx> add_, mul_, rdiv_, neg_;
};

/// Coordinate ring for the classical comparison plane: the field of order
/// q^2 presented through the same interface as the Hall system. The
/// "basefield" predicate picks out the unique subfield of order q
/// (fixed points of x -> x^q), so line-class bookkeeping carries over.
class FieldOracle {
public:
    /// field must have square order.
    explicit FieldOracle(PrimePowerField field);

    int order() const { return field_.q(); }
    int sub_order() const { return sub_order_; }
    const PrimePowerField& field() const { return field_; }

    Hidx addi(Hidx a, Hidx b) const { return field_.add(static_cast<Felem>(a), static_cast<Felem>(b)); }
    Hidx subi(Hidx a, Hidx b) const { return field_.sub(static_cast<Felem>(a), static_cast<Felem>(b)); }
    Hidx negi(Hidx a) const { return field_.neg(static_cast<Felem>(a)); }
    Hidx muli(Hidx a, Hidx b) const { return field_.mul(static_cast<Felem>(a), static_cast<Felem>(b)); }
    Hidx rdivi(Hidx a, Hidx b) const {
        return field_.mul(field_.inv(static_cast<Felem>(a)), static_cast<Felem>(b));
    }
    bool slope_in_basefield(Hidx m) const { return in_subfield_[m]; }

    std::string name() const;

private:
    PrimePowerField field_;
    int sub_order_ = 0;
    std::vector<bool> in_subfield_;
};

} // namespace hallplane
