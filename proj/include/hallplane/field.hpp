#pragma once

#include <cstdint>
#include <vector>

#include "hallplane/errors.hpp"

namespace hallplane {

/// Index of a base-field element, 0 = additive identity, 1 = multiplicative identity.
using Felem = std::uint8_t;

/// F_q for a small prime power q = p^k, with dense lookup tables for all four
/// operations. Elements are indexed 0..q-1; for k > 1 the index encodes the
/// coefficient vector of the residue polynomial in base p (constant term in
/// the lowest digit), so 0 and 1 keep their usual meaning.
///
/// The modulus is the monic irreducible of degree k whose non-leading
/// coefficient vector has the smallest base-p encoding. Construction is
/// deterministic: the same (p, k) always produces the same tables.
class PrimePowerField {
public:
    static constexpr int kDefaultOrderLimit = 16;
    static constexpr int kHardOrderLimit = 64;

    /// Builds F_{p^k}. Throws NonPrimeError / UnsupportedSizeError.
    /// order_limit is the desk-scale guard; callers that genuinely need a
    /// larger coordinate field (the order-q^2 comparison plane) pass it
    /// explicitly.
    static PrimePowerField build(int p, int k, int order_limit = kDefaultOrderLimit);

    int p() const { return p_; }
    int k() const { return k_; }
    int q() const { return q_; }

    Felem add(Felem a, Felem b) const { return add_[idx(a, b)]; }
    Felem mul(Felem a, Felem b) const { return mul_[idx(a, b)]; }
    Felem neg(Felem a) const { return neg_[a]; }
    Felem sub(Felem a, Felem b) const { return add_[idx(a, neg_[b])]; }

    /// Multiplicative inverse; a must be nonzero.
    Felem inv(Felem a) const {
        if (a == 0) throw ZeroDivisorError();
        return inv_[a];
    }
    Felem div(Felem a, Felem b) const { return mul(a, inv(b)); }

    /// Image of an ordinary integer under the ring map Z -> F_q.
    Felem of_int(long long n) const {
        long long r = n % p_;
        if (r < 0) r += p_;
        Felem acc = static_cast<Felem>(r);
        return acc;
    }

    /// Coefficients of the modulus, degree k, monic; modulus_[i] is the x^i
    /// coefficient. For k = 1 this is {0, 1} (i.e. x), unused by arithmetic.
    const std::vector<Felem>& modulus() const { return modulus_; }

    /// Multiplicative order of a nonzero element.
    int element_order(Felem a) const;

    const std::vector<Felem>& add_table() const { return add_; }
    const std::vector<Felem>& mul_table() const { return mul_; }

private:
    PrimePowerField() = default;
    std::size_t idx(Felem a, Felem b) const {
        return static_cast<std::size_t>(a) * q_ + b;
    }

    int p_ = 0, k_ = 0, q_ = 0;
    std::vector<Felem> modulus_;
    std::vector<Felem> add_, mul_, neg_, inv_;
};

} // namespace hallplane
