#include "hallplane/hall.hpp"

#include <stdexcept>

namespace hallplane {

std::pair<Felem, Felem> find_defining_quadratic(const PrimePowerField& field) {
    const int q = field.q();
    for (int r = 0; r < q; ++r) {
        for (int s = 0; s < q; ++s) {
            bool rootless = true;
            for (int x = 0; x < q && rootless; ++x) {
                Felem fx = field.sub(
                    field.sub(field.mul(static_cast<Felem>(x), static_cast<Felem>(x)),
                              field.mul(static_cast<Felem>(r), static_cast<Felem>(x))),
                    static_cast<Felem>(s));
                if (fx == 0) rootless = false;
            }
            if (rootless) return {static_cast<Felem>(r), static_cast<Felem>(s)};
        }
    }
    throw std::logic_error("no irreducible quadratic over the field"); // cannot happen
}

HallSystem::HallSystem(PrimePowerField field, Felem r, Felem s)
    : field_(std::move(field)), r_(r), s_(s), order_(field_.q() * field_.q()) {
    for (int x = 0; x < field_.q(); ++x)
        if (f_of(static_cast<Felem>(x)) == 0)
            throw std::invalid_argument("defining quadratic x^2 - r x - s has a root at x = " +
                                        std::to_string(x));
    build_tables();
}

HallSystem::HallSystem(PrimePowerField field) : field_(std::move(field)) {
    auto [r, s] = find_defining_quadratic(field_);
    r_ = r;
    s_ = s;
    order_ = field_.q() * field_.q();
    build_tables();
}

void HallSystem::build_tables() {
    const int n = order_;
    add_.resize(static_cast<std::size_t>(n) * n);
    mul_.resize(static_cast<std::size_t>(n) * n);
    rdiv_.resize(static_cast<std::size_t>(n) * n);
    neg_.resize(n);
    const PrimePowerField& F = field_;

    for (Hidx ai = 0; ai < n; ++ai) {
        HallElement a = element(ai);
        neg_[ai] = static_cast<Hidx>(F.neg(a.a1) + F.q() * F.neg(a.a2));
        for (Hidx bi = 0; bi < n; ++bi) {
            HallElement b = element(bi);
            add_[flat(ai, bi)] = static_cast<Hidx>(F.add(a.a1, b.a1) + F.q() * F.add(a.a2, b.a2));
            HallElement prod;
            if (b.a2 == 0) {
                // M1
                prod = {F.mul(a.a1, b.a1), F.mul(a.a2, b.a1)};
            } else {
                // M2
                Felem fb1 = f_of(b.a1);
                Felem t = F.mul(F.mul(a.a2, F.inv(b.a2)), fb1);
                prod.a1 = F.sub(F.mul(a.a1, b.a1), t);
                prod.a2 = F.add(F.sub(F.mul(a.a1, b.a2), F.mul(a.a2, b.a1)), F.mul(a.a2, r_));
            }
            mul_[flat(ai, bi)] = index(prod);
        }
    }

    // Right quotients: for a != 0 the row m -> a*m is a bijection, so every b
    // is hit exactly once. A repeated value would mean the quasifield
    // property fails.
    std::vector<bool> seen(n);
    for (Hidx ai = 1; ai < n; ++ai) {
        std::fill(seen.begin(), seen.end(), false);
        for (Hidx mi = 0; mi < n; ++mi) {
            Hidx b = mul_[flat(ai, mi)];
            if (seen[b]) throw std::logic_error("Hall multiplication row is not a bijection");
            seen[b] = true;
            rdiv_[flat(ai, b)] = mi;
        }
    }
}

std::string HallSystem::name() const {
    return "hall(q=" + std::to_string(field_.q()) + ",r=" + std::to_string(int(r_)) +
           ",s=" + std::to_string(int(s_)) + ")";
}

FieldOracle::FieldOracle(PrimePowerField field) : field_(std::move(field)) {
    if (field_.k() % 2 != 0)
        throw std::invalid_argument("comparison plane needs a field of square order");
    sub_order_ = 1;
    for (int i = 0; i < field_.k() / 2; ++i) sub_order_ *= field_.p();
    in_subfield_.assign(field_.q(), false);
    for (int x = 0; x < field_.q(); ++x) {
        // x is in the subfield of order q iff x^q = x.
        Felem pw = static_cast<Felem>(x);
        for (int e = 1; e < sub_order_; ++e) pw = field_.mul(pw, static_cast<Felem>(x));
        in_subfield_[x] = (pw == static_cast<Felem>(x));
    }
}

std::string FieldOracle::name() const {
    return "field(q=" + std::to_string(field_.q()) + ")";
}

} // namespace hallplane
