#include "hallplane/axioms.hpp"

namespace hallplane {

FieldAxiomsReport check_field_axioms(const PrimePowerField& F) {
    const int q = F.q();
    FieldAxiomsReport r;
    r.add_assoc = r.add_comm = r.mul_assoc = r.mul_comm = r.distributive = true;
    r.add_identity = r.mul_identity = r.add_inverse = r.mul_inverse = true;
    for (int a = 0; a < q; ++a) {
        Felem fa = static_cast<Felem>(a);
        if (F.add(fa, 0) != fa) r.add_identity = false;
        if (F.mul(fa, 1) != fa || F.mul(1, fa) != fa) r.mul_identity = false;
        if (F.add(fa, F.neg(fa)) != 0) r.add_inverse = false;
        if (a != 0 && F.mul(fa, F.inv(fa)) != 1) r.mul_inverse = false;
        for (int b = 0; b < q; ++b) {
            Felem fb = static_cast<Felem>(b);
            if (F.add(fa, fb) != F.add(fb, fa)) r.add_comm = false;
            if (F.mul(fa, fb) != F.mul(fb, fa)) r.mul_comm = false;
            for (int c = 0; c < q; ++c) {
                Felem fc = static_cast<Felem>(c);
                if (F.add(F.add(fa, fb), fc) != F.add(fa, F.add(fb, fc))) r.add_assoc = false;
                if (F.mul(F.mul(fa, fb), fc) != F.mul(fa, F.mul(fb, fc))) r.mul_assoc = false;
                if (F.mul(fa, F.add(fb, fc)) != F.add(F.mul(fa, fb), F.mul(fa, fc)))
                    r.distributive = false;
            }
        }
    }
    r.multiplicative_group_cyclic = false;
    for (int a = 1; a < q; ++a)
        if (F.element_order(static_cast<Felem>(a)) == q - 1) {
            r.multiplicative_group_cyclic = true;
            break;
        }
    return r;
}

QuasifieldReport check_quasifield(const HallSystem& H) {
    const int n = H.order();
    const PrimePowerField& F = H.base();
    QuasifieldReport r;

    r.defining_poly_rootless = true;
    for (int x = 0; x < F.q(); ++x)
        if (H.f_of(static_cast<Felem>(x)) == 0) r.defining_poly_rootless = false;

    r.two_sided_identity = true;
    for (Hidx a = 0; a < n; ++a) {
        Hidx one = H.index(H.one());
        if (H.muli(a, one) != a || H.muli(one, a) != a) r.two_sided_identity = false;
    }

    r.right_distributive = true;
    for (Hidx a = 0; a < n && r.right_distributive; ++a)
        for (Hidx b = 0; b < n && r.right_distributive; ++b)
            for (Hidx c = 0; c < n; ++c)
                if (H.muli(H.addi(a, b), c) != H.addi(H.muli(a, c), H.muli(b, c))) {
                    r.right_distributive = false;
                    break;
                }

    r.left_scalar_linear = true;
    for (int cs = 0; cs < F.q() && r.left_scalar_linear; ++cs)
        for (Hidx x = 0; x < n && r.left_scalar_linear; ++x)
            for (Hidx m = 0; m < n; ++m) {
                HallElement sx = H.scalar(static_cast<Felem>(cs), H.element(x));
                HallElement lhs = H.mul(sx, H.element(m));
                HallElement rhs = H.scalar(static_cast<Felem>(cs), H.element(H.muli(x, m)));
                if (lhs != rhs) {
                    r.left_scalar_linear = false;
                    break;
                }
            }

    r.rows_bijective = true;
    std::vector<bool> seen(n);
    for (Hidx a = 1; a < n; ++a) {
        std::fill(seen.begin(), seen.end(), false);
        for (Hidx m = 0; m < n; ++m) {
            Hidx p = H.muli(a, m);
            if (seen[p]) r.rows_bijective = false;
            seen[p] = true;
        }
    }

    r.solve_right_factor_ok = true;
    for (Hidx a = 1; a < n; ++a)
        for (Hidx m = 0; m < n; ++m)
            if (H.rdivi(a, H.muli(a, m)) != m) r.solve_right_factor_ok = false;

    for (Hidx a = 0; a < n && !r.noncommutative; ++a)
        for (Hidx b = 0; b < n; ++b)
            if (H.muli(a, b) != H.muli(b, a)) {
                r.noncommutative = {H.element(a), H.element(b)};
                break;
            }
    for (Hidx a = 0; a < n && !r.nonassociative; ++a)
        for (Hidx b = 0; b < n && !r.nonassociative; ++b)
            for (Hidx c = 0; c < n; ++c)
                if (H.muli(H.muli(a, b), c) != H.muli(a, H.muli(b, c))) {
                    r.nonassociative = {H.element(a), H.element(b), H.element(c)};
                    break;
                }
    for (Hidx a = 0; a < n && !r.non_left_distributive; ++a)
        for (Hidx b = 0; b < n && !r.non_left_distributive; ++b)
            for (Hidx c = 0; c < n; ++c)
                if (H.muli(a, H.addi(b, c)) != H.addi(H.muli(a, b), H.muli(a, c))) {
                    r.non_left_distributive = {H.element(a), H.element(b), H.element(c)};
                    break;
                }
    return r;
}

} // namespace hallplane
