#include "hallplane/field.hpp"

#include <algorithm>

namespace hallplane {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Polynomials over F_p as coefficient vectors, low degree first.
using Poly = std::vector<int>;

Poly poly_from_index(long long idx, int p, int len) {
    Poly c(len, 0);
    for (int i = 0; i < len; ++i) {
        c[i] = static_cast<int>(idx % p);
        idx /= p;
    }
    return c;
}

long long poly_to_index(const Poly& c, int p, int len) {
    long long idx = 0;
    for (int i = len - 1; i >= 0; --i) idx = idx * p + (i < (int)c.size() ? c[i] : 0);
    return idx;
}

// a * b mod (modulus), all over F_p; modulus monic of degree k.
Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& modulus, int p, int k) {
    std::vector<int> prod(2 * k, 0);
    for (int i = 0; i < k; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < k; ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    for (int d = 2 * k - 2; d >= k; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        // x^d = x^(d-k) * (x^k mod modulus) = -x^(d-k) * (lower part of modulus)
        for (int i = 0; i < k; ++i)
            prod[d - k + i] = ((prod[d - k + i] - c * modulus[i]) % p + p * p) % p;
    }
    prod.resize(k);
    return prod;
}

bool poly_is_zero(const Poly& a) {
    return std::all_of(a.begin(), a.end(), [](int c) { return c == 0; });
}

// Evaluates a monic degree-k polynomial (given by its non-leading part) at
// every field element of F_p^j... only needed for irreducibility over F_p of
// the modulus itself, done by trial root/factor search below.
bool modulus_irreducible(const Poly& modulus, int p, int k) {
    // No roots in F_p (catches all reducibles for k <= 3; for k = 4 also
    // exclude quadratic*quadratic splits).
    for (int x = 0; x < p; ++x) {
        long long v = 1; // leading coefficient
        for (int d = k - 1; d >= 0; --d) v = (v * x + modulus[d]) % p;
        if (v % p == 0) return false;
    }
    if (k <= 3) return true;
    // Generic small-degree check: no monic factor of degree 2..k/2.
    for (int d = 2; d <= k / 2; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long fi = 0; fi < count; ++fi) {
            Poly f = poly_from_index(fi, p, d + 1);
            f[d] = 1;
            // trial division: modulus mod f == 0 ?
            std::vector<int> rem(modulus);
            rem.push_back(1); // monic leading term of the modulus
            for (int dd = k; dd >= d; --dd) {
                int c = rem[dd];
                if (c == 0) continue;
                for (int i = 0; i <= d; ++i)
                    rem[dd - d + i] = ((rem[dd - d + i] - c * f[i]) % p + p * p) % p;
            }
            bool zero = true;
            for (int i = 0; i < d; ++i)
                if (rem[i] != 0) zero = false;
            if (zero) return false;
        }
    }
    return true;
}

} // namespace

PrimePowerField PrimePowerField::build(int p, int k, int order_limit) {
    if (!is_prime(p)) throw NonPrimeError(p);
    if (k < 1) throw UnsupportedSizeError(k, 1);
    long long q = 1;
    for (int i = 0; i < k; ++i) {
        q *= p;
        if (q > kHardOrderLimit) throw UnsupportedSizeError(q, std::min<long long>(order_limit, kHardOrderLimit));
    }
    if (q > order_limit) throw UnsupportedSizeError(q, order_limit);

    PrimePowerField f;
    f.p_ = p;
    f.k_ = k;
    f.q_ = static_cast<int>(q);

    if (k == 1) {
        f.modulus_ = {0, 1};
    } else {
        // Smallest (by base-p index of the non-leading coefficients) monic
        // irreducible of degree k.
        long long count = 1;
        for (int i = 0; i < k; ++i) count *= p;
        bool found = false;
        for (long long ci = 0; ci < count && !found; ++ci) {
            Poly cand = poly_from_index(ci, p, k);
            if (modulus_irreducible(cand, p, k)) {
                f.modulus_.assign(cand.begin(), cand.end());
                f.modulus_.push_back(1);
                found = true;
            }
        }
        if (!found) throw std::logic_error("no irreducible modulus found"); // cannot happen
    }

    const int n = f.q_;
    f.add_.resize(static_cast<std::size_t>(n) * n);
    f.mul_.resize(static_cast<std::size_t>(n) * n);
    f.neg_.resize(n);
    f.inv_.assign(n, 0);

    Poly modulus(f.modulus_.begin(), f.modulus_.end());
    for (int a = 0; a < n; ++a) {
        Poly pa = poly_from_index(a, p, k);
        for (int b = 0; b < n; ++b) {
            Poly pb = poly_from_index(b, p, k);
            Poly sum(k);
            for (int i = 0; i < k; ++i) sum[i] = (pa[i] + pb[i]) % p;
            f.add_[f.idx(static_cast<Felem>(a), static_cast<Felem>(b))] =
                static_cast<Felem>(poly_to_index(sum, p, k));
            Poly prod = poly_mulmod(pa, pb, modulus, p, k);
            f.mul_[f.idx(static_cast<Felem>(a), static_cast<Felem>(b))] =
                static_cast<Felem>(poly_to_index(prod, p, k));
        }
        Poly na(k);
        for (int i = 0; i < k; ++i) na[i] = (p - pa[i]) % p;
        f.neg_[a] = static_cast<Felem>(poly_to_index(na, p, k));
    }
    for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b)
            if (f.mul_[f.idx(static_cast<Felem>(a), static_cast<Felem>(b))] == 1) f.inv_[a] = static_cast<Felem>(b);

    return f;
}

int PrimePowerField::element_order(Felem a) const {
    if (a == 0) throw ZeroDivisorError();
    int ord = 1;
    Felem x = a;
    while (x != 1) {
        x = mul(x, a);
        ++ord;
    }
    return ord;
}

} // namespace hallplane
