#include "hallplane/build.hpp"

#include <stdexcept>

namespace hallplane {

std::shared_ptr<const HallSystem> make_hall_system(int p, int k, int r, int s) {
    PrimePowerField F = PrimePowerField::build(p, k);
    if (F.q() > kMaxPlaneBaseOrder)
        throw UnsupportedSizeError(F.q(), kMaxPlaneBaseOrder);
    if (r < 0 || s < 0) return std::make_shared<HallSystem>(std::move(F));
    if (r >= F.q() || s >= F.q())
        throw std::invalid_argument("defining coefficients must be element indices below q");
    return std::make_shared<HallSystem>(std::move(F), static_cast<Felem>(r),
                                        static_cast<Felem>(s));
}

PlaneTables make_hall_plane(int p, int k, int r, int s) {
    return PlaneTables::build(make_hall_system(p, k, r, s));
}

PlaneTables make_oracle_plane(int p, int k) {
    {
        PrimePowerField base = PrimePowerField::build(p, k);
        if (base.q() > kMaxPlaneBaseOrder)
            throw UnsupportedSizeError(base.q(), kMaxPlaneBaseOrder);
    }
    PrimePowerField big =
        PrimePowerField::build(p, 2 * k, kMaxPlaneBaseOrder * kMaxPlaneBaseOrder);
    return PlaneTables::build(std::make_shared<FieldOracle>(std::move(big)));
}

} // namespace hallplane
