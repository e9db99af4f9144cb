#pragma once

#include <memory>

#include "hallplane/plane.hpp"

namespace hallplane {

/// Largest base-field order for which the dense plane tables stay desk-sized
/// (order-49 plane: ~24 MB per table).
inline constexpr int kMaxPlaneBaseOrder = 7;

/// Hall system over F_{p^k} with the given defining quadratic, or the
/// smallest rootless (r, s) when r or s is negative.
std::shared_ptr<const HallSystem> make_hall_system(int p, int k, int r = -1, int s = -1);

PlaneTables make_hall_plane(int p, int k, int r = -1, int s = -1);

/// The classical comparison plane of order (p^k)^2.
PlaneTables make_oracle_plane(int p, int k);

} // namespace hallplane
