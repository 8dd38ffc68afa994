// SPDX-License-Identifier: Apache-2.0
#include <limits>

#include "tphw/kernels.hpp"

namespace tphw::kernels::scalar {

void distance2_grid(const PointBlock& a, const PointBlock& b, const Vec3& shift,
                    std::span<double> out) {
  const std::size_t nb = b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double ax = a.x[i] - shift.x;
    const double ay = a.y[i] - shift.y;
    const double az = a.z[i] - shift.z;
    double* row = out.data() + i * nb;
    for (std::size_t j = 0; j < nb; ++j) {
      const double dx = ax - b.x[j];
      const double dy = ay - b.y[j];
      const double dz = az - b.z[j];
      row[j] = dx * dx + dy * dy + dz * dz;
    }
  }
}

double min_distance2(const PointBlock& a, const PointBlock& b, const Vec3& shift) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double ax = a.x[i] - shift.x;
    const double ay = a.y[i] - shift.y;
    const double az = a.z[i] - shift.z;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const double dx = ax - b.x[j];
      const double dy = ay - b.y[j];
      const double dz = az - b.z[j];
      const double d2 = dx * dx + dy * dy + dz * dz;
      best = d2 < best ? d2 : best;
    }
  }
  return best;
}

}  // namespace tphw::kernels::scalar
