// SPDX-License-Identifier: Apache-2.0
// Built with -mavx2 only (no -mfma) so that multiply and add stay separate
// instructions and match the scalar reference bit for bit.
#include <immintrin.h>

#include <limits>

#include "tphw/kernels.hpp"

namespace tphw::kernels::avx2 {

void distance2_grid(const PointBlock& a, const PointBlock& b, const Vec3& shift,
                    std::span<double> out) {
  const std::size_t nb = b.size();
  const std::size_t nb4 = nb & ~std::size_t{3};
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double ax = a.x[i] - shift.x;
    const double ay = a.y[i] - shift.y;
    const double az = a.z[i] - shift.z;
    const __m256d vax = _mm256_set1_pd(ax);
    const __m256d vay = _mm256_set1_pd(ay);
    const __m256d vaz = _mm256_set1_pd(az);
    double* row = out.data() + i * nb;
    std::size_t j = 0;
    for (; j < nb4; j += 4) {
      const __m256d dx = _mm256_sub_pd(vax, _mm256_loadu_pd(b.x.data() + j));
      const __m256d dy = _mm256_sub_pd(vay, _mm256_loadu_pd(b.y.data() + j));
      const __m256d dz = _mm256_sub_pd(vaz, _mm256_loadu_pd(b.z.data() + j));
      __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
      d2 = _mm256_add_pd(d2, _mm256_mul_pd(dz, dz));
      _mm256_storeu_pd(row + j, d2);
    }
    for (; j < nb; ++j) {
      const double dx = ax - b.x[j];
      const double dy = ay - b.y[j];
      const double dz = az - b.z[j];
      row[j] = dx * dx + dy * dy + dz * dz;
    }
  }
}

double min_distance2(const PointBlock& a, const PointBlock& b, const Vec3& shift) {
  const std::size_t nb = b.size();
  const std::size_t nb4 = nb & ~std::size_t{3};
  __m256d vbest = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double ax = a.x[i] - shift.x;
    const double ay = a.y[i] - shift.y;
    const double az = a.z[i] - shift.z;
    const __m256d vax = _mm256_set1_pd(ax);
    const __m256d vay = _mm256_set1_pd(ay);
    const __m256d vaz = _mm256_set1_pd(az);
    std::size_t j = 0;
    for (; j < nb4; j += 4) {
      const __m256d dx = _mm256_sub_pd(vax, _mm256_loadu_pd(b.x.data() + j));
      const __m256d dy = _mm256_sub_pd(vay, _mm256_loadu_pd(b.y.data() + j));
      const __m256d dz = _mm256_sub_pd(vaz, _mm256_loadu_pd(b.z.data() + j));
      __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
      d2 = _mm256_add_pd(d2, _mm256_mul_pd(dz, dz));
      vbest = _mm256_min_pd(vbest, d2);
    }
    for (; j < nb; ++j) {
      const double dx = ax - b.x[j];
      const double dy = ay - b.y[j];
      const double dz = az - b.z[j];
      const double d2 = dx * dx + dy * dy + dz * dz;
      best = d2 < best ? d2 : best;
    }
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, vbest);
  for (double v : lanes) best = v < best ? v : best;
  return best;
}

}  // namespace tphw::kernels::avx2
