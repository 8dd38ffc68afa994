// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "tphw/vec3.hpp"

// Squared-distance kernels over sampled curve points. Each kernel has a
// scalar reference version and an AVX2 version; the dispatcher picks one at
// runtime from the CPU feature bits. Both versions evaluate
// ((dx*dx + dy*dy) + dz*dz) in the same order without fused multiply-add, so
// their results are bit-identical.
namespace tphw::kernels {

/// Structure-of-arrays block of sample points.
struct PointBlock {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> z;

  std::size_t size() const noexcept { return x.size(); }
  void reserve(std::size_t n) { x.reserve(n); y.reserve(n); z.reserve(n); }
  void push_back(const Vec3& p) { x.push_back(p.x); y.push_back(p.y); z.push_back(p.z); }
  Vec3 operator[](std::size_t i) const { return {x[i], y[i], z[i]}; }
};

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

/// Best instruction set supported by this CPU and build.
Isa detected_isa();
/// Instruction set the dispatcher currently uses. Defaults to detected_isa(),
/// or Scalar when the environment variable TPHW_ISA=scalar is set.
Isa active_isa();
/// Overrides the dispatcher; requests above detected_isa() are clamped.
void set_active_isa(Isa isa);

/// out[i * b.size() + j] = |a[i] - shift - b[j]|^2. `out` must hold
/// a.size() * b.size() values.
void distance2_grid(const PointBlock& a, const PointBlock& b, const Vec3& shift,
                    std::span<double> out);

/// min over i, j of |a[i] - shift - b[j]|^2; +inf for empty input.
double min_distance2(const PointBlock& a, const PointBlock& b, const Vec3& shift);

namespace scalar {
void distance2_grid(const PointBlock& a, const PointBlock& b, const Vec3& shift,
                    std::span<double> out);
double min_distance2(const PointBlock& a, const PointBlock& b, const Vec3& shift);
}  // namespace scalar

namespace avx2 {
// Only call when detected_isa() == Isa::Avx2.
void distance2_grid(const PointBlock& a, const PointBlock& b, const Vec3& shift,
                    std::span<double> out);
double min_distance2(const PointBlock& a, const PointBlock& b, const Vec3& shift);
}  // namespace avx2

}  // namespace tphw::kernels
