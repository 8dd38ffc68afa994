// SPDX-License-Identifier: Apache-2.0
#include <atomic>
#include <cstdlib>
#include <cstring>

#include "tphw/kernels.hpp"

namespace tphw::kernels {

namespace {

Isa probe() {
#if defined(TPHW_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) return Isa::Avx2;
#endif
  return Isa::Scalar;
}

Isa initial() {
  const char* env = std::getenv("TPHW_ISA");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) return Isa::Scalar;
  return probe();
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{initial()};
  return isa;
}

}  // namespace

std::string_view to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

Isa detected_isa() {
  static const Isa isa = probe();
  return isa;
}

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (isa == Isa::Avx2 && detected_isa() != Isa::Avx2) isa = Isa::Scalar;
  active().store(isa, std::memory_order_relaxed);
}

void distance2_grid(const PointBlock& a, const PointBlock& b, const Vec3& shift,
                    std::span<double> out) {
#if defined(TPHW_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) return avx2::distance2_grid(a, b, shift, out);
#endif
  scalar::distance2_grid(a, b, shift, out);
}

double min_distance2(const PointBlock& a, const PointBlock& b, const Vec3& shift) {
#if defined(TPHW_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) return avx2::min_distance2(a, b, shift);
#endif
  return scalar::min_distance2(a, b, shift);
}

}  // namespace tphw::kernels
