// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <bit>
#include <cmath>
#include <random>

#include "tphw/catalog.hpp"
#include "tphw/kernels.hpp"
#include "tphw/proximity.hpp"

using namespace tphw;
using namespace tphw::kernels;

namespace {

PointBlock random_block(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-2, 2);
  PointBlock b;
  for (std::size_t i = 0; i < n; ++i) b.push_back({u(rng), u(rng), u(rng)});
  return b;
}

// Restores the dispatcher when a test case ends.
struct IsaGuard {
  Isa saved = active_isa();
  ~IsaGuard() { set_active_isa(saved); }
};

}  // namespace

TEST_CASE("scalar kernel against direct evaluation") {
  std::mt19937_64 rng(1);
  const PointBlock a = random_block(rng, 9), b = random_block(rng, 13);
  const Vec3 shift{0.5, -1, 2};
  std::vector<double> out(a.size() * b.size());
  scalar::distance2_grid(a, b, shift, out);
  double m = INFINITY;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Vec3 d = a[i] - shift - b[j];
      CHECK(out[i * b.size() + j] == doctest::Approx(norm2(d)).epsilon(1e-15));
      m = std::min(m, norm2(d));
    }
  CHECK(scalar::min_distance2(a, b, shift) == doctest::Approx(m).epsilon(1e-15));
  CHECK(std::isinf(scalar::min_distance2(PointBlock{}, b, shift)));
}

TEST_CASE("AVX2 kernels are bit-identical to the scalar reference") {
  if (detected_isa() != Isa::Avx2) {
    MESSAGE("AVX2 not available on this CPU/build; equivalence not exercised");
    return;
  }
  std::mt19937_64 rng(2);
  for (std::size_t na : {0u, 1u, 3u, 4u, 5u, 17u, 64u})
    for (std::size_t nb : {0u, 1u, 2u, 7u, 8u, 33u, 96u}) {
      const PointBlock a = random_block(rng, na), b = random_block(rng, nb);
      const Vec3 shift{0.25, 1.5, -0.75};
      std::vector<double> s(na * nb), v(na * nb);
      scalar::distance2_grid(a, b, shift, s);
      avx2::distance2_grid(a, b, shift, v);
      bool same = true;
      for (std::size_t k = 0; k < s.size(); ++k)
        same = same && std::bit_cast<std::uint64_t>(s[k]) == std::bit_cast<std::uint64_t>(v[k]);
      CHECK(same);
      const double ms = scalar::min_distance2(a, b, shift), mv = avx2::min_distance2(a, b, shift);
      CHECK(std::bit_cast<std::uint64_t>(ms) == std::bit_cast<std::uint64_t>(mv));
    }
}

TEST_CASE("dispatcher switches and clamps") {
  IsaGuard guard;
  set_active_isa(Isa::Scalar);
  CHECK(active_isa() == Isa::Scalar);
  set_active_isa(Isa::Avx2);
  CHECK(active_isa() == detected_isa());
  CHECK(to_string(Isa::Scalar) == "scalar");
}

TEST_CASE("clearance is identical under either kernel") {
  IsaGuard guard;
  for (const char* name : {"100-simple-trio", "100-braid-laves", "100-gyroid"}) {
    const WeaveSpec w = build_weave(name);
    set_active_isa(Isa::Scalar);
    const ClearanceReport s = clearance(w);
    set_active_isa(Isa::Avx2);
    const ClearanceReport v = clearance(w);
    CHECK(s.min_gap == v.min_gap);
    CHECK(s.pair_i == v.pair_i);
    CHECK(s.pair_j == v.pair_j);
    CHECK(s.witness.translation == v.witness.translation);
  }
}
