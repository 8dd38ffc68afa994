// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "tphw/catalog.hpp"
#include "tphw/error.hpp"
#include "tphw/proximity.hpp"

using namespace tphw;

TEST_CASE("coaxial helices half a turn apart") {
  // |P1 - P2|^2 = 2 + 2 cos u + u^2 is smallest at u = 0.
  const Lattice l(kTwoPi);
  HelixSpec a{{0, 0, 0}, {0, 0, 1}, 1.0, kTwoPi, 0.0, 1, 0.0};
  HelixSpec b = a;
  b.phase = oracle::kPi;
  CHECK(std::abs(pair_min_distance(a, b, l).distance - 2.0) <= 1e-9);
}

TEST_CASE("perpendicular skew rods") {
  const Lattice l(1.0);
  HelixSpec x{{0, 0, 0}, {1, 0, 0}, 0.0, 1.0, 0.0, 1, 0.0};
  HelixSpec y{{0, 0, 0.5}, {0, 1, 0}, 0.0, 1.0, 0.0, 1, 0.0};
  CHECK(std::abs(pair_min_distance(x, y, l).distance - 0.5) <= 1e-12);
}

TEST_CASE("parallel rods report a non-isolated minimum") {
  const Lattice l(1.0);
  HelixSpec a{{0, 0, 0}, {0, 0, 1}, 0.0, 1.0, 0.0, 1, 0.0};
  HelixSpec b{{0.3, 0.4, 0}, {0, 0, 1}, 0.0, 1.0, 0.0, 1, 0.0};
  const auto w = pair_min_distance(a, b, l);
  CHECK(w.distance == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(w.non_isolated);
}

TEST_CASE("self distance of a rod is the lattice spacing") {
  HelixSpec a{{0.2, 0.3, 0}, {0, 0, 1}, 0.0, 1.0, 0.0, 1, 0.0};
  CHECK(self_min_distance(a, Lattice(1.0)).distance == doctest::Approx(1.0));
  CHECK(self_min_distance(a, Lattice(1.0, Centering::Body)).distance ==
        doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("pair distance agrees with the brute-force oracle") {
  std::mt19937_64 rng(20261015);
  const Lattice l(1.0);
  for (int trial = 0; trial < 25; ++trial) {
    const HelixSpec a = oracle::random_helix(rng), b = oracle::random_helix(rng);
    const double fast = pair_min_distance(a, b, l).distance;
    const double slow = oracle::brute_force_distance(a, b, l);
    CHECK(std::abs(fast - slow) <= 1e-6);
  }
}

TEST_CASE("pair distance is symmetric and equivariant") {
  std::mt19937_64 rng(99);
  const Lattice l(1.0);
  const auto rots = oracle::cube_rotations();
  for (int trial = 0; trial < 10; ++trial) {
    const HelixSpec a = oracle::random_helix(rng), b = oracle::random_helix(rng);
    const double d = pair_min_distance(a, b, l).distance;
    CHECK(pair_min_distance(b, a, l).distance == doctest::Approx(d).epsilon(1e-10));
    const Mat3& q = rots[trial % rots.size()];
    CHECK(pair_min_distance(transform(a, q), transform(b, q), l).distance ==
          doctest::Approx(d).epsilon(1e-10));
    CHECK(pair_min_distance(translate(a, {0, 3, -1}), b, l).distance ==
          doctest::Approx(d).epsilon(1e-10));
  }
}

TEST_CASE("clearance is the smallest gap over pairs and self images") {
  const WeaveSpec w = build_weave("100-trigonal-laves");
  const ClearanceReport r = clearance(w);
  double want = 1e300;
  for (std::size_t i = 0; i < w.helices.size(); ++i) {
    const auto& hi = w.helices[i];
    want = std::min(want, self_min_distance(hi, w.lattice).distance - 2 * hi.tube_radius);
    for (std::size_t j = i + 1; j < w.helices.size(); ++j) {
      const auto& hj = w.helices[j];
      want = std::min(want, pair_min_distance(hi, hj, w.lattice).distance - hi.tube_radius - hj.tube_radius);
    }
  }
  CHECK(r.min_gap == doctest::Approx(want).epsilon(1e-12));
  CHECK(r.pair_i <= r.pair_j);
  CHECK(r.pair_count_evaluated == w.helices.size() * (w.helices.size() + 1) / 2);
  CHECK(min_centerline_distance(w) ==
        doctest::Approx(r.min_gap + 2 * w.helices[0].tube_radius).epsilon(1e-9));
}

TEST_CASE("contacts respect the tolerance") {
  const WeaveSpec w = build_weave("100-simple-annular");
  const double tol = 0.02;
  const auto cs = find_contacts(w, tol);
  CHECK_FALSE(cs.empty());
  for (const auto& c : cs) {
    CHECK(c.gap <= tol + 1e-12);
    CHECK(c.helix_i <= c.helix_j);
    const auto& a = w.helices[c.helix_i];
    const auto& b = w.helices[c.helix_j];
    const Vec3 pa = helix_point(a, c.witness.s), pb = helix_point(b, c.witness.t) + c.witness.translation;
    CHECK(norm(pa - pb) == doctest::Approx(c.witness.distance).epsilon(1e-9));
  }
}

TEST_CASE("grid too coarse") {
  HelixSpec a;
  CHECK_THROWS_AS(pair_min_distance(a, a, Lattice(1.0), 8), Error);
}

TEST_CASE("growing every tube by delta lowers clearance by two delta") {
  for (const char* name : {"100-simple-annular", "100-braid-laves", "100-gyroid"}) {
    const WeaveSpec w = build_weave(name);
    const double g = clearance(w).min_gap;
    const double delta = 0.0125;
    const double g2 = clearance(with_tube_radius(w, w.helices[0].tube_radius + delta)).min_gap;
    CHECK(g2 == doctest::Approx(g - 2 * delta).epsilon(1e-12));
  }
}

TEST_CASE("a finer grid never reports a larger minimum") {
  std::mt19937_64 rng(31);
  const Lattice l(1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const HelixSpec a = oracle::random_helix(rng), b = oracle::random_helix(rng);
    for (int n : {24, 48, 96}) {
      const double coarse = pair_min_distance(a, b, l, n).distance;
      const double fine = pair_min_distance(a, b, l, 2 * n).distance;
      CHECK(fine <= coarse + 1e-9);
    }
  }
}
