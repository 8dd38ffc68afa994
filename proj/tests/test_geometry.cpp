// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "tphw/error.hpp"
#include "tphw/helix.hpp"
#include "tphw/lattice.hpp"

using namespace tphw;

namespace {

bool close(const Vec3& a, const Vec3& b, double tol) { return norm(a - b) <= tol; }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no exception");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("frames are orthonormal and right handed") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> n;
  std::vector<Vec3> dirs = family_directions(DirectionFamily::Fam100);
  for (const auto& d : family_directions(DirectionFamily::Fam111)) dirs.push_back(d);
  for (int i = 0; i < 50; ++i) dirs.push_back(normalized(Vec3{n(rng), n(rng), n(rng)}));
  for (const Vec3& d : dirs) {
    const Frame f = frame_for_direction(d);
    CHECK(std::abs(norm(f.u) - 1) < 1e-12);
    CHECK(std::abs(norm(f.v) - 1) < 1e-12);
    CHECK(std::abs(dot(f.u, f.v)) < 1e-12);
    CHECK(std::abs(dot(f.u, d)) < 1e-12);
    CHECK(close(cross(f.u, f.v), d, 1e-12));
    // Deterministic.
    CHECK(frame_for_direction(d).u == f.u);
  }
  CHECK(kind_of([] { frame_for_direction({0, 0, 2}); }) == ErrorKind::InvalidDirection);
}

TEST_CASE("axis classification and repeat lengths") {
  const Lattice p(2.0), b(2.0, Centering::Body);
  for (int k = 0; k < 3; ++k) {
    const Vec3 d = family_directions(DirectionFamily::Fam100)[k];
    CHECK(axis_repeat_length(d, p) == doctest::Approx(2.0));
    CHECK(axis_repeat_length(-d, b) == doctest::Approx(2.0));
    const auto c = classify_axis(-d);
    REQUIRE(c);
    CHECK(c->index == k);
    CHECK(c->sign == -1);
  }
  for (const Vec3& d : family_directions(DirectionFamily::Fam111)) {
    CHECK(axis_repeat_length(d, p) == doctest::Approx(2.0 * std::sqrt(3.0)));
    CHECK(axis_repeat_length(d, b) == doctest::Approx(std::sqrt(3.0)));
    CHECK(p.contains(axis_repeat_length(d, p) * d));
    CHECK(b.contains(axis_repeat_length(d, b) * d));
  }
  CHECK_FALSE(classify_axis(normalized(Vec3{1, 1, 0})));
  CHECK(kind_of([&] { axis_repeat_length(normalized(Vec3{1, 1, 0}), p); }) ==
        ErrorKind::UnsupportedAxis);
}

TEST_CASE("lattice membership and minimum image") {
  const Lattice p(1.0), b(1.0, Centering::Body);
  CHECK(p.contains({1, -2, 3}));
  CHECK_FALSE(p.contains({0.5, 0.5, 0.5}));
  CHECK(b.contains({0.5, 0.5, -1.5}));
  CHECK_FALSE(b.contains({0.5, 0.5, 0}));
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int i = 0; i < 200; ++i) {
    const Vec3 d{u(rng), u(rng), u(rng)};
    for (const Lattice* l : {&p, &b}) {
      const Vec3 m = l->minimum_image(d);
      CHECK(l->contains(d - m, 1e-9));
      // No lattice vector in a generous box does better.
      bool shortest = true;
      for (const Vec3& t : oracle::lattice_box(*l, 4)) shortest = shortest && norm(m) <= norm(d - t) + 1e-12;
      CHECK(shortest);
    }
  }
}

TEST_CASE("translations_within matches exhaustive enumeration") {
  for (Centering c : {Centering::Primitive, Centering::Body}) {
    const Lattice l(1.0, c);
    const Vec3 center{0.3, -0.2, 0.7};
    const double r = 2.1;
    auto got = l.translations_within(center, r);
    std::size_t want = 0;
    for (const Vec3& t : oracle::lattice_box(l, 5)) want += norm(t - center) <= r;
    CHECK(got.size() == want);
    CHECK(std::is_sorted(got.begin(), got.end(), [](const Vec3& a, const Vec3& b) {
      return a.x != b.x ? a.x < b.x : a.y != b.y ? a.y < b.y : a.z < b.z;
    }));
  }
  CHECK(image_translations(Lattice(1.0), 2).size() == 125);
}

TEST_CASE("helix point formula") {
  HelixSpec h{{0.1, 0.2, 0.3}, {0, 0, 1}, 0.25, 0.5, 0.4, -1, 0.0};
  const Frame f = frame_for_direction(h.direction);
  for (double t : {0.0, 0.7, 2.0, -5.0}) {
    const Vec3 want = h.anchor + (h.pitch * t / kTwoPi) * h.direction +
                      h.radius * (std::cos(t + h.phase) * f.u + h.handedness * std::sin(t + h.phase) * f.v);
    CHECK(close(helix_point(h, t), want, 1e-14));
    const HelixCurve c(h);
    const double e = 1e-6;
    const Vec3 fd = (c.point(t + e) - c.point(t - e)) / (2 * e);
    CHECK(close(c.first_derivative(t), fd, 1e-8));
    const Vec3 fd2 = (c.first_derivative(t + e) - c.first_derivative(t - e)) / (2 * e);
    CHECK(close(c.second_derivative(t), fd2, 1e-8));
    CHECK(std::abs(norm(helix_tangent(h, t)) - 1) < 1e-12);
  }
}

TEST_CASE("helix transforms carry the parametrization") {
  std::mt19937_64 rng(11);
  std::vector<Mat3> qs = oracle::cube_rotations();
  qs.push_back(kInversion);
  qs.push_back(kMirrorX);
  for (int trial = 0; trial < 20; ++trial) {
    const HelixSpec h = oracle::random_helix(rng);
    for (const Mat3& q : qs) {
      const Vec3 shift{0.1, -0.4, 0.25};
      const HelixSpec g = transform(h, q, shift);
      CHECK(g.handedness == (det(q) > 0 ? h.handedness : -h.handedness));
      for (double t : {0.0, 1.3, 4.0}) CHECK(close(helix_point(g, t), q * helix_point(h, t) + shift, 1e-12));
    }
    CHECK(mirror(h).handedness == -h.handedness);
  }
}

TEST_CASE("commensurability") {
  const Lattice l(1.0);
  HelixSpec h;
  h.direction = {0, 0, 1};
  h.radius = 0.2;
  h.pitch = 0.5;
  CHECK(turns_per_repeat(h, l) == 2);
  h.pitch = 0.3;
  CHECK(kind_of([&] { turns_per_repeat(h, l); }) == ErrorKind::IncommensurateHelix);
  h.direction = normalized(Vec3{1, 1, 1});
  h.pitch = std::sqrt(3.0) / 3;
  CHECK(turns_per_repeat(h, l) == 3);
}

TEST_CASE("helix invariants name the broken field") {
  HelixSpec h;
  h.radius = -0.1;
  CHECK(kind_of([&] { check_invariants(h); }) == ErrorKind::InvariantViolation);
  h = {};
  h.handedness = 0;
  CHECK(kind_of([&] { check_invariants(h); }) == ErrorKind::InvariantViolation);
  h = {};
  h.pitch = 0.0;
  CHECK_THROWS_AS(check_invariants(h), Error);
}

TEST_CASE("same curve under lattice translation, rebase and reversal") {
  std::mt19937_64 rng(5);
  const Lattice l(1.0);
  for (int trial = 0; trial < 40; ++trial) {
    const HelixSpec h = oracle::random_helix(rng);
    CHECK(same_curve(h, translate(h, {1, -2, 0}), l));
    CHECK(same_curve(h, rebase(h, h.anchor + 0.37 * h.direction, -h.direction), l));
    CHECK_FALSE(same_curve(h, translate(h, {0.5, 0.25, 0}), l));
    const CanonicalHelix a = canonicalize(h, l), b = canonicalize(translate(h, {0, 0, 3}), l);
    CHECK(same_canonical(a, b, l));
  }
}

TEST_CASE("normalize_angle") {
  CHECK(normalize_angle(-0.5) == doctest::Approx(kTwoPi - 0.5));
  CHECK(normalize_angle(3 * kTwoPi + 0.25) == doctest::Approx(0.25));
  const double a = normalize_angle(-1e-18);
  CHECK(a >= 0.0);
  CHECK(a < kTwoPi);
}

TEST_CASE("frames for a million random axes") {
  std::mt19937_64 rng(1234);
  std::normal_distribution<double> n;
  double worst = 0;
  for (int i = 0; i < 1000000; ++i) {
    const Vec3 d = normalized(Vec3{n(rng), n(rng), n(rng)});
    const Frame f = frame_for_direction(d);
    worst = std::max({worst, std::abs(dot(f.u, f.v)), std::abs(dot(f.u, d)), std::abs(dot(f.v, d)),
                      std::abs(norm(f.u) - 1), std::abs(norm(f.v) - 1), norm(cross(f.u, f.v) - d)});
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("direction family and image set identities") {
  Vec3 sum;
  for (const Vec3& d : family_directions(DirectionFamily::Fam111)) sum += d;
  CHECK(norm(sum) < 1e-12);
  for (int s = 0; s <= 3; ++s) {
    const auto ts = image_translations(Lattice(1.5), s);
    CHECK(ts.size() == static_cast<std::size_t>((2 * s + 1) * (2 * s + 1) * (2 * s + 1)));
    for (const Vec3& t : ts) {
      bool found = false;
      for (const Vec3& u : ts) found = found || norm(t + u) < 1e-12;
      CHECK(found);
    }
  }
}

TEST_CASE("screw and lattice periodicity") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> ut(-20, 20);
  const Lattice l(1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const HelixSpec h = oracle::random_helix(rng);
    const int k = turns_per_repeat(h, l);
    const double rep = axis_repeat_length(h.direction, l);
    for (int s = 0; s < 5; ++s) {
      const double t = ut(rng);
      CHECK(norm(helix_point(h, t + kTwoPi) - helix_point(h, t) - h.pitch * h.direction) < 1e-12);
      CHECK(norm(helix_point(h, t + kTwoPi * k) - helix_point(h, t) - rep * h.direction) < 1e-10);
    }
  }
}

TEST_CASE("mirroring both helices preserves point distances") {
  std::mt19937_64 rng(78);
  std::uniform_real_distribution<double> ut(-10, 10);
  for (int trial = 0; trial < 100; ++trial) {
    const HelixSpec a = oracle::random_helix(rng), b = oracle::random_helix(rng);
    const HelixSpec ma = mirror(a), mb = mirror(b);
    const double s = ut(rng), t = ut(rng);
    CHECK(std::abs(norm(helix_point(a, s) - helix_point(b, t)) -
                   norm(helix_point(ma, s) - helix_point(mb, t))) < 1e-12);
  }
}

TEST_CASE("canonicalize is idempotent and ignores lattice shifts") {
  std::mt19937_64 rng(79);
  const Lattice l(1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const HelixSpec h = oracle::random_helix(rng);
    const CanonicalHelix c = canonicalize(h, l);
    const CanonicalHelix cc = canonicalize(c.helix, l);
    CHECK(same_canonical(c, cc, l));
    CHECK(norm(c.helix.anchor - cc.helix.anchor) < 1e-9);
    HelixSpec moved = translate(h, {2, -1, 1});
    moved.phase += kTwoPi;
    CHECK(same_canonical(c, canonicalize(moved, l), l));
  }
}
