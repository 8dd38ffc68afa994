// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "tphw/vec3.hpp"

namespace tphw {

/// Translation centering of the cubic cell. Body centering adds the
/// translation (L/2, L/2, L/2); the double Laves weaves need it for their
/// periodic unit to hold six helices.
enum class Centering { Primitive, Body };

/// Cubic translation lattice with cell edge `period`. Generators are the
/// axis-aligned cell edges, plus the body diagonal half-vector when centered.
class Lattice {
 public:
  explicit Lattice(double period = 1.0, Centering centering = Centering::Primitive);

  double period() const noexcept { return period_; }
  Centering centering() const noexcept { return centering_; }
  bool body_centered() const noexcept { return centering_ == Centering::Body; }

  /// True when `t` is a lattice vector within `tol` (absolute, per component).
  bool contains(const Vec3& t, double tol = 1e-9) const;

  /// Shortest lattice-equivalent representative of a displacement.
  Vec3 minimum_image(const Vec3& delta) const;

  /// All lattice vectors T with |T - center| <= radius, sorted
  /// lexicographically by (x, y, z).
  std::vector<Vec3> translations_within(const Vec3& center, double radius) const;

  Lattice scaled(double s) const { return Lattice(period_ * s, centering_); }

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  double period_;
  Centering centering_;
};

enum class DirectionFamily { Fam100, Fam111 };

/// FAM100: (1,0,0),(0,1,0),(0,0,1). FAM111: normalized (1,1,1),(1,-1,-1),
/// (-1,1,-1),(-1,-1,1). The order is part of the catalog file contract.
std::vector<Vec3> family_directions(DirectionFamily family);

/// Which family member `d` is parallel to (either sign), if any.
struct AxisClass {
  DirectionFamily family;
  int index;  // into family_directions(family)
  int sign;   // +1 if d matches the listed direction, -1 if antiparallel
};
std::optional<AxisClass> classify_axis(const Vec3& d, double tol = 1e-9);

struct Frame {
  Vec3 u;
  Vec3 v;
  Vec3 d;
};

/// Deterministic right-handed frame around a unit axis. Throws
/// InvalidDirection if |d| differs from 1 by more than 1e-9.
Frame frame_for_direction(const Vec3& d);

/// Shortest lattice translation parallel to `d`. Throws UnsupportedAxis for
/// directions outside both families.
double axis_repeat_length(const Vec3& d, const Lattice& lattice);

/// Lattice vectors with Chebyshev norm <= shells * L in lexicographic order.
/// Primitive lattices yield (2s+1)^3 entries.
std::vector<Vec3> image_translations(const Lattice& lattice, int shells);

}  // namespace tphw
