// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <numbers>

#include "tphw/lattice.hpp"
#include "tphw/vec3.hpp"

namespace tphw {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// One infinite circular helix with a solid tube around it. All lengths are
/// in lattice units.
///
///   P(t) = anchor + (pitch * t / 2pi) d + radius (cos(t+phase) u + hand * sin(t+phase) v)
///
/// with (u, v, d) = frame_for_direction(direction). hand = +1 is a right
/// handed screw; radius = 0 is a straight rod.
struct HelixSpec {
  Vec3 anchor;
  Vec3 direction{0, 0, 1};
  double radius = 0.0;
  double pitch = 1.0;
  double phase = 0.0;
  int handedness = 1;
  double tube_radius = 0.0;

  friend bool operator==(const HelixSpec&, const HelixSpec&) = default;
};

/// Throws InvariantViolation naming the first broken field.
void check_invariants(const HelixSpec& h);

/// Wraps an angle into [0, 2pi).
double normalize_angle(double angle);

/// Cached evaluator: the frame is computed once per helix.
class HelixCurve {
 public:
  explicit HelixCurve(const HelixSpec& h);

  Vec3 point(double t) const;
  Vec3 first_derivative(double t) const;
  Vec3 second_derivative(double t) const;

  const HelixSpec& spec() const noexcept { return spec_; }
  const Frame& frame() const noexcept { return frame_; }
  /// Axial advance per radian.
  double lead() const noexcept { return lead_; }

 private:
  HelixSpec spec_;
  Frame frame_;
  double lead_;
};

Vec3 helix_point(const HelixSpec& h, double t);

/// Unit tangent. Throws DegenerateHelix when radius and pitch are both zero.
Vec3 helix_tangent(const HelixSpec& h, double t);

/// Number of turns between consecutive lattice translations along the axis.
/// Throws IncommensurateHelix if repeat / pitch is not an integer within 1e-9.
int turns_per_repeat(const HelixSpec& h, const Lattice& lattice);

/// Image of the helix under x -> q x + shift. q must be orthogonal; improper
/// q flips the handedness. The parametrization is carried along, so
/// transform(h).point(t) == q * h.point(t) + shift.
HelixSpec transform(const HelixSpec& h, const Mat3& q, const Vec3& shift = {});

/// Reflection through the plane x = 0.
HelixSpec mirror(const HelixSpec& h);

HelixSpec translate(const HelixSpec& h, const Vec3& shift);

/// Same curve re-expressed with a new anchor on the axis and the axis
/// direction possibly reversed.
HelixSpec rebase(const HelixSpec& h, const Vec3& new_anchor, const Vec3& new_direction);

/// Helix in canonical position: direction equal to the listed family member,
/// anchor on a reference plane reduced into the fundamental domain, phase
/// re-expressed at that anchor. Straight rods get phase 0 and handedness +1.
struct CanonicalHelix {
  HelixSpec helix;
  int turns = 1;
};

CanonicalHelix canonicalize(const HelixSpec& h, const Lattice& lattice);

/// Field-wise comparison of canonical forms with periodic wrap on the anchor
/// and circular wrap on the phase.
bool same_canonical(const CanonicalHelix& a, const CanonicalHelix& b, const Lattice& lattice,
                    double tol = 1e-9);

/// True when the two specs describe the same lattice orbit of curves.
bool same_curve(const HelixSpec& a, const HelixSpec& b, const Lattice& lattice, double tol = 1e-9);

}  // namespace tphw
