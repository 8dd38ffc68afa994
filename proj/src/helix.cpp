// SPDX-License-Identifier: Apache-2.0
#include "tphw/helix.hpp"

#include <cmath>
#include <string>

#include "tphw/error.hpp"

namespace tphw {

namespace {

void require(bool ok, const char* field) {
  if (!ok) throw Error(ErrorKind::InvariantViolation, field);
}

// Anchor-plane convention for canonical forms: <100> axes cross the plane
// where their own coordinate vanishes, <111> axes cross z = 0.
int reference_axis(const AxisClass& cls) {
  return cls.family == DirectionFamily::Fam100 ? cls.index : 2;
}

Vec3 slide_to_plane(const Vec3& point, const Vec3& d, int axis) {
  const double s = -point[axis] / d[axis];
  Vec3 out = point + s * d;
  out[axis] = 0.0;
  return out;
}

double reduce_coordinate(double v, double period, double tol) {
  double r = v - period * std::floor(v / period);
  if (r >= period - tol || r < 0.0) r = 0.0;
  return r;
}

}  // namespace

double normalize_angle(double angle) {
  double r = std::fmod(angle, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  return r;
}

void check_invariants(const HelixSpec& h) {
  require(is_finite(h.anchor), "anchor");
  require(is_finite(h.direction) && std::abs(norm(h.direction) - 1.0) <= 1e-9, "direction");
  require(std::isfinite(h.radius) && h.radius >= 0.0, "radius");
  require(std::isfinite(h.pitch) && h.pitch > 0.0, "pitch");
  require(std::isfinite(h.phase) && h.phase >= 0.0 && h.phase < kTwoPi, "phase");
  require(h.handedness == 1 || h.handedness == -1, "handedness");
  require(std::isfinite(h.tube_radius) && h.tube_radius >= 0.0, "tube_radius");
}

HelixCurve::HelixCurve(const HelixSpec& h)
    : spec_(h), frame_(frame_for_direction(h.direction)), lead_(h.pitch / kTwoPi) {}

Vec3 HelixCurve::point(double t) const {
  const double c = std::cos(t + spec_.phase);
  const double s = std::sin(t + spec_.phase);
  return spec_.anchor + (lead_ * t) * frame_.d +
         spec_.radius * (c * frame_.u + (spec_.handedness * s) * frame_.v);
}

Vec3 HelixCurve::first_derivative(double t) const {
  const double c = std::cos(t + spec_.phase);
  const double s = std::sin(t + spec_.phase);
  return lead_ * frame_.d + spec_.radius * (-s * frame_.u + (spec_.handedness * c) * frame_.v);
}

Vec3 HelixCurve::second_derivative(double t) const {
  const double c = std::cos(t + spec_.phase);
  const double s = std::sin(t + spec_.phase);
  return -spec_.radius * (c * frame_.u + (spec_.handedness * s) * frame_.v);
}

Vec3 helix_point(const HelixSpec& h, double t) { return HelixCurve(h).point(t); }

Vec3 helix_tangent(const HelixSpec& h, double t) {
  if (h.radius == 0.0 && h.pitch == 0.0)
    throw Error(ErrorKind::DegenerateHelix, "radius and pitch are both zero");
  const Frame f = frame_for_direction(h.direction);
  const double c = std::cos(t + h.phase);
  const double s = std::sin(t + h.phase);
  const Vec3 dp = (h.pitch / kTwoPi) * f.d + h.radius * (-s * f.u + (h.handedness * c) * f.v);
  return normalized(dp);
}

int turns_per_repeat(const HelixSpec& h, const Lattice& lattice) {
  const double repeat = axis_repeat_length(h.direction, lattice);
  const double ratio = repeat / h.pitch;
  const double k = std::round(ratio);
  if (!(k >= 1.0) || std::abs(ratio - k) > 1e-9)
    throw Error(ErrorKind::IncommensurateHelix,
                "axis repeat " + std::to_string(repeat) + " is not a whole number of pitches " +
                    std::to_string(h.pitch));
  return static_cast<int>(k);
}

HelixSpec transform(const HelixSpec& h, const Mat3& q, const Vec3& shift) {
  const Frame f = frame_for_direction(h.direction);
  HelixSpec out = h;
  out.anchor = q * h.anchor + shift;
  out.direction = normalized(q * h.direction);
  out.handedness = det(q) > 0 ? h.handedness : -h.handedness;
  const Vec3 w = q * (std::cos(h.phase) * f.u + (h.handedness * std::sin(h.phase)) * f.v);
  const Frame g = frame_for_direction(out.direction);
  out.phase = normalize_angle(std::atan2(out.handedness * dot(w, g.v), dot(w, g.u)));
  return out;
}

HelixSpec mirror(const HelixSpec& h) { return transform(h, kMirrorX); }

HelixSpec translate(const HelixSpec& h, const Vec3& shift) {
  HelixSpec out = h;
  out.anchor += shift;
  return out;
}

HelixSpec rebase(const HelixSpec& h, const Vec3& new_anchor, const Vec3& new_direction) {
  const Frame f = frame_for_direction(h.direction);
  const double s = dot(new_anchor - h.anchor, f.d);
  const double t = s * kTwoPi / h.pitch;
  const Vec3 w = std::cos(t + h.phase) * f.u + (h.handedness * std::sin(t + h.phase)) * f.v;
  const Frame g = frame_for_direction(new_direction);
  HelixSpec out = h;
  out.anchor = new_anchor;
  out.direction = new_direction;
  out.phase = normalize_angle(std::atan2(h.handedness * dot(w, g.v), dot(w, g.u)));
  return out;
}

CanonicalHelix canonicalize(const HelixSpec& h, const Lattice& lattice) {
  const int turns = turns_per_repeat(h, lattice);
  const auto cls = classify_axis(h.direction);
  const Vec3 d = family_directions(cls->family)[cls->index];
  const int axis = reference_axis(*cls);
  const double L = lattice.period();
  const double tol = 1e-9 * L;

  const Vec3 x = slide_to_plane(h.anchor, d, axis);
  // In-plane coordinates to reduce modulo the lattice.
  int ci = (axis + 1) % 3, cj = (axis + 2) % 3;
  if (cls->family == DirectionFamily::Fam111) ci = 0, cj = 1;

  Vec3 shift;
  auto reduce = [&] {
    Vec3 y = x + shift;
    shift[ci] += reduce_coordinate(y[ci], L, tol) - y[ci];
    shift[cj] += reduce_coordinate(y[cj], L, tol) - y[cj];
  };
  reduce();
  if (lattice.body_centered() && cls->family == DirectionFamily::Fam100 &&
      (x + shift)[ci] >= 0.5 * L - tol) {
    shift -= Vec3{0.5 * L, 0.5 * L, 0.5 * L};
    reduce();
  }

  const HelixSpec moved = translate(h, shift);
  const Vec3 anchor = slide_to_plane(moved.anchor, d, axis);
  HelixSpec c = rebase(moved, anchor, d);
  c.anchor[ci] = reduce_coordinate(c.anchor[ci], L, tol);
  c.anchor[cj] = reduce_coordinate(c.anchor[cj], L, tol);
  if (c.radius == 0.0) {
    c.phase = 0.0;
    c.handedness = 1;
  } else if (c.phase >= kTwoPi - 1e-12) {
    c.phase = 0.0;
  }
  return {c, turns};
}

bool same_canonical(const CanonicalHelix& a, const CanonicalHelix& b, const Lattice& lattice,
                    double tol) {
  const HelixSpec& p = a.helix;
  const HelixSpec& q = b.helix;
  if (norm(p.direction - q.direction) > tol) return false;
  if (std::abs(p.radius - q.radius) > tol || std::abs(p.pitch - q.pitch) > tol) return false;
  if (p.radius > 0.0 && p.handedness != q.handedness) return false;

  const auto cls = classify_axis(p.direction);
  const int axis = reference_axis(*cls);
  const Vec3 delta = q.anchor - p.anchor;
  for (const Vec3& v : lattice.translations_within(delta, 2.0 * lattice.period())) {
    const HelixSpec moved = translate(p, v);
    const Vec3 anchor = slide_to_plane(moved.anchor, p.direction, axis);
    if (norm(anchor - q.anchor) > tol) continue;
    if (p.radius == 0.0) return true;
    const HelixSpec r = rebase(moved, anchor, p.direction);
    double dphi = std::abs(r.phase - q.phase);
    dphi = std::min(dphi, kTwoPi - dphi);
    if (dphi <= tol) return true;
  }
  return false;
}

bool same_curve(const HelixSpec& a, const HelixSpec& b, const Lattice& lattice, double tol) {
  return same_canonical(canonicalize(a, lattice), canonicalize(b, lattice), lattice, tol);
}

}  // namespace tphw
