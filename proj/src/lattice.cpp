// SPDX-License-Identifier: Apache-2.0
#include "tphw/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tphw/error.hpp"

namespace tphw {

std::vector<Mat3> cube_rotations() {
  std::vector<Mat3> out;
  constexpr int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  for (const auto& p : perms) {
    for (int signs = 0; signs < 8; ++signs) {
      Mat3 m{{0, 0, 0, 0, 0, 0, 0, 0, 0}};
      for (int r = 0; r < 3; ++r) m.m[r * 3 + p[r]] = (signs >> r & 1) ? -1.0 : 1.0;
      if (det(m) > 0) out.push_back(m);
    }
  }
  return out;
}

Lattice::Lattice(double period, Centering centering) : period_(period), centering_(centering) {
  if (!(period > 0.0) || !std::isfinite(period))
    throw Error(ErrorKind::InvariantViolation, "lattice period must be positive");
}

bool Lattice::contains(const Vec3& t, double tol) const {
  auto near_int = [&](double v) { return std::abs(v - std::round(v)) * period_ <= tol; };
  Vec3 f = t / period_;
  if (near_int(f.x) && near_int(f.y) && near_int(f.z)) return true;
  if (body_centered()) {
    Vec3 g = f - Vec3{0.5, 0.5, 0.5};
    return near_int(g.x) && near_int(g.y) && near_int(g.z);
  }
  return false;
}

Vec3 Lattice::minimum_image(const Vec3& delta) const {
  auto wrap = [&](Vec3 v) {
    return Vec3{v.x - period_ * std::round(v.x / period_), v.y - period_ * std::round(v.y / period_),
                v.z - period_ * std::round(v.z / period_)};
  };
  Vec3 best = wrap(delta);
  if (body_centered()) {
    const double h = 0.5 * period_;
    Vec3 alt = wrap(delta - Vec3{h, h, h});
    if (norm2(alt) < norm2(best)) best = alt;
  }
  return best;
}

std::vector<Vec3> Lattice::translations_within(const Vec3& center, double radius) const {
  std::vector<Vec3> out;
  auto scan = [&](double offset) {
    int lo[3], hi[3];
    for (int k = 0; k < 3; ++k) {
      lo[k] = static_cast<int>(std::floor((center[k] - radius) / period_ - offset));
      hi[k] = static_cast<int>(std::ceil((center[k] + radius) / period_ - offset));
    }
    for (int i = lo[0]; i <= hi[0]; ++i)
      for (int j = lo[1]; j <= hi[1]; ++j)
        for (int k = lo[2]; k <= hi[2]; ++k) {
          Vec3 t{(i + offset) * period_, (j + offset) * period_, (k + offset) * period_};
          if (norm(t - center) <= radius) out.push_back(t);
        }
  };
  scan(0.0);
  if (body_centered()) scan(0.5);
  std::sort(out.begin(), out.end(), [](const Vec3& a, const Vec3& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
  });
  return out;
}

std::vector<Vec3> family_directions(DirectionFamily family) {
  if (family == DirectionFamily::Fam100) return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  const double c = 1.0 / std::sqrt(3.0);
  return {{c, c, c}, {c, -c, -c}, {-c, c, -c}, {-c, -c, c}};
}

std::optional<AxisClass> classify_axis(const Vec3& d, double tol) {
  const double n = norm(d);
  if (!(n > 0.0)) return std::nullopt;
  const Vec3 dn = d / n;
  for (auto fam : {DirectionFamily::Fam100, DirectionFamily::Fam111}) {
    auto dirs = family_directions(fam);
    for (int i = 0; i < static_cast<int>(dirs.size()); ++i) {
      if (norm(dn - dirs[i]) <= tol) return AxisClass{fam, i, +1};
      if (norm(dn + dirs[i]) <= tol) return AxisClass{fam, i, -1};
    }
  }
  return std::nullopt;
}

Frame frame_for_direction(const Vec3& d) {
  if (!is_finite(d) || std::abs(norm(d) - 1.0) > 1e-9)
    throw Error(ErrorKind::InvalidDirection, "axis direction must be a unit vector");
  Vec3 u;
  if (std::abs(d.z) < 1.0 - 1e-9) {
    u = normalized(cross(Vec3{0, 0, 1}, d));
  } else {
    u = {1, 0, 0};
  }
  return {u, cross(d, u), d};
}

double axis_repeat_length(const Vec3& d, const Lattice& lattice) {
  auto cls = classify_axis(d);
  if (!cls) throw Error(ErrorKind::UnsupportedAxis, "axis is neither <100> nor <111>");
  if (cls->family == DirectionFamily::Fam100) return lattice.period();
  const double diag = lattice.period() * std::sqrt(3.0);
  return lattice.body_centered() ? 0.5 * diag : diag;
}

std::vector<Vec3> image_translations(const Lattice& lattice, int shells) {
  if (shells < 0) throw Error(ErrorKind::InvalidArgument, "shells must be >= 0");
  const double L = lattice.period();
  std::vector<Vec3> out;
  for (int i = -shells; i <= shells; ++i)
    for (int j = -shells; j <= shells; ++j)
      for (int k = -shells; k <= shells; ++k) out.push_back(Vec3{i * L, j * L, k * L});
  if (lattice.body_centered()) {
    for (int i = -shells; i < shells; ++i)
      for (int j = -shells; j < shells; ++j)
        for (int k = -shells; k < shells; ++k)
          out.push_back(Vec3{(i + 0.5) * L, (j + 0.5) * L, (k + 0.5) * L});
    std::sort(out.begin(), out.end(), [](const Vec3& a, const Vec3& b) {
      if (a.x != b.x) return a.x < b.x;
      if (a.y != b.y) return a.y < b.y;
      return a.z < b.z;
    });
  }
  return out;
}

}  // namespace tphw
