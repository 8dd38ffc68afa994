// SPDX-License-Identifier: Apache-2.0
#include "tphw/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "tphw/error.hpp"

namespace tphw {

void check_config(const OptimizeConfig& cfg) {
  if (cfg.max_iterations < 1) throw Error(ErrorKind::InvalidArgument, "max_iterations must be >= 1");
  if (!(cfg.step_min > 0.0) || !(cfg.step_min < cfg.step_init))
    throw Error(ErrorKind::InvalidArgument, "need 0 < step_min < step_init");
  if (!(cfg.tolerance >= 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be >= 0");
}

SearchResult coordinate_search(const std::function<double(const std::vector<double>&)>& f,
                               std::vector<double> x0, const std::vector<double>& scale,
                               const OptimizeConfig& cfg) {
  check_config(cfg);
  if (scale.size() != x0.size()) throw Error(ErrorKind::InvalidArgument, "scale size mismatch");
  SearchResult r;
  r.x = std::move(x0);
  r.objective = f(r.x);
  r.evaluations = 1;
  r.history.push_back(r.objective);
  if (r.x.empty()) return r;

  std::mt19937_64 rng(cfg.seed);
  std::vector<std::size_t> order(r.x.size());
  std::iota(order.begin(), order.end(), 0);
  double step = cfg.step_init;
  while (r.iterations < cfg.max_iterations && step >= cfg.step_min) {
    ++r.iterations;
    std::shuffle(order.begin(), order.end(), rng);
    bool improved = false;
    for (std::size_t k : order) {
      for (double sign : {1.0, -1.0}) {
        std::vector<double> y = r.x;
        y[k] += sign * step * scale[k];
        const double fy = f(y);
        ++r.evaluations;
        if (fy > r.objective + cfg.tolerance) {
          r.x = std::move(y);
          r.objective = fy;
          r.history.push_back(fy);
          improved = true;
          break;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return r;
}

double clearance_objective(const WeaveSpec& w, int grid_n) { return min_centerline_distance(w, grid_n); }

double max_tube_radius(const WeaveSpec& w, int grid_n) { return 0.5 * min_centerline_distance(w, grid_n); }

WeaveSpec optimize_phases(const WeaveSpec& w, const OptimizeConfig& cfg, SearchResult* trace) {
  require_constructed(w);
  std::vector<double> x0;
  for (const auto& h : w.helices) x0.push_back(h.phase);
  auto build = [&](const std::vector<double>& x) {
    WeaveSpec out = w;
    for (std::size_t k = 0; k < x.size(); ++k) out.helices[k].phase = normalize_angle(x[k]);
    return out;
  };
  SearchResult r = coordinate_search(
      [&](const std::vector<double>& x) { return clearance_objective(build(x), cfg.grid_n); }, x0,
      std::vector<double>(x0.size(), 1.0), cfg);
  WeaveSpec out = r.iterations > 0 && r.history.size() > 1 ? build(r.x) : w;
  if (trace) *trace = std::move(r);
  return out;
}

void SymmetryConstraint::apply(WeaveSpec& w) const {
  for (const auto& im : images) {
    const double tube = w.helices.at(im.target).tube_radius;
    w.helices.at(im.target) = transform(w.helices.at(im.source), im.q, im.shift);
    w.helices[im.target].tube_radius = tube;
  }
}

double SymmetryConstraint::residual(const WeaveSpec& w) const {
  double r = 0.0;
  for (const auto& im : images) {
    const HelixSpec want = transform(w.helices.at(im.source), im.q, im.shift);
    const HelixSpec& got = w.helices.at(im.target);
    r = std::max({r, norm(want.anchor - got.anchor), norm(want.direction - got.direction)});
    const double dphi = std::abs(want.phase - got.phase);
    r = std::max(r, std::min(dphi, kTwoPi - dphi));
  }
  return r;
}

SymmetryConstraint cyclic_constraint(const WeaveSpec& w) {
  if (w.helices.size() % 3 != 0)
    throw Error(ErrorKind::InvalidArgument, "cyclic constraint needs a multiple of three helices");
  SymmetryConstraint c;
  for (std::size_t g = 0; g < w.helices.size(); g += 3) {
    const auto cls = classify_axis(w.helices[g].direction);
    if (!cls || cls->family != DirectionFamily::Fam100)
      throw Error(ErrorKind::UnsupportedAxis, "cyclic constraint needs axis-aligned generators");
    for (int axis = 0; axis < 3; ++axis)
      if (axis != cls->index) c.free.push_back({g, axis});
    c.images.push_back({g + 1, g, kCyclicRotation, {}});
    c.images.push_back({g + 2, g + 1, kCyclicRotation, {}});
  }
  return c;
}

WeaveSpec optimize_anchors(const WeaveSpec& w, const OptimizeConfig& cfg,
                           const SymmetryConstraint& constraint, SearchResult* trace) {
  require_constructed(w);
  std::vector<double> x0;
  for (const auto& fc : constraint.free) {
    const Vec3& a = w.helices.at(fc.helix).anchor;
    x0.push_back(fc.axis == 0 ? a.x : fc.axis == 1 ? a.y : a.z);
  }
  auto build = [&](const std::vector<double>& x) {
    WeaveSpec out = w;
    for (std::size_t k = 0; k < x.size(); ++k) {
      Vec3& a = out.helices[constraint.free[k].helix].anchor;
      (constraint.free[k].axis == 0 ? a.x : constraint.free[k].axis == 1 ? a.y : a.z) = x[k];
    }
    constraint.apply(out);
    return out;
  };
  if (x0.empty()) {
    if (trace) *trace = SearchResult{{}, clearance_objective(w, cfg.grid_n), 0, 1, {}};
    return w;
  }
  SearchResult r = coordinate_search(
      [&](const std::vector<double>& x) { return clearance_objective(build(x), cfg.grid_n); }, x0,
      std::vector<double>(x0.size(), w.lattice.period()), cfg);
  WeaveSpec out = build(r.x);
  if (trace) *trace = std::move(r);
  return out;
}

double find_transition(const std::function<bool(double)>& predicate, double r_low, double r_high,
                       double width) {
  if (!(r_low < r_high)) throw Error(ErrorKind::InvalidArgument, "need r_low < r_high");
  const bool lo = predicate(r_low);
  if (lo == predicate(r_high)) throw Error(ErrorKind::SamePredicate, "predicate agrees at both ends");
  if (width <= 0.0) width = 1e-4 * (r_high - r_low);
  double a = r_low, b = r_high;
  while (b - a > width) {
    const double m = 0.5 * (a + b);
    (predicate(m) == lo ? a : b) = m;
  }
  return 0.5 * (a + b);
}

}  // namespace tphw
