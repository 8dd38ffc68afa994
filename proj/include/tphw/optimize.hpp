// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tphw/proximity.hpp"
#include "tphw/weave.hpp"

namespace tphw {

struct OptimizeConfig {
  int max_iterations = 60;  // coordinate sweeps
  double step_init = 0.25;
  double step_min = 1e-5;
  std::uint64_t seed = 0;
  double tolerance = 1e-12;
  int grid_n = kDefaultGridN;
};

/// Throws InvalidArgument when the config breaks its invariants.
void check_config(const OptimizeConfig& cfg);

struct SearchResult {
  std::vector<double> x;
  double objective = 0.0;
  int iterations = 0;
  int evaluations = 0;
  /// Accepted objective values in order; non-decreasing by construction.
  std::vector<double> history;
};

/// Cyclic coordinate search maximizing `f`. Each sweep visits the
/// coordinates in a seed-determined order and tries +-step; a move is kept
/// only when it raises the objective by more than `tolerance`. The step is
/// halved after a sweep without improvement. `scale[k]` multiplies the step
/// for coordinate k.
SearchResult coordinate_search(const std::function<double(const std::vector<double>&)>& f,
                               std::vector<double> x0, const std::vector<double>& scale,
                               const OptimizeConfig& cfg);

/// Half the global minimum centerline distance.
double max_tube_radius(const WeaveSpec& w, int grid_n = kDefaultGridN);

/// Objective used by the optimizers: minimum centerline distance.
double clearance_objective(const WeaveSpec& w, int grid_n = kDefaultGridN);

/// Maximizes the objective over all helix phases; other fields unchanged.
WeaveSpec optimize_phases(const WeaveSpec& w, const OptimizeConfig& cfg = {},
                          SearchResult* trace = nullptr);

/// helices[target] = transform(helices[source], q) + shift.
struct HelixImage {
  std::size_t target = 0;
  std::size_t source = 0;
  Mat3 q = kIdentity;
  Vec3 shift;
};

/// Free anchor coordinate: component `axis` (0..2) of helices[helix].anchor.
struct FreeCoordinate {
  std::size_t helix = 0;
  int axis = 0;
};

struct SymmetryConstraint {
  std::vector<FreeCoordinate> free;
  std::vector<HelixImage> images;

  /// Recomputes every image from its source, in order.
  void apply(WeaveSpec& w) const;
  /// Largest anchor/direction/phase deviation of `w` from its constrained form.
  double residual(const WeaveSpec& w) const;
};

/// Helices 3k..3k+2 for k < n/3: helix 3k is free in the two coordinates
/// transverse to its axis, 3k+1 and 3k+2 are its cyclic (x,y,z)->(z,x,y)
/// images.
SymmetryConstraint cyclic_constraint(const WeaveSpec& w);

WeaveSpec optimize_anchors(const WeaveSpec& w, const OptimizeConfig& cfg,
                           const SymmetryConstraint& constraint, SearchResult* trace = nullptr);

/// Bisection on a radius predicate until the bracket is narrower than
/// `width` (default 1e-4 (r_high - r_low)); returns the bracket midpoint.
/// Throws SamePredicate when the predicate agrees at both ends.
double find_transition(const std::function<bool(double)>& predicate, double r_low, double r_high,
                       double width = 0.0);

}  // namespace tphw
