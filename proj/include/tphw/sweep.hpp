// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tphw/crossing.hpp"
#include "tphw/optimize.hpp"

namespace tphw {

struct SweepConfig {
  AnalysisConfig analysis;
  OptimizeConfig optimize;
  /// Re-run optimize_phases at every radius, starting from the catalog phases.
  bool reoptimize_phases = true;
  /// Tube radius at each sample is (d_min - gap_margin L) / 2.
  double gap_margin = 0.005;
};

struct SweepSample {
  double radius = 0.0;
  SignatureHistogram histogram;
  double min_gap = 0.0;
  double min_distance = 0.0;
  bool percolating = false;
};

struct SweepReport {
  std::string name;
  std::vector<SweepSample> samples;
  /// Radii where the set of signature classes changes, bisected to
  /// (r_to - r_from) / (100 steps).
  std::vector<double> transitions;
};

/// The weave rebuilt at winding radius `r` (units of L), phases optimized
/// from the catalog seed when configured, tube radii set by the margin rule.
WeaveSpec sweep_weave(std::string_view name, double r, const SweepConfig& cfg = {});

SweepSample sample_radius(std::string_view name, double r, const SweepConfig& cfg = {});

/// `steps` equally spaced radii from r_from to r_to inclusive.
SweepReport radius_sweep(std::string_view name, double r_from, double r_to, int steps,
                         const SweepConfig& cfg = {});

/// Set of classes present, ignoring counts. Samples whose key differs are
/// on different sides of a transition.
std::vector<SignatureClass> class_key(const SweepSample& s);

/// Consecutive distinct classes of the samples that show exactly one
/// non-percolating class, in radius order.
std::vector<SignatureClass> single_class_sequence(const SweepReport& r);

}  // namespace tphw
