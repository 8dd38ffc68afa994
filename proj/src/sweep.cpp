// SPDX-License-Identifier: Apache-2.0
#include "tphw/sweep.hpp"

#include <algorithm>

#include "tphw/catalog.hpp"
#include "tphw/error.hpp"

namespace tphw {

WeaveSpec sweep_weave(std::string_view name, double r, const SweepConfig& cfg) {
  Overrides o;
  o.radius = r;
  o.tube_radius = 0.0;
  WeaveSpec w = build_weave(name, o);
  if (cfg.reoptimize_phases) w = optimize_phases(w, cfg.optimize);
  const double L = w.lattice.period();
  const double d = min_centerline_distance(w, cfg.analysis.grid_n);
  return with_tube_radius(w, std::max(0.0, 0.5 * (d - cfg.gap_margin * L)));
}

SweepSample sample_radius(std::string_view name, double r, const SweepConfig& cfg) {
  const WeaveSpec w = sweep_weave(name, r, cfg);
  SweepSample s;
  s.radius = r;
  s.min_distance = min_centerline_distance(w, cfg.analysis.grid_n);
  s.min_gap = s.min_distance - 2.0 * w.helices.front().tube_radius;
  const CrossingAnalysis a = analyze_crossings(w, cfg.analysis);
  s.histogram = a.histogram;
  s.percolating = std::any_of(a.signatures.begin(), a.signatures.end(),
                              [](const CrossingSignature& g) { return g.percolating; });
  return s;
}

std::vector<SignatureClass> class_key(const SweepSample& s) {
  std::vector<SignatureClass> out;
  for (const auto& [c, n] : s.histogram) out.push_back(c);
  return out;
}

SweepReport radius_sweep(std::string_view name, double r_from, double r_to, int steps,
                         const SweepConfig& cfg) {
  if (!(r_from < r_to)) throw Error(ErrorKind::InvalidArgument, "sweep needs from < to");
  if (steps < 2) throw Error(ErrorKind::InvalidArgument, "sweep needs at least 2 steps");
  SweepReport rep;
  rep.name = std::string(name);
  for (int k = 0; k < steps; ++k) {
    const double r = k + 1 == steps ? r_to : r_from + (r_to - r_from) * k / (steps - 1);
    rep.samples.push_back(sample_radius(name, r, cfg));
  }
  const double width = (r_to - r_from) / (100.0 * steps);
  for (std::size_t k = 0; k + 1 < rep.samples.size(); ++k) {
    const auto lo = class_key(rep.samples[k]);
    if (lo == class_key(rep.samples[k + 1])) continue;
    rep.transitions.push_back(find_transition(
        [&](double r) { return class_key(sample_radius(name, r, cfg)) == lo; },
        rep.samples[k].radius, rep.samples[k + 1].radius, width));
  }
  return rep;
}

std::vector<SignatureClass> single_class_sequence(const SweepReport& r) {
  std::vector<SignatureClass> out;
  for (const auto& s : r.samples) {
    if (s.percolating || s.histogram.size() != 1) continue;
    const SignatureClass& c = s.histogram.begin()->first;
    if (out.empty() || out.back() != c) out.push_back(c);
  }
  return out;
}

}  // namespace tphw
