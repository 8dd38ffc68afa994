// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tphw/helix.hpp"
#include "tphw/lattice.hpp"

namespace tphw {

enum class PackingLabel { PiPlusMinus, PiStar, Gamma, OmegaPlusMinus, SigmaPlusMinus, SigmaStar, None };
enum class ChiralityClass { One, Double, Both };
enum class Tier { A, B, C };
enum class ConstructionStatus { Constructed, Unconstructed };

/// Expected properties of one catalog row.
struct ExpectedProperties {
  PackingLabel packing = PackingLabel::None;
  std::vector<int> helices_per_crossing;
  int helices_per_unit = 1;
  ChiralityClass chirality = ChiralityClass::One;
  std::vector<std::string> crossing_types;
  Tier tier = Tier::C;

  friend bool operator==(const ExpectedProperties&, const ExpectedProperties&) = default;
};

/// Optimizer settings that produced a frozen weave. Informational only.
struct Provenance {
  std::string method;
  int max_iterations = 0;
  double step_init = 0.0;
  double step_min = 0.0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  double objective = 0.0;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// A lattice plus the helices of one periodic unit. The full weave is the
/// orbit of `helices` under the lattice translations.
struct WeaveSpec {
  std::string name;
  Lattice lattice;
  std::vector<HelixSpec> helices;
  ExpectedProperties expected;
  ConstructionStatus status = ConstructionStatus::Unconstructed;
  std::optional<Provenance> provenance;

  bool constructed() const noexcept { return status == ConstructionStatus::Constructed; }

  friend bool operator==(const WeaveSpec&, const WeaveSpec&) = default;
};

/// Throws InvariantViolation (naming the invariant) or IncommensurateHelix.
void check_invariants(const WeaveSpec& w);

/// Throws UnconstructedWeave unless the weave carries geometry.
void require_constructed(const WeaveSpec& w);

/// Copy with every length (lattice, anchors, radii, pitches, tubes) scaled.
WeaveSpec scaled(const WeaveSpec& w, double s);
/// Copy with every helix mapped through x -> q x + shift.
WeaveSpec transformed(const WeaveSpec& w, const Mat3& q, const Vec3& shift = {});
/// Copy with every tube radius set to `rho`.
WeaveSpec with_tube_radius(const WeaveSpec& w, double rho);

std::string_view to_string(PackingLabel v);
std::string_view to_string(ChiralityClass v);
std::string_view to_string(Tier v);
std::string_view to_string(ConstructionStatus v);
std::optional<PackingLabel> packing_from_string(std::string_view s);
std::optional<ChiralityClass> chirality_from_string(std::string_view s);
std::optional<Tier> tier_from_string(std::string_view s);
std::optional<ConstructionStatus> status_from_string(std::string_view s);

}  // namespace tphw
