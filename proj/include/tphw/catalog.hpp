// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tphw/weave.hpp"

namespace tphw {

/// Version of the frozen catalog parameters below. Bump whenever a frozen
/// number changes so saved weave files can be traced to their source.
inline constexpr int kCatalogVersion = 1;

enum class RecipeKind { None, Simple100, Laves100, Gyroid100, Tetra100, Axial111 };
std::string_view to_string(RecipeKind k);

/// Frozen construction parameters of one catalog entry, in units of L.
struct FrozenRecipe {
  RecipeKind kind = RecipeKind::None;
  double radius = 0.0;
  double phase = 0.0;
  double tube_radius = 0.0;
  double anchor_x = 0.0;  // Simple100 only
  double anchor_y = 0.0;  // Simple100 only
  int turns = 1;
  int helices_per_axis = 1;  // Axial111 only
  int line_set = 0;          // Axial111 only: which axis-line set
  /// How the numbers were obtained.
  std::string_view method;
};

struct CatalogEntry {
  std::string name;
  std::string alias;
  ExpectedProperties expected;
  FrozenRecipe recipe;
};

/// All nineteen entries in catalog order.
const std::vector<CatalogEntry>& catalog();

/// Entry by display name or ASCII alias (case-insensitive for aliases).
const CatalogEntry* find_entry(std::string_view name);

/// One WeaveSpec per row; unconstructed rows carry no helices.
std::vector<WeaveSpec> catalog_entries();

/// Per-call parameter overrides for build_weave. Lengths in units of L.
struct Overrides {
  std::optional<double> radius;
  std::optional<double> tube_radius;
  std::optional<double> phase;
  std::optional<double> anchor_x;
  std::optional<double> anchor_y;
  std::optional<int> turns;

  bool empty() const noexcept {
    return !radius && !tube_radius && !phase && !anchor_x && !anchor_y && !turns;
  }
};

/// Builds the entry's helices from its recipe with overrides applied.
/// Throws UnknownWeave, UnconstructedWeave (tier C) or IncommensurateHelix.
WeaveSpec build_weave(std::string_view name, const Overrides& overrides = {});

/// Lattice used by the entry's recipe, for period L.
Lattice recipe_lattice(const CatalogEntry& entry, double L = 1.0);

}  // namespace tphw
